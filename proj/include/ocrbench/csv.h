// Copyright 2026 The ocrbench Authors.
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#ifndef OCRBENCH_CSV_H_
#define OCRBENCH_CSV_H_

#include <string>
#include <string_view>
#include <vector>

namespace ocrbench::csv {

using Row = std::vector<std::string>;

// Parses RFC 4180 style CSV: comma separated, double-quoted fields may hold
// commas, quotes ("") and newlines. A trailing newline does not produce an
// empty row. Throws ValidationError on an unterminated quote.
std::vector<Row> Parse(std::string_view text);

// Quotes a field only when it needs it.
std::string Escape(std::string_view field);

std::string FormatRow(const Row& row);

// Shortest representation that round-trips through ParseDouble.
std::string FormatDouble(double value);

// Throws ValidationError when `text` is not entirely a number.
double ParseDouble(std::string_view text);

}  // namespace ocrbench::csv

#endif  // OCRBENCH_CSV_H_
