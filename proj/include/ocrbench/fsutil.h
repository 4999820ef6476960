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

#ifndef OCRBENCH_FSUTIL_H_
#define OCRBENCH_FSUTIL_H_

#include <filesystem>
#include <string>
#include <string_view>

namespace ocrbench {

namespace fs = std::filesystem;

// Reads a whole file. Throws EnvironmentError if it cannot be opened.
std::string ReadFile(const fs::path& path);

// Writes `content` to a sibling temp file and renames it over `path`, so
// readers never observe a partial file.
void WriteFileAtomic(const fs::path& path, std::string_view content);

// Like WriteFileAtomic, but leaves the file untouched when it already holds
// exactly `content`. Returns true when the file was (re)written.
bool WriteFileIfChanged(const fs::path& path, std::string_view content);

// Filename stem before the first dot: "9100.gt.txt" -> "9100".
std::string StemBeforeFirstDot(const fs::path& path);

// Orders identifiers numerically when both are digit strings, otherwise
// lexicographically; digit strings sort before everything else.
bool IdLess(std::string_view a, std::string_view b);

}  // namespace ocrbench

#endif  // OCRBENCH_FSUTIL_H_
