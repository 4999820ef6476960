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

#ifndef OCRBENCH_DOCUMENT_H_
#define OCRBENCH_DOCUMENT_H_

#include <filesystem>
#include <string>

namespace ocrbench {

// One evaluation unit. `id` is the shared filename stem ("9100").
struct DocumentPair {
  std::string id;
  std::string reference;
  std::string hypothesis;
  std::filesystem::path reference_path;
  std::filesystem::path hypothesis_path;
};

}  // namespace ocrbench

#endif  // OCRBENCH_DOCUMENT_H_
