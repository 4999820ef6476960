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

#ifndef OCRBENCH_PROCESS_H_
#define OCRBENCH_PROCESS_H_

#include <filesystem>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

namespace ocrbench {

struct ProcessResult {
  bool spawned = false;
  int exit_code = -1;  // 128 + signal number when killed by a signal
  double seconds = 0.0;
  std::string error;   // set when the process could not be started
};

// Runs argv directly (no shell). stdout and stderr both go to `log_path`,
// which is truncated first; stdin is /dev/null.
ProcessResult RunProcess(const std::vector<std::string>& argv,
                         const std::filesystem::path& log_path);

// PATH lookup for bare names; names containing '/' are checked as given.
std::optional<std::filesystem::path> FindExecutable(std::string_view name);

}  // namespace ocrbench

#endif  // OCRBENCH_PROCESS_H_
