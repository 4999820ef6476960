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

#ifndef OCRBENCH_CLI_H_
#define OCRBENCH_CLI_H_

#include <ostream>
#include <string>
#include <vector>

namespace ocrbench {

inline constexpr int kExitOk = 0;
inline constexpr int kExitValidation = 1;
inline constexpr int kExitEnvironment = 2;

// Entry point for the `ocrbench` tool. `args` excludes the program name.
// Returns 0 on success, 1 on a validation error (bad flags or inputs),
// 2 on an environment error (missing directories or executables).
int RunCli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace ocrbench

#endif  // OCRBENCH_CLI_H_
