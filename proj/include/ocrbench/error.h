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

#ifndef OCRBENCH_ERROR_H_
#define OCRBENCH_ERROR_H_

#include <stdexcept>
#include <string>

namespace ocrbench {

// Bad input: malformed files, out-of-range arguments, naming collisions.
// The CLI maps this to exit code 1.
class ValidationError : public std::runtime_error {
 public:
  explicit ValidationError(const std::string& what)
      : std::runtime_error(what) {}
};

// The host is missing something: a directory, an executable, write access.
// The CLI maps this to exit code 2.
class EnvironmentError : public std::runtime_error {
 public:
  explicit EnvironmentError(const std::string& what)
      : std::runtime_error(what) {}
};

}  // namespace ocrbench

#endif  // OCRBENCH_ERROR_H_
