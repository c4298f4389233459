/*
Copyright 2026 The qnc Authors

Licensed under the Apache License, Version 2.0 (the "License");
you may not use this file except in compliance with the License.
You may obtain a copy of the License at

    http://www.apache.org/licenses/LICENSE-2.0

Unless required by applicable law or agreed to in writing, software
distributed under the License is distributed on an "AS IS" BASIS,
WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
See the License for the specific language governing permissions and
limitations under the License.
*/

#pragma once

#include <stdexcept>
#include <string>

namespace qnc {

enum class ErrorKind {
  Dimension,     // operands of incompatible dimension
  NotMember,     // vector outside the cone an operation requires
  Precondition,  // a mathematical hypothesis of the operation fails
  Unsupported,   // cone family or configuration outside the exact routines
  Parse,         // malformed text / JSON / CSV input
  Malformed,     // structurally invalid value (bad LP, empty matrix, ...)
};

class Error : public std::runtime_error {
 public:
  Error(ErrorKind kind, const std::string& what)
      : std::runtime_error(what), kind_(kind) {}

  ErrorKind kind() const noexcept { return kind_; }

 private:
  ErrorKind kind_;
};

[[noreturn]] inline void fail(ErrorKind kind, const std::string& what) {
  throw Error(kind, what);
}

}  // namespace qnc
