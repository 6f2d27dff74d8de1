// Copyright 2026 The bsdiag Authors
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

#ifndef BSDIAG_ERRORS_HPP_
#define BSDIAG_ERRORS_HPP_

#include <stdexcept>
#include <string>

namespace bsdiag {

// Numeric values are shared with the C API status codes and CLI exit codes.
enum class ErrorCode : int {
  kInvalidArgument = 1,
  kBudgetExceeded = 2,
  kVerificationFailed = 3,
};

class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string& what)
      : std::runtime_error(what), code_(code) {}
  ErrorCode code() const noexcept { return code_; }

 private:
  ErrorCode code_;
};

[[noreturn]] inline void throw_invalid(const std::string& what) {
  throw Error(ErrorCode::kInvalidArgument, what);
}

[[noreturn]] inline void throw_budget(const std::string& what) {
  throw Error(ErrorCode::kBudgetExceeded, what);
}

}  // namespace bsdiag

#endif  // BSDIAG_ERRORS_HPP_
