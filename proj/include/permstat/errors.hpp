// Copyright 2026 The permstat Authors. All Rights Reserved.
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

#ifndef PERMSTAT_ERRORS_HPP_
#define PERMSTAT_ERRORS_HPP_

#include <cstddef>
#include <stdexcept>
#include <string>

namespace permstat {

// Malformed text input. `token` is the 1-based index of the offending token,
// 0 when the error is not tied to a single token.
class ParseError : public std::invalid_argument {
 public:
  ParseError(const std::string& what, std::size_t token = 0)
      : std::invalid_argument(what), token_(token) {}
  std::size_t token() const { return token_; }

 private:
  std::size_t token_;
};

// Independent computations of the same quantity disagreed.
class ConsistencyError : public std::logic_error {
 public:
  using std::logic_error::logic_error;
};

}  // namespace permstat

#endif  // PERMSTAT_ERRORS_HPP_
