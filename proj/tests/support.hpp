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

#ifndef PERMSTAT_TESTS_SUPPORT_HPP_
#define PERMSTAT_TESTS_SUPPORT_HPP_

#include <string>
#include <vector>

#include "oracles.hpp"
#include "permstat/word.hpp"

namespace testing {

inline permstat::Word W(const char* text) { return permstat::parse_word(text); }

inline oracle::Seq seq(const permstat::Word& w) { return w.vec(); }

inline permstat::Word word(const oracle::Seq& s) { return permstat::Word(s); }

// Doctest prints this on failure.
inline std::string show(const permstat::Word& w) { return "[" + permstat::to_string(w) + "]"; }

}  // namespace testing

#endif  // PERMSTAT_TESTS_SUPPORT_HPP_
