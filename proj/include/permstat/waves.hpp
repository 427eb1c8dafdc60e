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

// Word surgery around two kinds of distinguished blocks:
//
//   * the special reverse wave, a prefix of w, with its descent count srdes
//     and the insertion rins that puts a removed prefix back;
//   * the special wave, a contiguous block of w (not necessarily the longest
//     wave it contains), with the insertion ins that undoes its removal.
//
// Both splits use a floor value below the block: the letter just left of it,
// or an implicit 0 when the block starts at position 1. Words hold positive
// letters only, so 0 is below everything.

#ifndef PERMSTAT_WAVES_HPP_
#define PERMSTAT_WAVES_HPP_

#include <cstddef>
#include <optional>

#include "permstat/word.hpp"

namespace permstat {

struct SrwSplit {
  Word srw;   // w_1 ... w_s
  Word rest;  // w_{s+1} ... w_l
  // 1-based position of the first descent; empty for increasing words.
  std::optional<std::size_t> t;
  std::size_t s = 0;  // 1-based end of the special reverse wave
};

// Throws std::domain_error on the empty word.
SrwSplit srw_split(const Word& w);

// des(srw) plus one when a descent separates srw from the rest.
int srdes(const SrwSplit& split);
int srdes(const Word& w);

// The unique word whose special reverse wave rearranges b, whose remainder
// is a, and whose srdes is d. Requires b non-empty, 1 <= d <= |b|-1 and
// disjoint values; throws std::domain_error otherwise. a may be empty.
Word rins(const Word& a, const Word& b, int d);

struct SwSplit {
  Word sw;    // w_r ... w_s
  Word rest;  // w_1 ... w_{r-1} w_{s+1} ... w_l
  std::size_t r = 0;               // 1-based
  std::optional<std::size_t> t;    // first descent; empty when increasing
  std::size_t s = 0;               // 1-based
};

// Throws std::domain_error on the empty word.
SwSplit sw_split(const Word& w);

// Inserts the proper wave b into a right after the longest increasing
// prefix of a lying below b's last letter. Throws std::domain_error when b is
// not a proper wave or the value sets overlap.
Word ins(const Word& a, const Word& b);

}  // namespace permstat

#endif  // PERMSTAT_WAVES_HPP_
