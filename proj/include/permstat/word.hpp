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

#ifndef PERMSTAT_WORD_HPP_
#define PERMSTAT_WORD_HPP_

#include <compare>
#include <cstddef>
#include <initializer_list>
#include <span>
#include <string>
#include <string_view>
#include <vector>

namespace permstat {

using Letter = int;

// A finite word of pairwise distinct positive integers. The empty word is
// valid. Indexing through operator[] is 0-based; every position reported to
// users (des_set, parse errors) is 1-based.
class Word {
 public:
  Word() = default;
  Word(std::initializer_list<Letter> letters);
  explicit Word(std::vector<Letter> letters);

  // Skips validation. Only for callers that build a word from pieces of words
  // already known to be valid with disjoint value sets.
  static Word assume_valid(std::vector<Letter> letters);

  std::size_t size() const { return letters_.size(); }
  bool empty() const { return letters_.empty(); }
  Letter operator[](std::size_t i) const { return letters_[i]; }
  Letter front() const { return letters_.front(); }
  Letter back() const { return letters_.back(); }

  auto begin() const { return letters_.begin(); }
  auto end() const { return letters_.end(); }

  std::span<const Letter> letters() const { return letters_; }
  const std::vector<Letter>& vec() const { return letters_; }

  // Letters in [first, last), 0-based.
  Word slice(std::size_t first, std::size_t last) const;
  // Sorted copy of the value set.
  std::vector<Letter> sorted_values() const;
  bool is_increasing() const;
  // True when the word uses each of 1..size() exactly once.
  bool is_permutation() const;

  friend bool operator==(const Word&, const Word&) = default;
  friend auto operator<=>(const Word&, const Word&) = default;

 private:
  std::vector<Letter> letters_;
};

// Concatenation; the operands must have disjoint value sets.
Word concat(const Word& a, const Word& b);

// ---- statistics ----------------------------------------------------------

// Descent positions i (1-based) with w_i > w_{i+1}.
std::vector<std::size_t> des_set(const Word& w);
int des(std::span<const Letter> w);
inline int des(const Word& w) { return des(w.letters()); }
int inv(std::span<const Letter> w);
inline int inv(const Word& w) { return inv(w.letters()); }

// w = gamma * hooks[0] * ... * hooks[k-1], gamma increasing, each hook
// a_1 > a_2 < a_3 < ... < a_s with s >= 2.
struct HookFactorization {
  Word gamma;
  std::vector<Word> hooks;

  friend bool operator==(const HookFactorization&,
                         const HookFactorization&) = default;
};

// Cuts repeatedly at the rightmost descent.
HookFactorization hook_factorization(const Word& w);

// Sum of inv over the hooks of the hook factorization.
int lec(const Word& w);

// Length of the rightmost hook; for an increasing word (the rightmost hook is
// the trivial hook w itself) this is size().
std::size_t rightmost_hook_length(const Word& w);

// ---- shapes --------------------------------------------------------------

// `trivial` is the increasing-word case that the definitions single out
// (trivial hook, trivial wave, trivial reverse wave).
enum class Shape { kNo, kTrivial, kProper };

const char* to_string(Shape shape);

Shape hook_shape(const Word& w);
// Prefix up to the maximum increasing, then the tail read right to left
// continues increasing: w_1 < ... < w_{c-1} < w_l < ... < w_c.
Shape reverse_wave_shape(const Word& w);
// w_l < ... < w_{c+1} < w_1 < ... < w_c.
Shape wave_shape(const Word& w);

inline bool is_hook(const Word& w) { return hook_shape(w) != Shape::kNo; }
inline bool is_wave(const Word& w) { return wave_shape(w) != Shape::kNo; }
inline bool is_reverse_wave(const Word& w) {
  return reverse_wave_shape(w) != Shape::kNo;
}

// ---- canonical rearrangements -------------------------------------------
//
// Each takes a set of distinct positive values (any order) and a statistic
// 0 <= d <= size-1, and throws std::out_of_range otherwise.

// The unique hook (trivial when d == 0) with inv == d:
// a_{d+1} a_1 ... a_d a_{d+2} ... a_l.
Word make_hook(std::span<const Letter> values, int d);
inline Word make_hook(const Word& values, int d) {
  return make_hook(values.letters(), d);
}

// The unique reverse wave with d descents:
// b_1 ... b_{l-d-1} b_l b_{l-1} ... b_{l-d}.
Word make_reverse_wave(std::span<const Letter> values, int d);
inline Word make_reverse_wave(const Word& values, int d) {
  return make_reverse_wave(values.letters(), d);
}

// The unique wave with d descents: b_{d+1} ... b_l b_d b_{d-1} ... b_1.
Word make_wave(std::span<const Letter> values, int d);
inline Word make_wave(const Word& values, int d) {
  return make_wave(values.letters(), d);
}

// ---- text format ---------------------------------------------------------

// "4 5 7 6 2 3 1 8"; the empty word is "".
std::string to_string(const Word& w);

// Accepts space separated base-10 entries, or a single token of at least two
// characters read digit by digit ("45762318"). Throws ParseError.
Word parse_word(std::string_view text);

}  // namespace permstat

#endif  // PERMSTAT_WORD_HPP_
