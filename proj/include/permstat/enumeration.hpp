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

// Exhaustive enumeration over S_n and S_{n,k+1}, the count tables built on
// top of it, and the verification sweep that checks every bijection and
// equinumerosity property up to a given n.

#ifndef PERMSTAT_ENUMERATION_HPP_
#define PERMSTAT_ENUMERATION_HPP_

#include <algorithm>
#include <array>
#include <cstdint>
#include <functional>
#include <numeric>
#include <optional>
#include <ostream>
#include <stdexcept>
#include <string>
#include <vector>

#include "permstat/bijections.hpp"
#include "permstat/waves.hpp"
#include "permstat/word.hpp"

namespace permstat {

// Sweeps above this n are refused unless forced.
inline constexpr int kSafetyCap = 10;

class SafetyCapError : public std::domain_error {
 public:
  using std::domain_error::domain_error;
};

void check_sweep_size(int n, bool force);

// n! / (n-r)!
std::uint64_t falling_factorial(int n, int r);

// Permutations of [n] in lexicographic order. When `first` is set only the
// chunk starting with that letter is visited; the chunks for first = 1..n
// partition S_n.
template <typename Fn>
void for_each_permutation(int n, Fn&& fn, std::optional<Letter> first = std::nullopt) {
  if (n < 0) throw std::out_of_range("for_each_permutation: n must be >= 0");
  std::vector<Letter> p(static_cast<std::size_t>(n));
  std::iota(p.begin(), p.end(), 1);
  if (first) {
    if (*first < 1 || *first > n) throw std::out_of_range("for_each_permutation: bad chunk");
    std::rotate(p.begin(), p.begin() + (*first - 1), p.begin() + *first);
  }
  do {
    if (first && p.front() != *first) break;
    fn(Word::assume_valid(p));
  } while (std::next_permutation(p.begin(), p.end()));
}

std::vector<Word> all_permutations(int n);

// Semipermutations of S_{n,k+1}, ordered lexicographically by rho.
template <typename Fn>
void for_each_semipermutation(int n, int k, Fn&& fn) {
  if (n < 1 || k < 0 || k > n - 1) {
    throw std::out_of_range("for_each_semipermutation: need n >= 1, 0 <= k <= n-1");
  }
  const auto r = static_cast<std::size_t>(k + 1);
  // Lexicographic r-arrangements: the first r entries of each permutation
  // whose tail is decreasing, visited via next_permutation after reversing
  // the tail.
  std::vector<Letter> p(static_cast<std::size_t>(n));
  std::iota(p.begin(), p.end(), 1);
  while (true) {
    std::vector<Letter> rho(p.begin(), p.begin() + r);
    std::vector<Letter> alpha0(p.begin() + r, p.end());
    std::sort(alpha0.begin(), alpha0.end());
    fn(Semipermutation(std::move(alpha0), Word::assume_valid(std::move(rho)), n));
    std::reverse(p.begin() + r, p.end());
    if (!std::next_permutation(p.begin(), p.end())) break;
  }
}

// The four sets counted side by side for fixed n, k:
//   semipermutations of S_{n,k+1} by des,
//   sigma in S_n with |srw(sigma)| >= n-k by des,
//   sigma in S_n with |sw(sigma)| >= n-k by des,
//   sigma in S_n with rightmost hook length >= n-k by lec.
enum class FourSet { kSemipermutations, kLongSrw, kLongSw, kLecLongHook };

const char* to_string(FourSet set);

struct CountTable {
  int n = 0;
  int k = 0;
  FourSet label = FourSet::kSemipermutations;
  std::vector<std::uint64_t> counts;  // counts[i] for i = 0 .. n-1

  std::uint64_t total() const;
  std::uint64_t at(int i) const {
    return i >= 0 && i < static_cast<int>(counts.size()) ? counts[i] : 0;
  }
};

std::array<CountTable, 4> four_set_tables(int n, int k, bool force = false);

struct FourSetCounts {
  std::uint64_t semipermutations = 0;
  std::uint64_t long_srw = 0;
  std::uint64_t long_sw = 0;
  std::uint64_t lec_long_hook = 0;
  // Set for i == 0, which lies outside the range the equality is usually
  // stated for (i > 0); the counts are still exact.
  bool outside_stated_range = false;

  bool all_equal() const {
    return semipermutations == long_srw && long_srw == long_sw &&
           long_sw == lec_long_hook;
  }
};

FourSetCounts count_four_sets(int n, int k, int i, bool force = false);

// beta_{2i} for all i, by counting semipermutations.
CountTable eulerian_table(int n, int k, bool force = false);

// ---- verification --------------------------------------------------------

// The maps under test. verify_all uses these slots instead of calling the
// library directly so that a deliberately broken map can be swapped in.
struct Toolkit {
  std::function<Word(const Word&)> theta = &permstat::theta;
  std::function<Word(const Word&)> eta = &permstat::eta;
  std::function<Word(const Word&)> psi = &permstat::psi;
  std::function<Word(const Word&)> phi = &permstat::phi;
  std::function<Word(const Word&, const Word&, int)> rins = &permstat::rins;
  std::function<Word(const Word&, const Word&)> ins = &permstat::ins;
};

struct CheckResult {
  std::string name;
  std::string params;  // e.g. "n=5" or "n=5 k=2"
  bool passed = true;
  std::uint64_t cases = 0;
  std::optional<std::string> counterexample;
  std::string detail;
};

struct Report {
  std::vector<CheckResult> checks;

  bool passed() const;
  std::size_t failures() const;
  void write_text(std::ostream& os) const;
  // One JSON object per line: name, params, status, cases, counterexample.
  void write_json(std::ostream& os) const;
};

// Runs every exhaustive property for each n <= n_max. Failures carry the
// first counterexample in (length, lexicographic) order.
Report verify_all(int n_max, const Toolkit& toolkit = {}, bool force = false);

// Classical Eulerian numbers A(n, j) for j = 1..n by counting descents over
// S_n directly.
std::vector<std::uint64_t> eulerian_row_by_descents(int n);

}  // namespace permstat

#endif  // PERMSTAT_ENUMERATION_HPP_
