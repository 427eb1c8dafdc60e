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

// Monomial basis of the cohomology of the wonderful model attached to the
// coordinate subspaces of dimension <= k in C^n, in subset form.
//
// A coordinate subspace {x_i = 0, i in S} is recorded by S, so subspace
// inclusion reverses subset inclusion and the codimension of the subspace is
// |S|. A basis monomial is a chain S_1 c S_2 c ... c S_t (smallest subset
// first) with exponents e_j such that
//
//   |S_j| >= n - k                                  for all j,
//   1 <= e_1 <= |S_1| - 1,                          |S_1| >= 2,
//   1 <= e_j <= |S_j| - |S_{j-1}| - 1,              |S_j| - |S_{j-1}| >= 2.
//
// The grade of a monomial is the sum of its exponents. Reading S_1 and the
// successive differences as hooks with inv equal to the exponents gives a
// grade preserving bijection onto permutations whose rightmost hook has
// length >= n - k, the empty chain going to the identity.

#ifndef PERMSTAT_COHOMOLOGY_HPP_
#define PERMSTAT_COHOMOLOGY_HPP_

#include <cstddef>
#include <cstdint>
#include <functional>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "permstat/word.hpp"

namespace permstat {

struct ChainFactor {
  std::vector<Letter> subset;  // ascending
  int exponent = 0;

  friend bool operator==(const ChainFactor&, const ChainFactor&) = default;
};

struct ChainMonomial {
  int n = 0;
  int k = 0;
  std::vector<ChainFactor> chain;  // smallest subset first

  int grade() const;
  friend bool operator==(const ChainMonomial&, const ChainMonomial&) = default;
};

struct Violation {
  std::size_t factor;  // 1-based factor index, 0 for the monomial itself
  std::string message;
};

// Every failed condition, in factor order. Empty means valid.
std::vector<Violation> validate_monomial(const ChainMonomial& m);

// Throws std::domain_error when the monomial is invalid.
Word monomial_to_permutation(const ChainMonomial& m);

// Throws std::domain_error when w is not a permutation, k is out of range, or
// the rightmost hook of a non-identity w is shorter than n - k.
ChainMonomial permutation_to_monomial(const Word& w, int k);

// Visits every valid monomial for (n, k), optionally only those of a given
// grade, in no particular order. Subsets are bitmasks internally, so n is
// limited to 63.
void for_each_basis_monomial(int n, int k, std::optional<int> grade,
                             const std::function<void(const ChainMonomial&)>& fn);

// Canonical order: by the list of subsets (each compared as an ascending
// integer list, shorter chains before their extensions), then by the
// exponent vector.
std::vector<ChainMonomial> enumerate_basis(int n, int k,
                                           std::optional<int> grade = std::nullopt);

// Number of basis monomials of grade i.
std::uint64_t count_basis(int n, int k, int i);

// beta_{2i} of the k-th space in the blowup sequence, computed by counting
// semipermutations, basis monomials and permutations with given lec and long
// rightmost hook. Throws ConsistencyError when the three counts differ.
std::uint64_t betti(int n, int k, int i);
std::vector<std::uint64_t> betti_row(int n, int k);

// "1,2,4,5:2;1,2,4,5,6,7,8:2"; the empty chain is "1".
std::string to_string(const ChainMonomial& m);
// n defaults to the largest value in the chain. Throws ParseError, and
// std::domain_error when the result is not a valid monomial.
ChainMonomial parse_monomial(std::string_view text, int k,
                             std::optional<int> n = std::nullopt);

}  // namespace permstat

#endif  // PERMSTAT_COHOMOLOGY_HPP_
