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

#ifndef PERMSTAT_BIJECTIONS_HPP_
#define PERMSTAT_BIJECTIONS_HPP_

#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "permstat/word.hpp"

namespace permstat {

// A pair (alpha0, rho): rho is an arrangement of k+1 distinct values of
// [n], alpha0 is the complementary set in increasing order.
class Semipermutation {
 public:
  // Throws std::domain_error unless alpha0 and rho partition [n] with rho
  // non-empty. When n is omitted it is |alpha0| + |rho|.
  Semipermutation(std::vector<Letter> alpha0, Word rho,
                  std::optional<int> n = std::nullopt);

  int n() const { return n_; }
  int k() const { return static_cast<int>(rho_.size()) - 1; }
  const std::vector<Letter>& alpha0() const { return alpha0_; }
  const Word& rho() const { return rho_; }

  friend bool operator==(const Semipermutation&,
                         const Semipermutation&) = default;
  friend auto operator<=>(const Semipermutation&,
                          const Semipermutation&) = default;

 private:
  int n_;
  std::vector<Letter> alpha0_;
  Word rho_;
};

// des(rho) + #{a in alpha0 : a > rho_1}.
int semiperm_des(const Semipermutation& sp);

// des -> lec bijection of words built from special reverse waves:
// theta(w) = theta(w \ srw(w)) * make_hook(srw(w), srdes(w)).
Word theta(const Word& w);
// Inverse of theta; re-inserts hooks left to right with rins.
Word eta(const Word& w);

// des -> lec bijection built from special waves:
// psi(w) = psi(w \ sw(w)) * make_hook(sw(w), des(sw(w))).
Word psi(const Word& w);
// Inverse of psi; re-inserts the wave of each hook left to right with ins.
Word phi(const Word& w);

// Semipermutations of S_{n,k+1} to permutations of [n] whose special reverse
// wave has length >= n-k. Preserves des.
Word mu(const Semipermutation& sp);
// Inverse of mu for a fixed k. Throws std::domain_error when w is not a
// permutation, k is out of range, or the special reverse wave is too short.
Semipermutation nu(const Word& w, int k);

// n+1-w_i entrywise; w must be a permutation of [n].
Word complement(const Word& w, int n);
Word reverse(const Word& w);

// "4,6,7|5 2 3 1 8"; empty alpha0 is "|5 2 3 1 8".
std::string to_string(const Semipermutation& sp);
// Throws ParseError on malformed text and std::domain_error when the values
// do not form [n].
Semipermutation parse_semipermutation(std::string_view text,
                                      std::optional<int> n = std::nullopt);

}  // namespace permstat

#endif  // PERMSTAT_BIJECTIONS_HPP_
