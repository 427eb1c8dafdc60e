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

#include <doctest.h>

#include <algorithm>
#include <set>
#include <stdexcept>
#include <utility>
#include <vector>

#include "oracles.hpp"
#include "permstat/cohomology.hpp"
#include "permstat/enumeration.hpp"
#include "permstat/errors.hpp"
#include "permstat/word.hpp"
#include "support.hpp"

using namespace permstat;
using testing::W;

namespace {

ChainMonomial worked_example() {
  return ChainMonomial{11, 7,
                       {{{1, 2, 4, 5}, 2},
                        {{1, 2, 4, 5, 6, 7, 8}, 2},
                        {{1, 2, 4, 5, 6, 7, 8, 9, 11}, 1}}};
}

oracle::Chain as_chain(const ChainMonomial& m) {
  oracle::Chain c;
  for (const auto& f : m.chain) c.emplace_back(f.subset, f.exponent);
  return c;
}

}  // namespace

TEST_SUITE("cohomology_basis") {

TEST_CASE("validation of the worked example") {
  CHECK(validate_monomial(worked_example()).empty());
  CHECK(worked_example().grade() == 5);

  auto bad = worked_example();
  bad.chain[0].exponent = 4;
  const auto v = validate_monomial(bad);
  REQUIRE(v.size() == 1);
  CHECK(v[0].factor == 1);

  CHECK(validate_monomial(ChainMonomial{5, 2, {}}).empty());
}

TEST_CASE("validation catches each condition") {
  // |S_1| < n - k.
  CHECK_FALSE(validate_monomial({5, 2, {{{1, 2}, 1}}}).empty());
  // gap of 1.
  CHECK_FALSE(validate_monomial({4, 3, {{{1, 2}, 1}, {{1, 2, 3}, 1}}}).empty());
  // not nested.
  CHECK_FALSE(validate_monomial({4, 3, {{{1, 2}, 1}, {{1, 3, 4, 2}, 1}, {{2, 3}, 1}}}).empty());
  // zero exponent.
  CHECK_FALSE(validate_monomial({4, 3, {{{1, 2}, 0}}}).empty());
  // values outside [n].
  CHECK_FALSE(validate_monomial({3, 2, {{{1, 4}, 1}}}).empty());
  // k out of range.
  CHECK_FALSE(validate_monomial({3, 3, {}}).empty());
}

TEST_CASE("monomial to permutation on worked examples") {
  const Word w = monomial_to_permutation(worked_example());
  CHECK(w == W("3 10 11 9 8 6 7 4 1 2 5"));
  CHECK(lec(w) == 5);
  CHECK(monomial_to_permutation({5, 2, {}}) == W("1 2 3 4 5"));
  const Word small = monomial_to_permutation({4, 3, {{{1, 2}, 1}}});
  CHECK(small == W("3 4 2 1"));
  CHECK(lec(small) == 1);
  auto bad = worked_example();
  bad.chain[0].exponent = 4;
  CHECK_THROWS_AS(monomial_to_permutation(bad), std::domain_error);
}

TEST_CASE("permutation to monomial on worked examples") {
  CHECK(permutation_to_monomial(W("3 10 11 9 8 6 7 4 1 2 5"), 7) == worked_example());
  CHECK(permutation_to_monomial(W("1 2 3 4"), 1) == ChainMonomial{4, 1, {}});
  CHECK_THROWS_AS(permutation_to_monomial(W("1 2 4 3"), 1), std::domain_error);
  CHECK_THROWS_AS(permutation_to_monomial(W("1 3"), 1), std::domain_error);
  CHECK_THROWS_AS(permutation_to_monomial(W("2 1"), 2), std::domain_error);
}

TEST_CASE("enumeration on small cases") {
  const auto one = enumerate_basis(2, 1, 1);
  REQUIRE(one.size() == 1);
  CHECK(one[0] == ChainMonomial{2, 1, {{{1, 2}, 1}}});
  const auto unit = enumerate_basis(5, 3, 0);
  REQUIRE(unit.size() == 1);
  CHECK(unit[0].chain.empty());
  CHECK_THROWS_AS(enumerate_basis(3, 3), std::out_of_range);
}

TEST_CASE("basis equals the brute-force chain set, n <= 6") {
  for (int n = 1; n <= 6; ++n) {
    for (int k = 0; k <= n - 1; ++k) {
      std::vector<oracle::Chain> ours;
      std::vector<std::pair<std::vector<oracle::Seq>, oracle::Seq>> keys;
      for (const auto& m : enumerate_basis(n, k)) {
        REQUIRE(validate_monomial(m).empty());
        ours.push_back(as_chain(m));
        keys.emplace_back();
        for (const auto& f : m.chain) {
          keys.back().first.push_back(f.subset);
          keys.back().second.push_back(f.exponent);
        }
      }
      CHECK(std::is_sorted(keys.begin(), keys.end()));
      auto brute = oracle::basis_chains(n, k);
      std::sort(ours.begin(), ours.end());
      std::sort(brute.begin(), brute.end());
      CHECK(ours == brute);
      CHECK(ours.size() == oracle::factorial_ratio(n, k + 1));
    }
  }
}

TEST_CASE("the correspondence with long rightmost hooks, n <= 6") {
  for (int n = 1; n <= 6; ++n) {
    for (int k = 0; k <= n - 1; ++k) {
      std::set<Word> image;
      for (const auto& m : enumerate_basis(n, k)) {
        const Word w = monomial_to_permutation(m);
        REQUIRE(w.vec() == oracle::chain_to_permutation(n, as_chain(m)));
        REQUIRE(lec(w) == m.grade());
        REQUIRE(permutation_to_monomial(w, k) == m);
        REQUIRE(image.insert(w).second);
      }
      std::set<Word> target;
      for_each_permutation(n, [&](const Word& w) {
        if (w.is_increasing() || static_cast<int>(rightmost_hook_length(w)) >= n - k) {
          target.insert(w);
        }
      });
      CHECK(image == target);
    }
  }
}

TEST_CASE("betti numbers against brute force") {
  for (int n = 1; n <= 7; ++n) {
    for (int k = 0; k <= n - 1; ++k) {
      const auto row = betti_row(n, k);
      CHECK(row == oracle::betti_row(n, k));
      CHECK(betti(n, k, 0) == 1);
      CHECK(betti(n, k, n) == 0);
      std::uint64_t sum = 0;
      for (auto x : row) sum += x;
      CHECK(sum == oracle::factorial_ratio(n, k + 1));
    }
    if (n >= 2) {
      const auto row = betti_row(n, n - 2);
      CHECK(row == oracle::eulerian_row(n));
      for (int i = 0; i <= n - 1; ++i) CHECK(betti(n, n - 2, i) == betti(n, n - 2, n - 1 - i));
    }
  }
  CHECK(betti(4, 2, 1) == 11);
  CHECK(count_basis(4, 2, 2) == 11);
  CHECK_THROWS_AS(betti(4, 2, -1), std::out_of_range);
}

TEST_CASE("monomial text form") {
  const std::string text = "1,2,4,5:2;1,2,4,5,6,7,8:2;1,2,4,5,6,7,8,9,11:1";
  CHECK(to_string(worked_example()) == text);
  CHECK(parse_monomial(text, 7) == worked_example());
  CHECK(to_string(ChainMonomial{4, 1, {}}) == "1");
  CHECK(parse_monomial("1", 1, 4) == ChainMonomial{4, 1, {}});
  CHECK(parse_monomial("1,2:1", 3, 4) == ChainMonomial{4, 3, {{{1, 2}, 1}}});
  CHECK_THROWS_AS(parse_monomial("1", 1), ParseError);
  CHECK_THROWS_AS(parse_monomial("1,2", 1), ParseError);
  CHECK_THROWS_AS(parse_monomial("1,x:1", 1), ParseError);
  CHECK_THROWS_AS(parse_monomial("1,2,4,5:4", 7, 11), std::domain_error);
}

}  // TEST_SUITE
