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
#include <json.hpp>
#include <set>
#include <sstream>
#include <stdexcept>
#include <string>
#include <vector>

#include "mutants.hpp"
#include "oracles.hpp"
#include "permstat/enumeration.hpp"
#include "permstat/word.hpp"
#include "support.hpp"

using namespace permstat;
using testing::W;

TEST_SUITE("enumeration") {

TEST_CASE("permutation stream") {
  const auto s3 = all_permutations(3);
  REQUIRE(s3.size() == 6);
  CHECK(s3.front() == W("1 2 3"));
  CHECK(s3.back() == W("3 2 1"));
  CHECK(std::is_sorted(s3.begin(), s3.end()));
  for (int n = 0; n <= 8; ++n) {
    std::uint64_t count = 0;
    for_each_permutation(n, [&count](const Word&) { ++count; });
    CHECK(count == (n == 0 ? 1 : falling_factorial(n, n)));
  }
  CHECK_THROWS_AS(for_each_permutation(-1, [](const Word&) {}), std::out_of_range);
}

TEST_CASE("prefix chunks partition S_n") {
  const int n = 6;
  std::vector<Word> joined;
  for (int first = 1; first <= n; ++first) {
    for_each_permutation(n, [&](const Word& w) {
      CHECK(w.front() == first);
      joined.push_back(w);
    }, first);
  }
  CHECK(joined == all_permutations(n));
  CHECK_THROWS_AS(for_each_permutation(3, [](const Word&) {}, 4), std::out_of_range);
}

TEST_CASE("semipermutation stream") {
  std::vector<Semipermutation> s31;
  for_each_semipermutation(3, 1, [&](const Semipermutation& sp) { s31.push_back(sp); });
  CHECK(s31.size() == 6);
  CHECK(to_string(s31.front()) == "3|1 2");
  CHECK(to_string(s31.back()) == "1|3 2");

  for (int n = 1; n <= 8; ++n) {
    for (int k = 0; k <= n - 1; ++k) {
      std::vector<oracle::Seq> rhos;
      for_each_semipermutation(n, k, [&](const Semipermutation& sp) {
        REQUIRE(sp.n() == n);
        REQUIRE(sp.k() == k);
        rhos.push_back(sp.rho().vec());
      });
      if (n <= 6) {
        CHECK(rhos == oracle::injective_words(n, k + 1));
      } else {
        CHECK(std::is_sorted(rhos.begin(), rhos.end()));
        CHECK(std::set<oracle::Seq>(rhos.begin(), rhos.end()).size() == rhos.size());
      }
      CHECK(rhos.size() == falling_factorial(n, k + 1));
    }
  }

  std::vector<Word> full;
  for_each_semipermutation(4, 3, [&](const Semipermutation& sp) {
    CHECK(sp.alpha0().empty());
    full.push_back(sp.rho());
  });
  CHECK(full == all_permutations(4));
  CHECK_THROWS_AS(for_each_semipermutation(3, 3, [](const Semipermutation&) {}),
                  std::out_of_range);
}

TEST_CASE("four sets have equal counts, n <= 7") {
  const auto c = count_four_sets(4, 2, 2);
  CHECK(c.all_equal());
  CHECK(c.semipermutations == 11);
  CHECK_FALSE(c.outside_stated_range);

  for (int n = 1; n <= 7; ++n) {
    for (int k = 0; k <= n - 1; ++k) {
      const auto tables = four_set_tables(n, k);
      for (const auto& t : tables) {
        CHECK(t.total() == falling_factorial(n, k + 1));
        CHECK(t.counts == tables[0].counts);
        CHECK(t.at(n) == 0);
      }
      const auto zero = count_four_sets(n, k, 0);
      CHECK(zero.outside_stated_range);
      CHECK(zero.all_equal());
      CHECK(zero.semipermutations == 1);
    }
  }
  CHECK_THROWS_AS(count_four_sets(4, 2, -1), std::out_of_range);
}

TEST_CASE("Eulerian tables") {
  CHECK(eulerian_table(4, 2).counts == std::vector<std::uint64_t>{1, 11, 11, 1});
  for (int n = 1; n <= 8; ++n) {
    CHECK(eulerian_table(n, 0).counts == std::vector<std::uint64_t>(n, 1));
    for (int k = 0; k <= n - 1; ++k) {
      CHECK(eulerian_table(n, k).total() == falling_factorial(n, k + 1));
    }
    CHECK(eulerian_row_by_descents(n) == oracle::eulerian_row(n));
    if (n >= 2) CHECK(eulerian_table(n, n - 2).counts == oracle::eulerian_row(n));
  }
  CHECK_THROWS_AS(eulerian_table(4, 4), std::out_of_range);
  CHECK_THROWS_AS(eulerian_table(0, 0), std::out_of_range);
}

TEST_CASE("safety cap") {
  CHECK_NOTHROW(check_sweep_size(kSafetyCap, false));
  CHECK_THROWS_AS(check_sweep_size(kSafetyCap + 1, false), SafetyCapError);
  CHECK_NOTHROW(check_sweep_size(kSafetyCap + 1, true));
  CHECK_THROWS_AS(eulerian_table(11, 2), SafetyCapError);
  CHECK_THROWS_AS(verify_all(11), SafetyCapError);
  CHECK_THROWS_AS(verify_all(0), std::out_of_range);
}

TEST_CASE("falling factorial") {
  CHECK(falling_factorial(5, 0) == 1);
  CHECK(falling_factorial(5, 2) == 20);
  CHECK(falling_factorial(8, 8) == 40320);
  CHECK(falling_factorial(3, 4) == 0);
}

TEST_CASE("verification passes and reports every property") {
  const Report r = verify_all(6);
  CHECK(r.passed());
  CHECK(r.failures() == 0);
  std::set<std::string> names;
  for (const auto& c : r.checks) {
    names.insert(c.name);
    if (c.params != "n=1") CHECK(c.cases > 0);
  }
  for (const char* name :
       {"hook_factorization", "srw_split", "rins_roundtrip", "sw_split", "ins_roundtrip",
        "theta_eta", "psi_phi", "des_lec_equidistribution", "stream_cardinality",
        "constructor_uniqueness", "rins_uniqueness", "mu_nu", "four_sets",
        "theta_restriction", "psi_restriction", "cohomology_basis"}) {
    CHECK(names.count(name) == 1);
  }

  std::ostringstream text;
  r.write_text(text);
  CHECK(text.str().find("PASS theta_eta n=6 cases=720") != std::string::npos);
  CHECK(text.str().find("summary: " + std::to_string(r.checks.size()) + " checks, 0 failed") !=
        std::string::npos);

  std::ostringstream js;
  r.write_json(js);
  std::istringstream lines(js.str());
  std::string line;
  std::size_t records = 0;
  while (std::getline(lines, line)) {
    const auto j = nlohmann::json::parse(line);
    CHECK(j.at("status") == "pass");
    CHECK(j.at("counterexample").is_null());
    ++records;
  }
  CHECK(records == r.checks.size());
}

TEST_CASE("every mutant is caught with a counterexample") {
  for (const auto& m : mutants::all()) {
    CAPTURE(m.name);
    const Report r = verify_all(6, m.toolkit);
    CHECK_FALSE(r.passed());
    bool has_example = false;
    for (const auto& c : r.checks) {
      if (!c.passed && c.counterexample && !c.counterexample->empty()) has_example = true;
    }
    CHECK(has_example);

    std::ostringstream text;
    r.write_text(text);
    CHECK(text.str().find("FAIL ") != std::string::npos);
  }
}

TEST_CASE("a failing map reports the shortest counterexample first") {
  Toolkit tk;
  tk.theta = [](const Word& w) { return w.size() >= 3 ? reverse(w) : theta(w); };
  const Report r = verify_all(5, tk);
  for (const auto& c : r.checks) {
    if (c.name == "theta_eta" && !c.passed) {
      CHECK(c.params == "n=3");
      CHECK(c.counterexample == "1 2 3");
      return;
    }
  }
  FAIL("theta_eta did not fail");
}

}  // TEST_SUITE
