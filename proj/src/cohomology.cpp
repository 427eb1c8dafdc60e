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

#include "permstat/cohomology.hpp"

#include <algorithm>
#include <bit>
#include <cctype>
#include <charconv>
#include <stdexcept>

#include "permstat/bijections.hpp"
#include "permstat/enumeration.hpp"
#include "permstat/errors.hpp"

namespace permstat {

namespace {

using Mask = std::uint64_t;

std::vector<Letter> mask_to_subset(Mask m) {
  std::vector<Letter> out;
  while (m != 0) {
    out.push_back(std::countr_zero(m) + 1);
    m &= m - 1;
  }
  return out;
}

void check_range(int n, int k, const char* what) {
  if (n < 1 || k < 0 || k > n - 1) {
    throw std::out_of_range(std::string(what) + ": need n >= 1 and 0 <= k <= n-1, got n = " +
                            std::to_string(n) + ", k = " + std::to_string(k));
  }
}

std::string join_violations(const std::vector<Violation>& v) {
  std::string out;
  for (const auto& x : v) {
    if (!out.empty()) out += "; ";
    if (x.factor > 0) out += "factor " + std::to_string(x.factor) + ": ";
    out += x.message;
  }
  return out;
}

struct ChainBuilder {
  int n;
  int k;
  std::optional<int> grade;
  const std::function<void(const ChainMonomial&)>& fn;
  std::vector<Mask> masks;
  std::vector<int> exponents;
  int sum = 0;

  void emit() {
    if (grade && sum != *grade) return;
    ChainMonomial m{n, k, {}};
    m.chain.reserve(masks.size());
    for (std::size_t j = 0; j < masks.size(); ++j) {
      m.chain.push_back({mask_to_subset(masks[j]), exponents[j]});
    }
    fn(m);
  }

  void extend(Mask prev) {
    emit();
    const Mask full = n == 64 ? ~Mask{0} : (Mask{1} << n) - 1;
    const Mask free = full & ~prev;
    const int prev_size = std::popcount(prev);
    const int min_size = std::max(prev_size + 2, n - k);
    for (Mask add = free; add != 0; add = (add - 1) & free) {
      const Mask next = prev | add;
      const int size = std::popcount(next);
      if (size < min_size) continue;
      const int gap = size - prev_size;
      for (int e = 1; e <= gap - 1; ++e) {
        if (grade && sum + e > *grade) break;
        masks.push_back(next);
        exponents.push_back(e);
        sum += e;
        extend(next);
        sum -= e;
        masks.pop_back();
        exponents.pop_back();
      }
    }
  }
};

}  // namespace

int ChainMonomial::grade() const {
  int total = 0;
  for (const auto& f : chain) total += f.exponent;
  return total;
}

std::vector<Violation> validate_monomial(const ChainMonomial& m) {
  std::vector<Violation> out;
  if (m.n < 1 || m.k < 0 || m.k > m.n - 1) {
    out.push_back({0, "need n >= 1 and 0 <= k <= n-1, got n = " +
                          std::to_string(m.n) + ", k = " + std::to_string(m.k)});
    return out;
  }
  const std::vector<Letter>* prev = nullptr;
  for (std::size_t j = 0; j < m.chain.size(); ++j) {
    const auto& f = m.chain[j];
    const std::size_t idx = j + 1;
    const auto& s = f.subset;
    bool well_formed = true;
    for (std::size_t i = 0; i < s.size(); ++i) {
      if (s[i] < 1 || s[i] > m.n) {
        out.push_back({idx, "value " + std::to_string(s[i]) + " outside [1, " +
                                std::to_string(m.n) + "]"});
        well_formed = false;
      }
      if (i > 0 && s[i - 1] >= s[i]) {
        out.push_back({idx, "subset is not strictly ascending"});
        well_formed = false;
      }
    }
    const int size = static_cast<int>(s.size());
    if (size < m.n - m.k) {
      out.push_back({idx, "subset has " + std::to_string(size) +
                              " elements, fewer than n-k = " +
                              std::to_string(m.n - m.k)});
    }
    int gap = size;
    if (prev != nullptr) {
      if (well_formed && !std::includes(s.begin(), s.end(), prev->begin(), prev->end())) {
        out.push_back({idx, "subset does not contain the previous one"});
      }
      gap = size - static_cast<int>(prev->size());
    }
    if (gap < 2) {
      out.push_back({idx, (prev ? "cardinality gap " : "cardinality ") +
                              std::to_string(gap) + " is below 2"});
    }
    if (f.exponent < 1 || f.exponent > gap - 1) {
      out.push_back({idx, "exponent " + std::to_string(f.exponent) +
                              " must be positive and less than " +
                              std::to_string(gap)});
    }
    prev = &s;
  }
  return out;
}

Word monomial_to_permutation(const ChainMonomial& m) {
  if (auto v = validate_monomial(m); !v.empty()) {
    throw std::domain_error("invalid monomial: " + join_violations(v));
  }
  std::vector<bool> used(static_cast<std::size_t>(m.n) + 1, false);
  std::vector<Word> hooks;  // rightmost first
  const std::vector<Letter>* prev = nullptr;
  for (const auto& f : m.chain) {
    std::vector<Letter> fresh;
    std::set_difference(f.subset.begin(), f.subset.end(),
                        prev ? prev->begin() : f.subset.end(),
                        prev ? prev->end() : f.subset.end(),
                        std::back_inserter(fresh));
    for (Letter x : fresh) used[x] = true;
    hooks.push_back(make_hook(fresh, f.exponent));
    prev = &f.subset;
  }
  std::vector<Letter> out;
  out.reserve(m.n);
  for (Letter x = 1; x <= m.n; ++x) {
    if (!used[x]) out.push_back(x);
  }
  for (auto it = hooks.rbegin(); it != hooks.rend(); ++it) {
    out.insert(out.end(), it->begin(), it->end());
  }
  return Word::assume_valid(std::move(out));
}

ChainMonomial permutation_to_monomial(const Word& w, int k) {
  if (!w.is_permutation() || w.empty()) {
    throw std::domain_error("'" + to_string(w) + "' is not a permutation of [n], n >= 1");
  }
  const int n = static_cast<int>(w.size());
  if (k < 0 || k > n - 1) {
    throw std::domain_error("k = " + std::to_string(k) + " outside [0, " +
                            std::to_string(n - 1) + "]");
  }
  const HookFactorization f = hook_factorization(w);
  ChainMonomial m{n, k, {}};
  if (f.hooks.empty()) return m;
  if (static_cast<int>(f.hooks.back().size()) < n - k) {
    throw std::domain_error("rightmost hook of '" + to_string(w) + "' has length " +
                            std::to_string(f.hooks.back().size()) +
                            ", shorter than n-k = " + std::to_string(n - k));
  }
  std::vector<Letter> acc;
  for (auto it = f.hooks.rbegin(); it != f.hooks.rend(); ++it) {
    acc.insert(acc.end(), it->begin(), it->end());
    std::sort(acc.begin(), acc.end());
    m.chain.push_back({acc, inv(*it)});
  }
  return m;
}

void for_each_basis_monomial(int n, int k, std::optional<int> grade,
                             const std::function<void(const ChainMonomial&)>& fn) {
  check_range(n, k, "basis");
  if (n > 63) throw std::out_of_range("basis: n must be at most 63");
  if (grade && *grade < 0) return;
  ChainBuilder builder{n, k, grade, fn, {}, {}, 0};
  builder.extend(0);
}

std::vector<ChainMonomial> enumerate_basis(int n, int k, std::optional<int> grade) {
  std::vector<ChainMonomial> out;
  for_each_basis_monomial(n, k, grade,
                          [&out](const ChainMonomial& m) { out.push_back(m); });
  auto key = [](const ChainMonomial& m) {
    std::pair<std::vector<std::vector<Letter>>, std::vector<int>> kv;
    for (const auto& f : m.chain) {
      kv.first.push_back(f.subset);
      kv.second.push_back(f.exponent);
    }
    return kv;
  };
  std::vector<std::pair<decltype(key(out.front())), std::size_t>> keyed;
  keyed.reserve(out.size());
  for (std::size_t i = 0; i < out.size(); ++i) keyed.emplace_back(key(out[i]), i);
  std::sort(keyed.begin(), keyed.end());
  std::vector<ChainMonomial> sorted;
  sorted.reserve(out.size());
  for (const auto& [kv, i] : keyed) sorted.push_back(std::move(out[i]));
  return sorted;
}

std::uint64_t count_basis(int n, int k, int i) {
  std::uint64_t count = 0;
  for_each_basis_monomial(n, k, i, [&count](const ChainMonomial&) { ++count; });
  return count;
}

std::vector<std::uint64_t> betti_row(int n, int k) {
  check_range(n, k, "betti");
  std::vector<std::uint64_t> semi(n, 0), basis(n, 0), perms(n, 0);
  for_each_semipermutation(n, k, [&semi](const Semipermutation& sp) {
    ++semi.at(semiperm_des(sp));
  });
  for_each_basis_monomial(n, k, std::nullopt, [&basis](const ChainMonomial& m) {
    ++basis.at(m.grade());
  });
  for_each_permutation(n, [&](const Word& w) {
    if (static_cast<int>(rightmost_hook_length(w)) >= n - k) ++perms.at(lec(w));
  });
  if (semi != basis || semi != perms) {
    throw ConsistencyError("betti(" + std::to_string(n) + ", " + std::to_string(k) +
                           "): semipermutation, monomial and permutation counts differ");
  }
  return semi;
}

std::uint64_t betti(int n, int k, int i) {
  if (i < 0) throw std::out_of_range("betti: i must be non-negative");
  const auto row = betti_row(n, k);
  return i < n ? row[i] : 0;
}

std::string to_string(const ChainMonomial& m) {
  if (m.chain.empty()) return "1";
  std::string out;
  for (std::size_t j = 0; j < m.chain.size(); ++j) {
    if (j > 0) out += ';';
    const auto& s = m.chain[j].subset;
    for (std::size_t i = 0; i < s.size(); ++i) {
      if (i > 0) out += ',';
      out += std::to_string(s[i]);
    }
    out += ':';
    out += std::to_string(m.chain[j].exponent);
  }
  return out;
}

ChainMonomial parse_monomial(std::string_view text, int k, std::optional<int> n) {
  auto trim = [](std::string_view s) {
    while (!s.empty() && std::isspace(static_cast<unsigned char>(s.front()))) s.remove_prefix(1);
    while (!s.empty() && std::isspace(static_cast<unsigned char>(s.back()))) s.remove_suffix(1);
    return s;
  };
  auto number = [&trim](std::string_view raw, std::size_t token) {
    const auto s = trim(raw);
    int x = 0;
    auto [end, ec] = std::from_chars(s.data(), s.data() + s.size(), x);
    if (s.empty() || ec != std::errc() || end != s.data() + s.size()) {
      throw ParseError("invalid number '" + std::string(s) + "' at token " +
                           std::to_string(token),
                       token);
    }
    return x;
  };

  ChainMonomial m{0, k, {}};
  text = trim(text);
  if (text.empty()) throw ParseError("empty monomial; the unit monomial is written '1'");
  int largest = 0;
  if (text != "1") {
    std::size_t token = 0;
    while (true) {
      const auto semi = text.find(';');
      const auto factor = text.substr(0, semi);
      const auto colon = factor.find(':');
      if (colon == std::string_view::npos) {
        throw ParseError("factor " + std::to_string(m.chain.size() + 1) +
                             " lacks ':exponent'",
                         token + 1);
      }
      ChainFactor f;
      std::string_view subset = factor.substr(0, colon);
      while (true) {
        const auto comma = subset.find(',');
        const int x = number(subset.substr(0, comma), ++token);
        f.subset.push_back(x);
        largest = std::max(largest, x);
        if (comma == std::string_view::npos) break;
        subset.remove_prefix(comma + 1);
      }
      f.exponent = number(factor.substr(colon + 1), ++token);
      m.chain.push_back(std::move(f));
      if (semi == std::string_view::npos) break;
      text.remove_prefix(semi + 1);
    }
  }
  if (!n && m.chain.empty()) {
    throw ParseError("n must be given explicitly for the unit monomial");
  }
  m.n = n.value_or(largest);
  if (auto v = validate_monomial(m); !v.empty()) {
    throw std::domain_error("invalid monomial: " + join_violations(v));
  }
  return m;
}

}  // namespace permstat
