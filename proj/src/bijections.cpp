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

#include "permstat/bijections.hpp"

#include <algorithm>
#include <charconv>
#include <stdexcept>

#include "permstat/errors.hpp"
#include "permstat/waves.hpp"

namespace permstat {

namespace {

// Blocks peeled from the front of a word are emitted in reverse order:
// f(w) = f(rest) * block.
Word join_reversed(const std::vector<Word>& blocks) {
  std::vector<Letter> out;
  for (auto it = blocks.rbegin(); it != blocks.rend(); ++it) {
    out.insert(out.end(), it->begin(), it->end());
  }
  return Word::assume_valid(std::move(out));
}

void require_permutation(const Word& w, const char* what) {
  if (!w.is_permutation()) {
    throw std::domain_error(std::string(what) + ": '" + to_string(w) +
                            "' is not a permutation of [" +
                            std::to_string(w.size()) + "]");
  }
}

}  // namespace

Semipermutation::Semipermutation(std::vector<Letter> alpha0, Word rho,
                                 std::optional<int> n)
    : alpha0_(std::move(alpha0)), rho_(std::move(rho)) {
  std::sort(alpha0_.begin(), alpha0_.end());
  n_ = n.value_or(static_cast<int>(alpha0_.size() + rho_.size()));
  if (rho_.empty()) throw std::domain_error("semipermutation: rho is empty");
  std::vector<Letter> all(alpha0_);
  all.insert(all.end(), rho_.begin(), rho_.end());
  std::sort(all.begin(), all.end());
  bool exact = static_cast<int>(all.size()) == n_;
  for (std::size_t i = 0; exact && i < all.size(); ++i) {
    exact = all[i] == static_cast<Letter>(i + 1);
  }
  if (!exact) {
    throw std::domain_error("semipermutation: alpha0 and rho do not partition [" +
                            std::to_string(n_) + "]");
  }
}

int semiperm_des(const Semipermutation& sp) {
  const Letter head = sp.rho().front();
  const auto above = std::count_if(sp.alpha0().begin(), sp.alpha0().end(),
                                   [head](Letter a) { return a > head; });
  return des(sp.rho()) + static_cast<int>(above);
}

Word theta(const Word& w) {
  std::vector<Word> blocks;
  Word rest = w;
  while (!rest.empty()) {
    SrwSplit split = srw_split(rest);
    blocks.push_back(make_hook(split.srw, srdes(split)));
    rest = std::move(split.rest);
  }
  return join_reversed(blocks);
}

Word eta(const Word& w) {
  const HookFactorization f = hook_factorization(w);
  Word acc = f.gamma;
  for (const Word& hook : f.hooks) acc = rins(acc, hook, inv(hook));
  return acc;
}

Word psi(const Word& w) {
  std::vector<Word> blocks;
  Word rest = w;
  while (!rest.empty()) {
    SwSplit split = sw_split(rest);
    blocks.push_back(make_hook(split.sw, des(split.sw)));
    rest = std::move(split.rest);
  }
  return join_reversed(blocks);
}

Word phi(const Word& w) {
  const HookFactorization f = hook_factorization(w);
  Word acc = f.gamma;
  for (const Word& hook : f.hooks) {
    acc = ins(acc, make_wave(hook, inv(hook)));
  }
  return acc;
}

Word mu(const Semipermutation& sp) {
  const auto& alpha = sp.alpha0();
  const Letter head = sp.rho().front();
  const auto m = static_cast<std::size_t>(
      std::count_if(alpha.begin(), alpha.end(), [head](Letter a) { return a > head; }));

  // alpha_1 ... alpha_{|alpha|-m} alpha_{|alpha|} ... alpha_{|alpha|-m+1} rho.
  std::vector<Letter> out(alpha.begin(), alpha.end() - m);
  out.insert(out.end(), alpha.rbegin(), alpha.rbegin() + m);
  out.insert(out.end(), sp.rho().begin(), sp.rho().end());
  Word result = Word::assume_valid(std::move(out));

  // Same prefix as the reverse wave on alpha0 + {rho_1} with m descents.
  std::vector<Letter> wave_values(alpha);
  wave_values.push_back(head);
  const Word prefix = make_reverse_wave(wave_values, static_cast<int>(m));
  if (!std::equal(prefix.begin(), prefix.end(), result.begin())) {
    throw ConsistencyError("mu: index formula and reverse wave disagree on " +
                           to_string(sp));
  }
  return result;
}

Semipermutation nu(const Word& w, int k) {
  require_permutation(w, "nu");
  const int n = static_cast<int>(w.size());
  if (k < 0 || k > n - 1) {
    throw std::domain_error("nu: k = " + std::to_string(k) + " outside [0, " +
                            std::to_string(n - 1) + "]");
  }
  const std::size_t cut = static_cast<std::size_t>(n - k - 1);
  if (srw_split(w).srw.size() < cut + 1) {
    throw std::domain_error("nu: special reverse wave of '" + to_string(w) +
                            "' is shorter than n-k = " + std::to_string(n - k));
  }
  return Semipermutation(std::vector<Letter>(w.begin(), w.begin() + cut),
                         w.slice(cut, w.size()), n);
}

Word complement(const Word& w, int n) {
  if (static_cast<int>(w.size()) != n) {
    throw std::domain_error("complement: word length " +
                            std::to_string(w.size()) + " differs from n = " +
                            std::to_string(n));
  }
  require_permutation(w, "complement");
  std::vector<Letter> out;
  out.reserve(w.size());
  for (Letter x : w) out.push_back(n + 1 - x);
  return Word::assume_valid(std::move(out));
}

Word reverse(const Word& w) {
  return Word::assume_valid(std::vector<Letter>(w.vec().rbegin(), w.vec().rend()));
}

std::string to_string(const Semipermutation& sp) {
  std::string out;
  for (std::size_t i = 0; i < sp.alpha0().size(); ++i) {
    if (i > 0) out += ',';
    out += std::to_string(sp.alpha0()[i]);
  }
  out += '|';
  out += to_string(sp.rho());
  return out;
}

Semipermutation parse_semipermutation(std::string_view text,
                                      std::optional<int> n) {
  const auto bar = text.find('|');
  if (bar == std::string_view::npos || text.find('|', bar + 1) != std::string_view::npos) {
    throw ParseError("semipermutation must contain exactly one '|'");
  }
  std::vector<Letter> alpha0;
  std::string_view head = text.substr(0, bar);
  auto trim = [](std::string_view s) {
    while (!s.empty() && s.front() == ' ') s.remove_prefix(1);
    while (!s.empty() && s.back() == ' ') s.remove_suffix(1);
    return s;
  };
  head = trim(head);
  std::size_t token = 0;
  while (!head.empty()) {
    const auto comma = head.find(',');
    const auto item = trim(head.substr(0, comma));
    ++token;
    Letter x = 0;
    auto [end, ec] = std::from_chars(item.data(), item.data() + item.size(), x);
    if (item.empty() || ec != std::errc() || end != item.data() + item.size() || x <= 0) {
      throw ParseError("invalid alpha0 entry '" + std::string(item) +
                           "' at token " + std::to_string(token),
                       token);
    }
    if (!alpha0.empty() && alpha0.back() >= x) {
      throw ParseError("alpha0 must be strictly ascending; token " +
                           std::to_string(token) + " is '" + std::string(item) + "'",
                       token);
    }
    alpha0.push_back(x);
    if (comma == std::string_view::npos) break;
    head.remove_prefix(comma + 1);
  }

  Word rho;
  try {
    rho = parse_word(text.substr(bar + 1));
  } catch (const ParseError& e) {
    const std::size_t at = e.token() == 0 ? 0 : e.token() + token;
    throw ParseError(std::string(e.what()) + " (rho part; token " +
                         std::to_string(at) + " overall)",
                     at);
  }
  return Semipermutation(std::move(alpha0), std::move(rho), n);
}

}  // namespace permstat
