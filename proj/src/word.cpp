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

#include "permstat/word.hpp"

#include <algorithm>
#include <cassert>
#include <cctype>
#include <charconv>
#include <functional>
#include <stdexcept>

#include "permstat/errors.hpp"

namespace permstat {

namespace {

void check_letters(const std::vector<Letter>& letters) {
  std::vector<Letter> sorted(letters);
  std::sort(sorted.begin(), sorted.end());
  if (!sorted.empty() && sorted.front() <= 0) {
    throw std::domain_error("word entries must be positive, got " +
                            std::to_string(sorted.front()));
  }
  auto dup = std::adjacent_find(sorted.begin(), sorted.end());
  if (dup != sorted.end()) {
    throw std::domain_error("word entries must be distinct, " +
                            std::to_string(*dup) + " repeats");
  }
}

std::vector<Letter> sorted_copy(std::span<const Letter> values) {
  std::vector<Letter> b(values.begin(), values.end());
  std::sort(b.begin(), b.end());
  check_letters(b);
  return b;
}

void check_statistic(std::size_t length, int d, const char* what) {
  if (d < 0 || (length == 0 ? d != 0 : static_cast<std::size_t>(d) >= length)) {
    throw std::out_of_range(std::string(what) + ": statistic " +
                            std::to_string(d) + " outside [0, " +
                            std::to_string(length == 0 ? 0 : length - 1) + "]");
  }
}

bool increasing(std::span<const Letter> w) {
  return std::adjacent_find(w.begin(), w.end(), std::greater_equal<>()) ==
         w.end();
}

}  // namespace

Word::Word(std::initializer_list<Letter> letters)
    : Word(std::vector<Letter>(letters)) {}

Word::Word(std::vector<Letter> letters) : letters_(std::move(letters)) {
  check_letters(letters_);
}

Word Word::assume_valid(std::vector<Letter> letters) {
  Word w;
  w.letters_ = std::move(letters);
  return w;
}

Word Word::slice(std::size_t first, std::size_t last) const {
  assert(first <= last && last <= letters_.size());
  return assume_valid(
      std::vector<Letter>(letters_.begin() + first, letters_.begin() + last));
}

std::vector<Letter> Word::sorted_values() const {
  std::vector<Letter> v(letters_);
  std::sort(v.begin(), v.end());
  return v;
}

bool Word::is_increasing() const { return increasing(letters_); }

bool Word::is_permutation() const {
  const auto n = static_cast<Letter>(letters_.size());
  return std::all_of(letters_.begin(), letters_.end(),
                     [n](Letter x) { return x <= n; });
}

Word concat(const Word& a, const Word& b) {
  std::vector<Letter> out;
  out.reserve(a.size() + b.size());
  out.insert(out.end(), a.begin(), a.end());
  out.insert(out.end(), b.begin(), b.end());
  return Word::assume_valid(std::move(out));
}

std::vector<std::size_t> des_set(const Word& w) {
  std::vector<std::size_t> out;
  for (std::size_t i = 0; i + 1 < w.size(); ++i) {
    if (w[i] > w[i + 1]) out.push_back(i + 1);
  }
  return out;
}

int des(std::span<const Letter> w) {
  int count = 0;
  for (std::size_t i = 0; i + 1 < w.size(); ++i) count += w[i] > w[i + 1];
  return count;
}

int inv(std::span<const Letter> w) {
  int count = 0;
  for (std::size_t i = 0; i < w.size(); ++i) {
    for (std::size_t j = i + 1; j < w.size(); ++j) count += w[i] > w[j];
  }
  return count;
}

HookFactorization hook_factorization(const Word& w) {
  HookFactorization f;
  std::size_t end = w.size();
  for (std::size_t i = end; i-- > 1;) {
    if (w[i - 1] > w[i]) {
      f.hooks.push_back(w.slice(i - 1, end));
      end = i - 1;
      i = end;
    }
  }
  std::reverse(f.hooks.begin(), f.hooks.end());
  f.gamma = w.slice(0, end);
  return f;
}

int lec(const Word& w) {
  int total = 0;
  for (const Word& hook : hook_factorization(w).hooks) total += inv(hook);
  return total;
}

std::size_t rightmost_hook_length(const Word& w) {
  for (std::size_t i = w.size(); i-- > 1;) {
    if (w[i - 1] > w[i]) return w.size() - i + 1;
  }
  return w.size();
}

const char* to_string(Shape shape) {
  switch (shape) {
    case Shape::kNo:
      return "no";
    case Shape::kTrivial:
      return "trivial";
    case Shape::kProper:
      return "proper";
  }
  return "?";
}

Shape hook_shape(const Word& w) {
  if (w.is_increasing()) return Shape::kTrivial;
  if (w.size() >= 2 && w[0] > w[1] && increasing(w.letters().subspan(1))) {
    return Shape::kProper;
  }
  return Shape::kNo;
}

Shape reverse_wave_shape(const Word& w) {
  if (w.is_increasing()) return Shape::kTrivial;
  const auto span = w.letters();
  const auto c = static_cast<std::size_t>(
      std::max_element(span.begin(), span.end()) - span.begin());
  if (c + 1 == w.size()) return Shape::kNo;
  std::vector<Letter> chain(span.begin(), span.begin() + c);
  chain.insert(chain.end(), span.rbegin(), span.rend() - c);
  return increasing(chain) ? Shape::kProper : Shape::kNo;
}

Shape wave_shape(const Word& w) {
  if (w.is_increasing()) return Shape::kTrivial;
  const auto span = w.letters();
  const auto c = static_cast<std::size_t>(
      std::max_element(span.begin(), span.end()) - span.begin());
  if (c + 1 == w.size()) return Shape::kNo;
  std::vector<Letter> chain(span.rbegin(), span.rend() - c - 1);
  chain.insert(chain.end(), span.begin(), span.begin() + c + 1);
  return increasing(chain) ? Shape::kProper : Shape::kNo;
}

Word make_hook(std::span<const Letter> values, int d) {
  check_statistic(values.size(), d, "make_hook");
  auto a = sorted_copy(values);
  if (d > 0) std::rotate(a.begin(), a.begin() + d, a.begin() + d + 1);
  return Word::assume_valid(std::move(a));
}

Word make_reverse_wave(std::span<const Letter> values, int d) {
  check_statistic(values.size(), d, "make_reverse_wave");
  auto b = sorted_copy(values);
  std::reverse(b.end() - d - 1, b.end());
  return Word::assume_valid(std::move(b));
}

Word make_wave(std::span<const Letter> values, int d) {
  check_statistic(values.size(), d, "make_wave");
  auto b = sorted_copy(values);
  std::reverse(b.begin(), b.begin() + d);
  std::rotate(b.begin(), b.begin() + d, b.end());
  return Word::assume_valid(std::move(b));
}

std::string to_string(const Word& w) {
  std::string out;
  for (std::size_t i = 0; i < w.size(); ++i) {
    if (i > 0) out += ' ';
    out += std::to_string(w[i]);
  }
  return out;
}

Word parse_word(std::string_view text) {
  std::vector<std::string_view> tokens;
  std::size_t pos = 0;
  while (pos < text.size()) {
    while (pos < text.size() && std::isspace(static_cast<unsigned char>(text[pos])))
      ++pos;
    std::size_t start = pos;
    while (pos < text.size() && !std::isspace(static_cast<unsigned char>(text[pos])))
      ++pos;
    if (pos > start) tokens.push_back(text.substr(start, pos - start));
  }

  std::vector<Letter> letters;
  auto push = [&letters](Letter x, std::size_t token, std::string_view raw) {
    if (x <= 0) {
      throw ParseError("entry '" + std::string(raw) + "' at token " +
                           std::to_string(token) + " is not positive",
                       token);
    }
    if (std::find(letters.begin(), letters.end(), x) != letters.end()) {
      throw ParseError("entry '" + std::string(raw) + "' at token " +
                           std::to_string(token) + " repeats",
                       token);
    }
    letters.push_back(x);
  };

  const bool compact =
      tokens.size() == 1 && tokens[0].size() >= 2 &&
      std::all_of(tokens[0].begin(), tokens[0].end(),
                  [](char ch) { return ch >= '0' && ch <= '9'; });
  if (compact) {
    for (std::size_t i = 0; i < tokens[0].size(); ++i) {
      push(tokens[0][i] - '0', i + 1, tokens[0].substr(i, 1));
    }
    return Word::assume_valid(std::move(letters));
  }

  for (std::size_t i = 0; i < tokens.size(); ++i) {
    const auto tok = tokens[i];
    Letter x = 0;
    auto [end, ec] = std::from_chars(tok.data(), tok.data() + tok.size(), x);
    if (ec != std::errc() || end != tok.data() + tok.size()) {
      throw ParseError("invalid entry '" + std::string(tok) + "' at token " +
                           std::to_string(i + 1),
                       i + 1);
    }
    push(x, i + 1, tok);
  }
  return Word::assume_valid(std::move(letters));
}

}  // namespace permstat
