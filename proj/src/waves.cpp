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

#include "permstat/waves.hpp"

#include <algorithm>
#include <stdexcept>
#include <string>
#include <vector>

namespace permstat {

namespace {

std::optional<std::size_t> first_descent(const Word& w) {
  for (std::size_t i = 0; i + 1 < w.size(); ++i) {
    if (w[i] > w[i + 1]) return i;
  }
  return std::nullopt;
}

void check_disjoint(const Word& a, const Word& b, const char* what) {
  auto x = a.sorted_values();
  auto y = b.sorted_values();
  std::vector<Letter> common;
  std::set_intersection(x.begin(), x.end(), y.begin(), y.end(),
                        std::back_inserter(common));
  if (!common.empty()) {
    throw std::domain_error(std::string(what) + ": arguments share value " +
                            std::to_string(common.front()));
  }
}

}  // namespace

SrwSplit srw_split(const Word& w) {
  if (w.empty()) throw std::domain_error("srw_split: empty word");
  SrwSplit split;
  const auto t0 = first_descent(w);
  if (!t0) {
    split.srw = w;
    split.s = w.size();
    return split;
  }
  const Letter floor = *t0 > 0 ? w[*t0 - 1] : 0;
  std::size_t s0 = *t0;
  while (s0 + 1 < w.size() && w[s0] > w[s0 + 1] && w[s0 + 1] > floor) ++s0;
  split.srw = w.slice(0, s0 + 1);
  split.rest = w.slice(s0 + 1, w.size());
  split.t = *t0 + 1;
  split.s = s0 + 1;
  return split;
}

int srdes(const SrwSplit& split) {
  const bool cut_descent =
      !split.rest.empty() && split.srw.back() > split.rest.front();
  return des(split.srw) + (cut_descent ? 1 : 0);
}

int srdes(const Word& w) { return srdes(srw_split(w)); }

Word rins(const Word& a, const Word& b, int d) {
  if (b.empty()) throw std::domain_error("rins: empty reverse-wave argument");
  const auto q = static_cast<int>(b.size());
  if (d < 1 || d > q - 1) {
    throw std::domain_error("rins: d = " + std::to_string(d) +
                            " outside [1, " + std::to_string(q - 1) + "]");
  }
  check_disjoint(a, b, "rins");
  const auto beta = b.sorted_values();
  // beta_{q-d} in 1-based terms.
  const bool keep_d = a.empty() || beta[q - d - 1] < a.front();
  return concat(make_reverse_wave(beta, keep_d ? d : d - 1), a);
}

SwSplit sw_split(const Word& w) {
  if (w.empty()) throw std::domain_error("sw_split: empty word");
  SwSplit split;
  const auto t0 = first_descent(w);
  if (!t0) {
    split.sw = w;
    split.r = 1;
    split.s = w.size();
    return split;
  }
  const Letter pivot = w[*t0 + 1];
  std::size_t r0 = 0;
  while (w[r0] < pivot) ++r0;
  const Letter floor = r0 > 0 ? w[r0 - 1] : 0;
  std::size_t s0 = *t0 + 1;
  while (s0 + 1 < w.size() && w[s0] > w[s0 + 1] && w[s0 + 1] > floor) ++s0;

  split.sw = w.slice(r0, s0 + 1);
  split.rest = concat(w.slice(0, r0), w.slice(s0 + 1, w.size()));
  split.r = r0 + 1;
  split.t = *t0 + 1;
  split.s = s0 + 1;
  return split;
}

Word ins(const Word& a, const Word& b) {
  if (wave_shape(b) != Shape::kProper) {
    throw std::domain_error("ins: '" + to_string(b) +
                            "' is not a non-trivial wave");
  }
  check_disjoint(a, b, "ins");
  std::size_t x = 0;
  while (x < a.size() && a[x] < b.back() && (x == 0 || a[x - 1] < a[x])) ++x;
  return concat(concat(a.slice(0, x), b), a.slice(x, a.size()));
}

}  // namespace permstat
