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

#include "permstat/enumeration.hpp"

#include <json.hpp>
#include <map>
#include <numeric>
#include <tuple>
#include <utility>

#include "permstat/cohomology.hpp"
#include "permstat/errors.hpp"

namespace permstat {

namespace {

void check_nk(int n, int k, const char* what) {
  if (n < 1 || k < 0 || k > n - 1) {
    throw std::out_of_range(std::string(what) + ": need n >= 1 and 0 <= k <= n-1, got n = " +
                            std::to_string(n) + ", k = " + std::to_string(k));
  }
}

using Verdict = std::optional<std::string>;

// One named property over one sweep. Keeps the first failure only.
class Probe {
 public:
  Probe(std::string name, std::string params) {
    result_.name = std::move(name);
    result_.params = std::move(params);
  }

  bool failed() const { return !result_.passed; }

  void fail(std::string example, std::string detail) {
    if (failed()) return;
    result_.passed = false;
    result_.counterexample = std::move(example);
    result_.detail = std::move(detail);
  }

  // Runs one case unless the probe already failed. `example` names the
  // input for the report.
  template <typename Fn>
  void run(const std::string& example, Fn&& fn) {
    if (failed()) return;
    ++result_.cases;
    try {
      if (Verdict why = fn()) fail(example, std::move(*why));
    } catch (const std::exception& e) {
      fail(example, std::string("threw: ") + e.what());
    }
  }

  template <typename Fn>
  void run(const Word& w, Fn&& fn) {
    if (failed()) return;
    run(to_string(w), std::forward<Fn>(fn));
  }

  CheckResult take() { return std::move(result_); }

 private:
  CheckResult result_;
};

std::string params_n(int n) { return "n=" + std::to_string(n); }

// lec by repeatedly cutting the suffix at the rightmost descent and counting
// its inversions, without building a factorization.
int lec_by_peeling(const Word& w) {
  int total = 0;
  std::size_t end = w.size();
  while (true) {
    std::size_t cut = 0;
    for (std::size_t i = end; i-- > 1;) {
      if (w[i - 1] > w[i]) {
        cut = i;
        break;
      }
    }
    if (cut == 0) return total;
    total += inv(w.letters().subspan(cut - 1, end - cut + 1));
    end = cut - 1;
  }
}

bool same_values(const Word& a, const Word& b) {
  return a.sorted_values() == b.sorted_values();
}

// ---- word-level sweep over S_n ----------------------------------------

void sweep_words(int n, const Toolkit& tk, std::vector<CheckResult>& out) {
  const std::string p = params_n(n);
  Probe hooks("hook_factorization", p), srw("srw_split", p), rins_rt("rins_roundtrip", p),
      sw("sw_split", p), ins_rt("ins_roundtrip", p), theta("theta_eta", p),
      psi("psi_phi", p), equi("des_lec_equidistribution", p),
      card("stream_cardinality", p);
  std::vector<std::uint64_t> by_des(n + 1, 0), by_lec(n + 1, 0);
  std::uint64_t seen = 0;

  for_each_permutation(n, [&](const Word& w) {
    ++seen;
    hooks.run(w, [&]() -> Verdict {
      const auto f = hook_factorization(w);
      if (!f.gamma.is_increasing()) return "gamma not increasing";
      Word joined = f.gamma;
      for (const Word& h : f.hooks) {
        if (hook_shape(h) != Shape::kProper) return "part " + to_string(h) + " is not a hook";
        const int x = inv(h);
        if (x < 1 || x > static_cast<int>(h.size()) - 1) return "hook inv out of bounds";
        joined = concat(joined, h);
      }
      if (joined != w) return "parts do not concatenate to the word";
      if (lec(w) != lec_by_peeling(w)) return "lec differs from rightmost-descent peeling";
      return std::nullopt;
    });

    const bool increasing = w.is_increasing();
    const SrwSplit rs = srw_split(w);
    const int rd = srdes(rs);
    srw.run(w, [&]() -> Verdict {
      if (concat(rs.srw, rs.rest) != w) return "srw * rest differs from the word";
      if (reverse_wave_shape(rs.srw) == Shape::kNo) return "srw is not a reverse wave";
      if (des(w) != rd + des(rs.rest)) return "des != srdes + des(rest)";
      if (increasing && (rd != 0 || !rs.rest.empty())) return "increasing word split";
      if (!increasing && (rd < 1 || rd > static_cast<int>(rs.srw.size()) - 1)) {
        return "srdes = " + std::to_string(rd) + " outside [1, s-1]";
      }
      for (std::size_t len = rs.srw.size() + 1; len <= w.size(); ++len) {
        if (is_reverse_wave(w.slice(0, len))) return "a longer prefix is a reverse wave";
      }
      return std::nullopt;
    });
    if (!increasing) {
      rins_rt.run(w, [&]() -> Verdict {
        const Word back = tk.rins(rs.rest, rs.srw, rd);
        if (back != w) return "rins(rest, srw, srdes) = " + to_string(back);
        return std::nullopt;
      });
    }

    const SwSplit ws = sw_split(w);
    sw.run(w, [&]() -> Verdict {
      if (wave_shape(ws.sw) == Shape::kNo) return "sw is not a wave";
      if (des(w) != des(ws.sw) + des(ws.rest)) return "des != des(sw) + des(rest)";
      if (increasing && (ws.sw != w || !ws.rest.empty())) return "increasing word split";
      if (ws.sw.size() + ws.rest.size() != w.size()) return "split loses letters";
      return std::nullopt;
    });
    if (!increasing) {
      ins_rt.run(w, [&]() -> Verdict {
        const Word back = tk.ins(ws.rest, ws.sw);
        if (back != w) return "ins(rest, sw) = " + to_string(back);
        return std::nullopt;
      });
    }

    theta.run(w, [&]() -> Verdict {
      const Word t = tk.theta(w);
      if (!same_values(t, w)) return "theta(w) = " + to_string(t) + " is not a rearrangement";
      if (lec(t) != des(w)) return "lec(theta(w)) = " + std::to_string(lec(t)) + " != des(w)";
      if (tk.eta(t) != w) return "eta(theta(w)) = " + to_string(tk.eta(t));
      if (tk.theta(tk.eta(w)) != w) return "theta(eta(w)) differs from w";
      if (increasing && t != w) return "theta moves an increasing word";
      return std::nullopt;
    });
    psi.run(w, [&]() -> Verdict {
      const Word t = tk.psi(w);
      if (!same_values(t, w)) return "psi(w) = " + to_string(t) + " is not a rearrangement";
      if (lec(t) != des(w)) return "lec(psi(w)) = " + std::to_string(lec(t)) + " != des(w)";
      if (tk.phi(t) != w) return "phi(psi(w)) = " + to_string(tk.phi(t));
      if (tk.psi(tk.phi(w)) != w) return "psi(phi(w)) differs from w";
      if (increasing && t != w) return "psi moves an increasing word";
      return std::nullopt;
    });

    ++by_des[des(w)];
    ++by_lec[lec(w)];
  });

  equi.run(p, [&]() -> Verdict {
    if (by_des != by_lec) return std::string("des and lec distributions differ");
    return std::nullopt;
  });
  card.run(p, [&]() -> Verdict {
    if (seen != falling_factorial(n, n)) return "visited " + std::to_string(seen);
    return std::nullopt;
  });

  for (Probe* probe : {&hooks, &srw, &rins_rt, &sw, &ins_rt, &theta, &psi, &equi, &card}) {
    out.push_back(probe->take());
  }
}

// ---- per-k sweeps -------------------------------------------------------

void sweep_mu_nu(int n, std::vector<CheckResult>& out) {
  Probe probe("mu_nu", params_n(n));
  const auto perms = all_permutations(n);
  std::vector<std::size_t> srw_len;
  srw_len.reserve(perms.size());
  for (const Word& w : perms) srw_len.push_back(srw_split(w).srw.size());

  for (int k = 0; k < n && !probe.failed(); ++k) {
    const std::string kp = " (k=" + std::to_string(k) + ")";
    std::vector<Word> images;
    for_each_semipermutation(n, k, [&](const Semipermutation& sp) {
      probe.run(to_string(sp) + kp, [&]() -> Verdict {
        const Word m = mu(sp);
        if (!m.is_permutation() || static_cast<int>(m.size()) != n) return "mu(sp) is not in S_n";
        if (des(m) != semiperm_des(sp)) return "des not preserved: " + to_string(m);
        if (static_cast<int>(srw_split(m).srw.size()) < n - k) return "srw of mu(sp) too short";
        if (nu(m, k) != sp) return "nu(mu(sp)) = " + to_string(nu(m, k));
        images.push_back(m);
        return std::nullopt;
      });
    });
    if (probe.failed()) break;
    std::vector<Word> target;
    for (std::size_t j = 0; j < perms.size(); ++j) {
      if (static_cast<int>(srw_len[j]) >= n - k) target.push_back(perms[j]);
    }
    std::sort(images.begin(), images.end());
    probe.run("image" + kp, [&]() -> Verdict {
      if (images.size() != falling_factorial(n, k + 1)) return std::string("wrong stream size");
      if (std::adjacent_find(images.begin(), images.end()) != images.end()) {
        return std::string("mu is not injective");
      }
      if (images != target) return std::string("image differs from {sigma : |srw| >= n-k}");
      return std::nullopt;
    });
  }
  out.push_back(probe.take());
}

void sweep_four_sets(int n, std::vector<CheckResult>& out) {
  Probe probe("four_sets", params_n(n));
  const auto eulerian = eulerian_row_by_descents(n);
  for (int k = 0; k < n; ++k) {
    const auto tables = four_set_tables(n, k, true);
    for (int i = 0; i < n; ++i) {
      const std::string where = "k=" + std::to_string(k) + " i=" + std::to_string(i);
      probe.run(where, [&]() -> Verdict {
        const auto v = tables[0].at(i);
        for (const auto& t : tables) {
          if (t.at(i) != v) {
            return std::string(to_string(t.label)) + " count " + std::to_string(t.at(i)) +
                   " != " + std::to_string(v);
          }
        }
        if (k == n - 2 && v != eulerian[i]) {
          return "common value " + std::to_string(v) + " != Eulerian " +
                 std::to_string(eulerian[i]);
        }
        return std::nullopt;
      });
    }
    probe.run("k=" + std::to_string(k) + " total", [&]() -> Verdict {
      if (tables[0].total() != falling_factorial(n, k + 1)) return std::string("row sum");
      return std::nullopt;
    });
  }
  out.push_back(probe.take());
}

// {(des s, f(s)) : block(s) >= n-k} must equal {(lec t, t) : hook(t) >= n-k}.
void sweep_restriction(int n, const char* name,
                       const std::function<Word(const Word&)>& map,
                       const std::function<std::size_t(const Word&)>& block,
                       std::vector<CheckResult>& out) {
  Probe probe(name, params_n(n));
  const auto perms = all_permutations(n);
  struct Row {
    std::size_t block;
    std::pair<int, Word> image;
  };
  std::vector<Row> mapped;
  std::vector<std::pair<std::size_t, std::pair<int, Word>>> hooked;
  probe.run(params_n(n), [&]() -> Verdict {
    for (const Word& s : perms) {
      mapped.push_back({block(s), {des(s), map(s)}});
      hooked.push_back({rightmost_hook_length(s), {lec(s), s}});
    }
    return std::nullopt;
  });
  for (int k = 0; k < n && !probe.failed(); ++k) {
    const auto cut = static_cast<std::size_t>(n - k);
    std::vector<std::pair<int, Word>> lhs, rhs;
    for (const auto& r : mapped) {
      if (r.block >= cut) lhs.push_back(r.image);
    }
    for (const auto& [len, img] : hooked) {
      if (len >= cut) rhs.push_back(img);
    }
    std::sort(lhs.begin(), lhs.end());
    std::sort(rhs.begin(), rhs.end());
    probe.run("k=" + std::to_string(k), [&]() -> Verdict {
      if (lhs == rhs) return std::nullopt;
      const auto [a, b] = std::mismatch(lhs.begin(), lhs.end(), rhs.begin(), rhs.end());
      std::string why = "sets differ";
      if (a != lhs.end()) why += "; first extra image " + to_string(a->second);
      if (b != rhs.end()) why += "; first missing " + to_string(b->second);
      return why;
    });
  }
  out.push_back(probe.take());
}

void sweep_basis(int n, std::vector<CheckResult>& out) {
  Probe probe("cohomology_basis", params_n(n));
  const auto perms = all_permutations(n);
  for (int k = 0; k < n && !probe.failed(); ++k) {
    const std::string kp = " (k=" + std::to_string(k) + ")";
    std::vector<Word> images;
    for_each_basis_monomial(n, k, std::nullopt, [&](const ChainMonomial& m) {
      probe.run(to_string(m) + kp, [&]() -> Verdict {
        if (!validate_monomial(m).empty()) return std::string("generated an invalid monomial");
        const Word w = monomial_to_permutation(m);
        if (lec(w) != m.grade()) return "lec(" + to_string(w) + ") != grade";
        if (static_cast<int>(rightmost_hook_length(w)) < n - k) return std::string("hook too short");
        if (permutation_to_monomial(w, k) != m) return std::string("round trip failed");
        images.push_back(w);
        return std::nullopt;
      });
    });
    if (probe.failed()) break;
    std::sort(images.begin(), images.end());
    std::vector<Word> target;
    for (const Word& w : perms) {
      if (static_cast<int>(rightmost_hook_length(w)) >= n - k) target.push_back(w);
    }
    probe.run("image" + kp, [&]() -> Verdict {
      if (std::adjacent_find(images.begin(), images.end()) != images.end()) {
        return std::string("monomial_to_permutation is not injective");
      }
      if (images != target) return std::string("image differs from {sigma : hook >= n-k}");
      return std::nullopt;
    });
    probe.run("betti" + kp, [&]() -> Verdict {
      const auto row = betti_row(n, k);
      const auto sum = std::accumulate(row.begin(), row.end(), std::uint64_t{0});
      if (sum != falling_factorial(n, k + 1)) return std::string("row sum != n!/(n-k-1)!");
      if (k == n - 2 && !std::equal(row.begin(), row.end(), row.rbegin())) {
        return std::string("row at k = n-2 is not palindromic");
      }
      return std::nullopt;
    });
  }
  out.push_back(probe.take());
}

void sweep_constructors(int n, std::vector<CheckResult>& out) {
  Probe probe("constructor_uniqueness", params_n(n));
  std::vector<Letter> values(n);
  std::iota(values.begin(), values.end(), 1);
  // witnesses[kind][d]
  std::array<std::vector<std::vector<Word>>, 3> witnesses;
  for (auto& w : witnesses) w.assign(n, {});
  for_each_permutation(n, [&](const Word& w) {
    if (hook_shape(w) != Shape::kNo) witnesses[0][inv(w)].push_back(w);
    if (wave_shape(w) != Shape::kNo) witnesses[1][des(w)].push_back(w);
    if (reverse_wave_shape(w) != Shape::kNo) witnesses[2][des(w)].push_back(w);
  });
  const char* kinds[] = {"hook", "wave", "reverse wave"};
  for (int kind = 0; kind < 3; ++kind) {
    for (int d = 0; d < n; ++d) {
      probe.run(std::string(kinds[kind]) + " d=" + std::to_string(d), [&]() -> Verdict {
        const auto& found = witnesses[kind][d];
        if (found.size() != 1) return std::to_string(found.size()) + " witnesses";
        const Word built = kind == 0   ? make_hook(values, d)
                           : kind == 1 ? make_wave(values, d)
                                       : make_reverse_wave(values, d);
        if (built != found.front()) {
          return "constructor gives " + to_string(built) + ", brute force " +
                 to_string(found.front());
        }
        return std::nullopt;
      });
    }
  }
  out.push_back(probe.take());
}

// Every word of [n] whose srdes is positive is the unique solution for the
// triple (rest, values of srw, srdes), and every admissible triple is hit.
void sweep_rins_uniqueness(int n, const Toolkit& tk, std::vector<CheckResult>& out) {
  Probe probe("rins_uniqueness", params_n(n));
  std::map<std::tuple<Word, std::vector<Letter>, int>, Word> solutions;
  for_each_permutation(n, [&](const Word& w) {
    if (probe.failed() || w.is_increasing()) return;
    const SrwSplit s = srw_split(w);
    const int d = srdes(s);
    auto key = std::make_tuple(s.rest, s.srw.sorted_values(), d);
    probe.run(w, [&]() -> Verdict {
      auto [it, fresh] = solutions.emplace(key, w);
      if (!fresh) return "also solved by " + to_string(it->second);
      const Word r = tk.rins(s.rest, s.srw, d);
      if (r != w) return "rins gives " + to_string(r);
      return std::nullopt;
    });
  });
  // Admissible triples: a value set B of size q >= 2, 1 <= d <= q-1, and any
  // arrangement a of the complement.
  std::uint64_t expected = 0;
  for (int q = 2; q <= n; ++q) {
    expected += falling_factorial(n, q) / falling_factorial(q, q) *
                static_cast<std::uint64_t>(q - 1) * falling_factorial(n - q, n - q);
  }
  probe.run("triple count", [&]() -> Verdict {
    if (solutions.size() != expected) {
      return std::to_string(solutions.size()) + " triples solved, expected " +
             std::to_string(expected);
    }
    return std::nullopt;
  });
  out.push_back(probe.take());
}

}  // namespace

void check_sweep_size(int n, bool force) {
  if (n > kSafetyCap && !force) {
    throw SafetyCapError("refusing an exhaustive sweep at n = " + std::to_string(n) +
                         " (cap " + std::to_string(kSafetyCap) + "); pass force to override");
  }
}

std::uint64_t falling_factorial(int n, int r) {
  if (r < 0 || r > n) return 0;
  std::uint64_t out = 1;
  for (int j = 0; j < r; ++j) out *= static_cast<std::uint64_t>(n - j);
  return out;
}

std::vector<Word> all_permutations(int n) {
  std::vector<Word> out;
  out.reserve(falling_factorial(n, n));
  for_each_permutation(n, [&out](const Word& w) { out.push_back(w); });
  return out;
}

const char* to_string(FourSet set) {
  switch (set) {
    case FourSet::kSemipermutations:
      return "semipermutations";
    case FourSet::kLongSrw:
      return "long_srw";
    case FourSet::kLongSw:
      return "long_sw";
    case FourSet::kLecLongHook:
      return "lec_long_hook";
  }
  return "?";
}

std::uint64_t CountTable::total() const {
  return std::accumulate(counts.begin(), counts.end(), std::uint64_t{0});
}

std::array<CountTable, 4> four_set_tables(int n, int k, bool force) {
  check_nk(n, k, "four_set_tables");
  check_sweep_size(n, force);
  std::array<CountTable, 4> t;
  const FourSet labels[] = {FourSet::kSemipermutations, FourSet::kLongSrw,
                            FourSet::kLongSw, FourSet::kLecLongHook};
  for (int j = 0; j < 4; ++j) t[j] = {n, k, labels[j], std::vector<std::uint64_t>(n, 0)};

  for_each_semipermutation(n, k, [&](const Semipermutation& sp) {
    ++t[0].counts.at(semiperm_des(sp));
  });
  const auto cut = static_cast<std::size_t>(n - k);
  for_each_permutation(n, [&](const Word& w) {
    const int d = des(w);
    if (srw_split(w).srw.size() >= cut) ++t[1].counts.at(d);
    if (sw_split(w).sw.size() >= cut) ++t[2].counts.at(d);
    if (rightmost_hook_length(w) >= cut) ++t[3].counts.at(lec(w));
  });
  return t;
}

FourSetCounts count_four_sets(int n, int k, int i, bool force) {
  if (i < 0) throw std::out_of_range("count_four_sets: i must be non-negative");
  const auto t = four_set_tables(n, k, force);
  FourSetCounts c;
  c.semipermutations = t[0].at(i);
  c.long_srw = t[1].at(i);
  c.long_sw = t[2].at(i);
  c.lec_long_hook = t[3].at(i);
  c.outside_stated_range = i == 0;
  return c;
}

CountTable eulerian_table(int n, int k, bool force) {
  check_nk(n, k, "eulerian_table");
  check_sweep_size(n, force);
  CountTable t{n, k, FourSet::kSemipermutations, std::vector<std::uint64_t>(n, 0)};
  for_each_semipermutation(n, k, [&t](const Semipermutation& sp) {
    ++t.counts.at(semiperm_des(sp));
  });
  return t;
}

std::vector<std::uint64_t> eulerian_row_by_descents(int n) {
  std::vector<std::uint64_t> row(std::max(n, 1), 0);
  for_each_permutation(n, [&row](const Word& w) { ++row.at(des(w)); });
  return row;
}

bool Report::passed() const { return failures() == 0; }

std::size_t Report::failures() const {
  return static_cast<std::size_t>(std::count_if(
      checks.begin(), checks.end(), [](const CheckResult& c) { return !c.passed; }));
}

void Report::write_text(std::ostream& os) const {
  for (const auto& c : checks) {
    os << (c.passed ? "PASS " : "FAIL ") << c.name << ' ' << c.params << " cases="
       << c.cases;
    if (!c.passed) {
      os << " counterexample=\"" << c.counterexample.value_or("") << "\" reason=\""
         << c.detail << '"';
    }
    os << '\n';
  }
  os << "summary: " << checks.size() << " checks, " << failures() << " failed\n";
}

void Report::write_json(std::ostream& os) const {
  for (const auto& c : checks) {
    nlohmann::json j = {{"name", c.name},
                        {"params", c.params},
                        {"status", c.passed ? "pass" : "fail"},
                        {"cases", c.cases}};
    j["counterexample"] = c.counterexample ? nlohmann::json(*c.counterexample) : nullptr;
    if (!c.passed) j["reason"] = c.detail;
    os << j.dump() << '\n';
  }
}

Report verify_all(int n_max, const Toolkit& tk, bool force) {
  if (n_max < 1) throw std::out_of_range("verify_all: n_max must be >= 1");
  check_sweep_size(n_max, force);
  Report report;
  auto& out = report.checks;
  for (int n = 1; n <= n_max; ++n) {
    sweep_words(n, tk, out);
    sweep_constructors(n, out);
    sweep_rins_uniqueness(n, tk, out);
    sweep_mu_nu(n, out);
    sweep_four_sets(n, out);
    sweep_restriction(n, "theta_restriction", tk.theta,
                      [](const Word& w) { return srw_split(w).srw.size(); }, out);
    sweep_restriction(n, "psi_restriction", tk.psi,
                      [](const Word& w) { return sw_split(w).sw.size(); }, out);
    sweep_basis(n, out);
  }
  return report;
}

}  // namespace permstat
