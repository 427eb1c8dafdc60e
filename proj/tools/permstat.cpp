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

// permstat: statistics, bijections, tables and verification on the command
// line. Exit codes: 0 success, 1 usage or parse error, 2 domain error,
// 3 verification failure.

#include <CLI11.hpp>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <json.hpp>

#include "permstat/bijections.hpp"
#include "permstat/cohomology.hpp"
#include "permstat/enumeration.hpp"
#include "permstat/errors.hpp"
#include "permstat/waves.hpp"
#include "permstat/word.hpp"

namespace {

using nlohmann::ordered_json;
using namespace permstat;

constexpr int kExitUsage = 1;
constexpr int kExitDomain = 2;
constexpr int kExitVerify = 3;

struct Options {
  std::string format = "text";

  bool json() const { return format == "json"; }
};

std::string join_positions(const std::vector<std::size_t>& v) {
  std::string out;
  for (std::size_t i = 0; i < v.size(); ++i) {
    if (i > 0) out += ' ';
    out += std::to_string(v[i]);
  }
  return out;
}

std::string join_hooks(const std::vector<Word>& hooks) {
  std::string out;
  for (std::size_t i = 0; i < hooks.size(); ++i) {
    if (i > 0) out += " | ";
    out += to_string(hooks[i]);
  }
  return out;
}

int cmd_stats(const Options& opt, const std::string& text) {
  const Word w = parse_word(text);
  const auto f = hook_factorization(w);
  ordered_json j;
  j["word"] = to_string(w);
  j["length"] = w.size();
  j["des"] = des(w);
  j["Des"] = join_positions(des_set(w));
  j["inv"] = inv(w);
  j["lec"] = lec(w);
  j["gamma"] = to_string(f.gamma);
  j["hooks"] = join_hooks(f.hooks);
  j["rightmost_hook_length"] = rightmost_hook_length(w);
  if (w.empty()) {
    j["srw"] = "";
    j["srw_rest"] = "";
    j["srdes"] = 0;
    j["sw"] = "";
    j["sw_rest"] = "";
  } else {
    const auto rs = srw_split(w);
    const auto ws = sw_split(w);
    j["srw"] = to_string(rs.srw);
    j["srw_rest"] = to_string(rs.rest);
    j["srdes"] = srdes(rs);
    j["sw"] = to_string(ws.sw);
    j["sw_rest"] = to_string(ws.rest);
  }
  if (opt.json()) {
    std::cout << j.dump() << '\n';
  } else {
    for (const auto& [key, value] : j.items()) {
      std::cout << key << ": "
                << (value.is_string() ? value.get<std::string>() : value.dump()) << '\n';
    }
  }
  return 0;
}

int cmd_apply(const Options& opt, const std::string& map, const std::string& input,
              std::optional<int> k) {
  std::string image;
  if (map == "mu") {
    image = to_string(mu(parse_semipermutation(input)));
  } else if (map == "nu") {
    if (!k) throw CLI::ValidationError("apply nu", "--k is required");
    image = to_string(nu(parse_word(input), *k));
  } else {
    const Word w = parse_word(input);
    if (map == "theta") image = to_string(theta(w));
    else if (map == "eta") image = to_string(eta(w));
    else if (map == "psi") image = to_string(psi(w));
    else if (map == "phi") image = to_string(phi(w));
    else if (map == "c") image = to_string(complement(w, static_cast<int>(w.size())));
    else image = to_string(reverse(w));
  }
  if (opt.json()) {
    ordered_json j{{"map", map}, {"input", input}, {"image", image}};
    std::cout << j.dump() << '\n';
  } else {
    std::cout << image << '\n';
  }
  return 0;
}

int cmd_table(const Options& opt, int n, int k, bool bfile, long offset, bool force) {
  const CountTable t = eulerian_table(n, k, force);
  if (opt.json()) {
    ordered_json j{{"n", n}, {"k", k}, {"counts", t.counts}};
    std::cout << j.dump() << '\n';
  } else if (bfile) {
    for (std::size_t i = 0; i < t.counts.size(); ++i) {
      std::cout << offset + static_cast<long>(i) << ' ' << t.counts[i] << '\n';
    }
  } else {
    for (std::size_t i = 0; i < t.counts.size(); ++i) {
      std::cout << (i > 0 ? " " : "") << t.counts[i];
    }
    std::cout << '\n';
  }
  return 0;
}

int cmd_basis(const Options& opt, int n, int k, std::optional<int> grade,
              bool show_permutation, bool force) {
  check_sweep_size(n, force);
  for (const auto& m : enumerate_basis(n, k, grade)) {
    if (opt.json()) {
      ordered_json j{{"monomial", to_string(m)}, {"grade", m.grade()}};
      if (show_permutation) j["permutation"] = to_string(monomial_to_permutation(m));
      std::cout << j.dump() << '\n';
    } else {
      std::cout << to_string(m);
      if (show_permutation) std::cout << '\t' << to_string(monomial_to_permutation(m));
      std::cout << '\n';
    }
  }
  return 0;
}

int cmd_monomial(const Options& opt, const std::string& direction, const std::string& input,
                 int k, std::optional<int> n) {
  std::string result;
  if (direction == "to-perm") {
    result = to_string(monomial_to_permutation(parse_monomial(input, k, n)));
  } else {
    result = to_string(permutation_to_monomial(parse_word(input), k));
  }
  if (opt.json()) {
    ordered_json j{{"direction", direction}, {"input", input}, {"result", result}};
    std::cout << j.dump() << '\n';
  } else {
    std::cout << result << '\n';
  }
  return 0;
}

int cmd_verify(const Options& opt, int n_max, bool force) {
  const Report report = verify_all(n_max, Toolkit{}, force);
  if (opt.json()) {
    report.write_json(std::cout);
  } else {
    report.write_text(std::cout);
  }
  return report.passed() ? 0 : kExitVerify;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Permutation statistics: des, inv, lec, wave splits and bijections"};
  app.require_subcommand(1);
  app.fallthrough();
  Options opt;
  app.add_option("--format", opt.format, "Output format")
      ->check(CLI::IsMember({"text", "json"}));

  std::string word_text;
  auto* stats = app.add_subcommand("stats", "All statistics of one word");
  stats->add_option("word", word_text, "Word, e.g. \"4 5 7 6 2 3 1 8\"")->required();

  std::string map_name, apply_input;
  std::optional<int> apply_k;
  auto* apply = app.add_subcommand("apply", "Apply a bijection or utility map");
  apply->add_option("map", map_name, "theta, eta, psi, phi, mu, nu, c or r")
      ->required()
      ->check(CLI::IsMember({"theta", "eta", "psi", "phi", "mu", "nu", "c", "r"}));
  apply->add_option("input", apply_input, "Word, or semipermutation for mu")->required();
  apply->add_option("--k", apply_k, "k for nu");

  int table_n = 0, table_k = 0;
  bool bfile = false, table_force = false;
  long bfile_offset = 0;
  auto* table = app.add_subcommand("table", "Betti numbers beta_{2i} for fixed n, k");
  table->add_option("n", table_n)->required();
  table->add_option("k", table_k)->required();
  table->add_flag("--bfile", bfile, "Print 'index value' lines (OEIS b-file)");
  table->add_option("--offset", bfile_offset, "First b-file index");
  table->add_flag("--force", table_force, "Allow n above the safety cap");

  int basis_n = 0, basis_k = 0;
  std::optional<int> basis_grade;
  bool show_perm = false, basis_force = false;
  auto* basis = app.add_subcommand("basis", "List basis monomials in canonical order");
  basis->add_option("n", basis_n)->required();
  basis->add_option("k", basis_k)->required();
  basis->add_option("--grade", basis_grade);
  basis->add_flag("--show-permutation", show_perm);
  basis->add_flag("--force", basis_force, "Allow n above the safety cap");

  std::string direction, mono_input;
  int mono_k = 0;
  std::optional<int> mono_n;
  auto* monomial = app.add_subcommand("monomial", "Convert between monomials and permutations");
  monomial->add_option("direction", direction, "to-perm or to-chain")
      ->required()
      ->check(CLI::IsMember({"to-perm", "to-chain"}));
  monomial->add_option("input", mono_input, "Monomial or word")->required();
  monomial->add_option("--k", mono_k)->required();
  monomial->add_option("--n", mono_n, "Ambient n (default: largest value in the chain)");

  int verify_n = 0;
  bool verify_force = false;
  auto* verify = app.add_subcommand("verify", "Exhaustive verification up to n_max");
  verify->add_option("n_max", verify_n)->required();
  verify->add_flag("--force", verify_force, "Allow n_max above the safety cap");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kExitUsage;
  }

  try {
    if (*stats) return cmd_stats(opt, word_text);
    if (*apply) return cmd_apply(opt, map_name, apply_input, apply_k);
    if (*table) return cmd_table(opt, table_n, table_k, bfile, bfile_offset, table_force);
    if (*basis) return cmd_basis(opt, basis_n, basis_k, basis_grade, show_perm, basis_force);
    if (*monomial) return cmd_monomial(opt, direction, mono_input, mono_k, mono_n);
    if (*verify) return cmd_verify(opt, verify_n, verify_force);
  } catch (const CLI::ValidationError& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kExitUsage;
  } catch (const ParseError& e) {
    std::cerr << "parse error: " << e.what() << '\n';
    return kExitUsage;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kExitDomain;
  }
  return kExitUsage;
}
