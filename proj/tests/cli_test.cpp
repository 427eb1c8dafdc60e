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

// Golden tests for the command-line tool. The binary path comes from the
// build system.

#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <array>
#include <cstdio>
#include <json.hpp>
#include <string>
#include <sys/wait.h>

namespace {

struct Run {
  std::string out;
  int code = -1;
};

// Runs the tool with a shell-quoted argument string, capturing stdout or
// stderr.
Run run(const std::string& args, bool want_stderr = false) {
  const std::string cmd = std::string(PERMSTAT_CLI) + " " + args +
                          (want_stderr ? " 2>&1 1>/dev/null" : " 2>/dev/null");
  Run r;
  FILE* pipe = popen(cmd.c_str(), "r");
  REQUIRE(pipe != nullptr);
  std::array<char, 4096> buf{};
  std::size_t got = 0;
  while ((got = fread(buf.data(), 1, buf.size(), pipe)) > 0) r.out.append(buf.data(), got);
  const int status = pclose(pipe);
  r.code = WIFEXITED(status) ? WEXITSTATUS(status) : -1;
  return r;
}

Run run_stderr(const std::string& args) { return run(args, true); }

}  // namespace

TEST_SUITE("cli") {

TEST_CASE("stats on the worked word") {
  const Run r = run("stats '4 5 7 6 2 3 1 8'");
  CHECK(r.code == 0);
  CHECK(r.out ==
        "word: 4 5 7 6 2 3 1 8\n"
        "length: 8\n"
        "des: 3\n"
        "Des: 3 4 6\n"
        "inv: 15\n"
        "lec: 2\n"
        "gamma: 4 5 7\n"
        "hooks: 6 2 | 3 1 8\n"
        "rightmost_hook_length: 3\n"
        "srw: 4 5 7 6\n"
        "srw_rest: 2 3 1 8\n"
        "srdes: 2\n"
        "sw: 7 6\n"
        "sw_rest: 4 5 2 3 1 8\n");
}

TEST_CASE("stats shows the hook factorization") {
  const Run r = run("stats '1 8 3 2 6 4 5 7'");
  CHECK(r.code == 0);
  CHECK(r.out.find("gamma: 1 8\nhooks: 3 2 | 6 4 5 7\n") != std::string::npos);
  CHECK(r.out.find("lec: 3\n") != std::string::npos);
}

TEST_CASE("stats on the empty word") {
  const Run r = run("stats ''");
  CHECK(r.code == 0);
  CHECK(r.out ==
        "word: \nlength: 0\ndes: 0\nDes: \ninv: 0\nlec: 0\ngamma: \nhooks: \n"
        "rightmost_hook_length: 0\nsrw: \nsrw_rest: \nsrdes: 0\nsw: \nsw_rest: \n");
}

TEST_CASE("stats in json") {
  const Run r = run("--format json stats 45762318");
  CHECK(r.code == 0);
  const auto j = nlohmann::json::parse(r.out);
  CHECK(j.at("des") == 3);
  CHECK(j.at("srw") == "4 5 7 6");
  CHECK(j.at("srdes") == 2);
}

TEST_CASE("apply") {
  CHECK(run("apply theta '4 5 7 6 2 3 1 8'").out == "1 8 3 2 6 4 5 7\n");
  CHECK(run("apply eta '1 8 3 2 6 4 5 7'").out == "4 5 7 6 2 3 1 8\n");
  CHECK(run("apply psi '1 3 6 7 5 4 2 8'").out == "1 8 3 2 6 4 5 7\n");
  CHECK(run("apply phi '1 8 3 2 6 4 5 7'").out == "1 3 6 7 5 4 2 8\n");
  CHECK(run("apply mu '4,5,7|6 2 3 1 8'").out == "4 5 7 6 2 3 1 8\n");
  CHECK(run("apply nu '4 5 7 6 2 3 1 8' --k 4").out == "4,5,7|6 2 3 1 8\n");
  CHECK(run("apply c '1 2 3'").out == "3 2 1\n");
  CHECK(run("apply r '4 5 7 6 2 3 1 8'").out == "8 1 3 2 6 7 5 4\n");
  const Run j = run("--format json apply theta 45762318");
  CHECK(nlohmann::json::parse(j.out).at("image") == "1 8 3 2 6 4 5 7");
}

TEST_CASE("table") {
  const Run r = run("table 4 2");
  CHECK(r.code == 0);
  CHECK(r.out == "1 11 11 1\n");
  CHECK(run("table 5 0").out == "1 1 1 1 1\n");
  CHECK(run("table 4 2 --bfile --offset 1").out == "1 1\n2 11\n3 11\n4 1\n");
  CHECK(nlohmann::json::parse(run("--format json table 4 2").out).at("counts") ==
        nlohmann::json::array({1, 11, 11, 1}));
}

TEST_CASE("basis") {
  CHECK(run("basis 2 1").out == "1\n1,2:1\n");
  CHECK(run("basis 3 2 --grade 2").out == "1,2,3:2\n");
  CHECK(run("basis 3 1 --grade 1 --show-permutation").out ==
        "1,2:1\t3 2 1\n1,2,3:1\t2 1 3\n1,3:1\t2 3 1\n2,3:1\t1 3 2\n");
}

TEST_CASE("monomial conversion") {
  const std::string m = "'1,2,4,5:2;1,2,4,5,6,7,8:2;1,2,4,5,6,7,8,9,11:1'";
  const Run r = run("monomial to-perm " + m + " --k 7");
  CHECK(r.code == 0);
  CHECK(r.out == "3 10 11 9 8 6 7 4 1 2 5\n");
  CHECK(run("monomial to-chain '3 10 11 9 8 6 7 4 1 2 5' --k 7").out ==
        "1,2,4,5:2;1,2,4,5,6,7,8:2;1,2,4,5,6,7,8,9,11:1\n");
  CHECK(run("monomial to-perm 1 --k 2 --n 4").out == "1 2 3 4\n");
}

TEST_CASE("verify") {
  const Run r = run("verify 6");
  CHECK(r.code == 0);
  CHECK(r.out.find("FAIL") == std::string::npos);
  CHECK(r.out.find(" 0 failed\n") != std::string::npos);
  const Run j = run("--format json verify 3");
  CHECK(j.code == 0);
  CHECK(j.out.find("\"status\":\"pass\"") != std::string::npos);
}

TEST_CASE("output is deterministic") {
  CHECK(run("verify 4").out == run("verify 4").out);
  CHECK(run("basis 4 2").out == run("basis 4 2").out);
}

TEST_CASE("exit codes") {
  CHECK(run("").code == 1);
  CHECK(run("stats").code == 1);
  CHECK(run("apply sigma '1 2'").code == 1);
  CHECK(run("apply nu '1 2'").code == 1);
  CHECK(run("--format xml stats 12").code == 1);
  CHECK(run("stats '1 x 3'").code == 1);
  CHECK(run("apply mu '1,2 3'").code == 1);
  CHECK(run("apply nu '2 1 3' --k 0").code == 2);
  CHECK(run("apply c '1 3'").code == 2);
  CHECK(run("table 4 4").code == 2);
  CHECK(run("table 11 2").code == 2);
  CHECK(run("monomial to-perm '1,2,4,5:4' --k 7 --n 11").code == 2);
  CHECK(run("monomial to-chain '1 2 4 3' --k 1").code == 2);
}

TEST_CASE("error messages") {
  CHECK(run_stderr("stats '1 x 3'").out.find("token 2") != std::string::npos);
  CHECK(run_stderr("table 11 2").out.find("cap") != std::string::npos);
}

}  // TEST_SUITE
