/*
   Copyright 2026 The rbb authors

   Licensed under the Apache License, Version 2.0 (the "License");
   you may not use this file except in compliance with the License.
   You may obtain a copy of the License at

        http://www.apache.org/licenses/LICENSE-2.0

   Unless required by applicable law or agreed to in writing, software
   distributed under the License is distributed on an "AS IS" BASIS,
   WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
   See the License for the specific language governing permissions and
   limitations under the License.
*/

// End-to-end tests of the rbb binary: exit-code contract, output
// formats, cache handling and the injected-fault paths.

#include <doctest.h>

#include <algorithm>
#include <cstdio>
#include <fstream>
#include <json.hpp>
#include <sstream>
#include <string>
#include <sys/wait.h>
#include <unistd.h>
#include <vector>

#include "rbb/bernoulli.hpp"

namespace {

struct RunResult {
    int exit_code = -1;
    std::string output;  // stdout + stderr
};

RunResult run_cli(const std::string& args, const std::string& env = "") {
    std::string cmd = env + " " + std::string(RBB_CLI_PATH) + " " + args + " 2>&1";
    FILE* pipe = popen(cmd.c_str(), "r");
    REQUIRE(pipe != nullptr);
    RunResult result;
    char buffer[4096];
    std::size_t got;
    while ((got = fread(buffer, 1, sizeof buffer, pipe)) > 0)
        result.output.append(buffer, got);
    int status = pclose(pipe);
    result.exit_code = WIFEXITED(status) ? WEXITSTATUS(status) : -1;
    return result;
}

std::vector<std::string> lines_of(const std::string& text) {
    std::vector<std::string> lines;
    std::istringstream in(text);
    std::string line;
    while (std::getline(in, line)) lines.push_back(line);
    return lines;
}

std::string temp_path(const char* tag) {
    return std::string("/tmp/rbb_cli_") + tag + "_" + std::to_string(::getpid());
}

}  // namespace

TEST_CASE("table output") {
    RunResult r = run_cli("table bernoulli-numbers 4");
    CHECK(r.exit_code == 0);
    CHECK(r.output == "0\t1\n1\t-1/2\n2\t1/6\n3\t0\n4\t-1/30\n");

    r = run_cli("table power-sums 1");
    CHECK(r.exit_code == 0);
    CHECK(r.output == "F_0 = m\nF_1 = 1/2*m^2 + 1/2*m\n");

    r = run_cli("table harmonic 3");
    CHECK(r.exit_code == 0);
    CHECK(r.output == "1\t1\n2\t3/2\n3\t11/6\n");

    r = run_cli("table divided 2");
    CHECK(r.exit_code == 0);
    CHECK(lines_of(r.output).size() == 2);  // rows 1..2

    CHECK(run_cli("table bernoulli-polys 3").output.find("B_1(x) = x - 1/2") !=
          std::string::npos);

    CHECK(run_cli("table no-such-kind 3").exit_code == 2);
    CHECK(run_cli("table bernoulli-numbers").exit_code == 2);
}

TEST_CASE("verify exit codes") {
    CHECK(run_cli("verify miki 4").exit_code == 0);
    CHECK(run_cli("verify miki 3").exit_code == 2);       // constraint
    CHECK(run_cli("verify miki").exit_code == 2);         // arity
    CHECK(run_cli("verify no-such 1").exit_code == 2);    // unknown
    CHECK(run_cli("verify lemma 40").exit_code == 0);

    RunResult c = run_cli("verify triple-product 2 2 2");
    CHECK(c.exit_code == 0);
    CHECK(c.output.find("constant=1/30240") != std::string::npos);

    // the genuine failure case: difference polynomial and witness printed
    RunResult f = run_cli("verify triple-integral 1 1 2");
    CHECK(f.exit_code == 1);
    CHECK(f.output.find("NonConstant") != std::string::npos);
    CHECK(f.output.find("witness_exponent=1") != std::string::npos);
    CHECK(f.output.find("1/360*x") != std::string::npos);

    nlohmann::json j =
        nlohmann::json::parse(run_cli("verify miki 6 --format json").output);
    CHECK(j["class"] == "Zero");
}

TEST_CASE("sweep ranges and formats") {
    RunResult r = run_cli("sweep --identity nielsen --range i=1..10 --range j=1..10");
    CHECK(r.exit_code == 0);
    auto lines = lines_of(r.output);
    CHECK(std::count_if(lines.begin(), lines.end(), [](const std::string& l) {
              return l.rfind("nielsen ", 0) == 0;
          }) == 100);
    CHECK(r.output.find("summary: passed=100 failed=0") != std::string::npos);

    RunResult csv = run_cli("sweep --identity agoh --range n=0..3 --range m=0..3 --format csv");
    CHECK(csv.exit_code == 0);
    CHECK(lines_of(csv.output).front() ==
          "identity,params,class,constant,difference,elapsed_ms,note");
    CHECK(csv.output.find("agoh,\"0;0\",Zero") != std::string::npos);

    CHECK(run_cli("sweep --identity no-such").exit_code == 2);
    CHECK(run_cli("sweep --identity miki --range q=1..2").exit_code == 2);
    CHECK(run_cli("sweep --identity miki --range N=bad..4").exit_code == 2);
    CHECK(run_cli("sweep --identity miki --workers 0").exit_code == 2);
}

TEST_CASE("sweep determinism across worker counts") {
    const std::string args = "sweep --identity gessel --range N=2..25 --format json";
    RunResult one = run_cli(args + " --workers 1");
    RunResult many = run_cli(args + " --workers 7");
    CHECK(one.exit_code == 0);
    CHECK(many.exit_code == 0);
    auto strip = [](const std::string& text) {
        std::vector<std::string> bodies;
        for (const std::string& line : lines_of(text)) {
            nlohmann::json j = nlohmann::json::parse(line);
            if (j.contains("type")) continue;
            j.erase("elapsed_ms");
            bodies.push_back(j.dump());
        }
        return bodies;
    };
    CHECK(strip(one.output) == strip(many.output));
}

TEST_CASE("cache write / check round trip and injected faults") {
    std::string path = temp_path("cache");
    CHECK(run_cli("cache write " + path + " 24").exit_code == 0);
    CHECK(run_cli("cache check " + path + " 24").exit_code == 0);

    // corrupt B_2 to 1/5: check must fail naming line 3
    {
        std::vector<std::string> lines = lines_of([&] {
            std::ifstream in(path);
            std::stringstream ss;
            ss << in.rdbuf();
            return ss.str();
        }());
        lines[2] = "2\t1/5";
        std::ofstream out(path);
        for (const std::string& l : lines) out << l << '\n';
    }
    RunResult bad = run_cli("cache check " + path + " 24");
    CHECK(bad.exit_code == 1);
    CHECK(bad.output.find("line 3") != std::string::npos);

    // empty file is vacuously fine
    std::string empty = temp_path("empty");
    { std::ofstream out(empty); }
    CHECK(run_cli("cache check " + empty + " 0").exit_code == 0);

    // malformed file
    std::string mal = temp_path("malformed");
    {
        std::ofstream out(mal);
        out << "0\t1\ngarbage\n";
    }
    CHECK(run_cli("cache check " + mal + " 1").exit_code == 1);

    std::remove(path.c_str());
    std::remove(empty.c_str());
    std::remove(mal.c_str());
}

TEST_CASE("sweep with a corrupted cache entry fails fast") {
    // Build a cache whose corruption sits above every sampled index, so
    // the 10% load validation provably misses it and the sweep itself
    // must catch the wrong mathematics. The detector is a convolution
    // identity: corrupting an even-index entry and extending by the
    // recurrence leaves both symmetry identities intact, but B_40 enters
    // one side of the convolutions directly.
    const std::size_t count = 41;  // indices 0..40
    std::vector<std::size_t> sample = rbb::bernoulli_validation_sample(count);
    std::size_t max_sampled = sample.empty() ? 0 : sample.back();
    REQUIRE(max_sampled < 40);
    const std::size_t corrupt = 40;

    std::string path = temp_path("corrupt");
    {
        std::ofstream out(path);
        for (std::size_t n = 0; n < count; ++n) {
            rbb::Rational v = rbb::bernoulli_number(static_cast<long>(n));
            if (n == corrupt) v = v + rbb::Rational(1, 7);
            out << n << '\t' << v.str() << '\n';
        }
    }

    RunResult r = run_cli("sweep --identity miki --range N=4..60 "
                          "--fail-fast --cache " + path);
    CHECK(r.exit_code == 1);
    CHECK(r.output.find("aborted") != std::string::npos);
    CHECK(r.output.find("miki [40] Constant") != std::string::npos);
    CHECK(r.output.find("FAIL") != std::string::npos);
    // fail-fast stopped before the full 57 reports
    CHECK(lines_of(r.output).size() < 45);

    // the same file fails a full check deterministically
    CHECK(run_cli("cache check " + path + " 40").exit_code == 1);

    // and a cache the sampler does catch is rejected at load time
    {
        std::ofstream out(path);
        for (std::size_t n = 0; n < count; ++n) {
            rbb::Rational v = rbb::bernoulli_number(static_cast<long>(n));
            if (n == sample.front()) v = v + rbb::Rational(1, 7);
            out << n << '\t' << v.str() << '\n';
        }
    }
    if (sample.front() > 0)  // entry 0 would also be caught; either way exit 2
        CHECK(run_cli("sweep --identity miki --cache " + path).exit_code == 2);
    std::remove(path.c_str());
}

TEST_CASE("RBB_CACHE environment variable supplies the cache path") {
    std::string path = temp_path("envcache");
    CHECK(run_cli("cache write " + path + " 30").exit_code == 0);
    RunResult r = run_cli("sweep --identity miki --range N=4..10", "RBB_CACHE=" + path);
    CHECK(r.exit_code == 0);
    CHECK(r.output.find("summary: passed=7 failed=0") != std::string::npos);
    std::remove(path.c_str());
}

TEST_CASE("usage errors") {
    CHECK(run_cli("").exit_code == 2);
    CHECK(run_cli("frobnicate").exit_code == 2);
    CHECK(run_cli("--help").exit_code == 0);
}
