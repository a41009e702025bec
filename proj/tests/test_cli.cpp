// Copyright 2026 The kerrsim Authors.
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

#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <sstream>
#include <string>

#include "kerrsim/golden.hpp"

TEST_SUITE_BEGIN("cli");

namespace {

const std::string kCli = KERRSIM_CLI_PATH;
const std::string kRoot = KERRSIM_SOURCE_DIR;

struct RunResult {
    int exit_code;
    std::string output;
};

RunResult run_cli(const std::string& args) {
    const auto out_path = std::filesystem::temp_directory_path() / "kerrsim_cli_out.txt";
    const std::string command =
        "'" + kCli + "' " + args + " > '" + out_path.string() + "' 2>&1";
    const int raw = std::system(command.c_str());
    std::ifstream in(out_path);
    std::ostringstream ss;
    ss << in.rdbuf();
    std::filesystem::remove(out_path);
    return {WEXITSTATUS(raw), ss.str()};
}

}  // namespace

TEST_CASE("verify passes against the committed golden files") {
    const auto res = run_cli("verify --golden-dir '" + kRoot + "/data/golden'");
    CHECK(res.exit_code == 0);
    CHECK(res.output.find("16/16") != std::string::npos);
    CHECK(res.output.find("VERIFY PASS") != std::string::npos);
}

TEST_CASE("verify fails with a missing golden directory") {
    const auto res = run_cli("verify --golden-dir /nonexistent/golden");
    CHECK(res.exit_code == 1);
    CHECK(res.output.find("VERIFY FAIL") != std::string::npos);
}

TEST_CASE("seeded sampling is byte deterministic") {
    const std::string cmd =
        "run '" + kRoot + "/circuits/cnot.qc' --sample --seed 42 --format json";
    const auto first = run_cli(cmd);
    const auto second = run_cli(cmd);
    CHECK(first.exit_code == 0);
    CHECK(first.output == second.output);

    const auto other = run_cli("run '" + kRoot +
                               "/circuits/cnot.qc' --sample --seed 7 --format json");
    CHECK(other.exit_code == 0);  // may or may not differ, but must run
}

TEST_CASE("teleport subcommand reports four passing branches") {
    const auto res = run_cli("teleport --n 3 --alpha 0.6 --beta 0.8i --enumerate");
    CHECK(res.exit_code == 0);
    CHECK(res.output.find("4/4 branches PASS") != std::string::npos);
}

TEST_CASE("usage and parse errors exit with 2") {
    CHECK(run_cli("").exit_code == 2);
    CHECK(run_cli("teleport --n 3 --sample").exit_code == 2);  // missing seed
    CHECK(run_cli("frobnicate").exit_code == 2);

    const auto bad = std::filesystem::temp_directory_path() / "kerrsim_bad.qc";
    {
        std::ofstream out(bad);
        out << "modes 2\nkerr 0 0 1pi/4\n";
    }
    const auto res = run_cli("run '" + bad.string() + "'");
    CHECK(res.exit_code == 2);
    CHECK(res.output.find("line 2") != std::string::npos);
    std::filesystem::remove(bad);
}

TEST_CASE("regen-golden writes byte-identical files") {
    const auto dir = std::filesystem::temp_directory_path() / "kerrsim_regen";
    std::filesystem::remove_all(dir);
    const auto res = run_cli("regen-golden --out '" + dir.string() + "'");
    CHECK(res.exit_code == 0);
    for (const auto& fresh : kerrsim::generate_golden_files()) {
        std::ifstream regenerated(dir / fresh.name, std::ios::binary);
        REQUIRE(regenerated);
        std::ostringstream actual;
        actual << regenerated.rdbuf();
        CHECK(actual.str() == fresh.contents);

        std::ifstream committed(kRoot + "/data/golden/" + fresh.name, std::ios::binary);
        REQUIRE(committed);
        std::ostringstream expected;
        expected << committed.rdbuf();
        CHECK(actual.str() == expected.str());
    }
    std::filesystem::remove_all(dir);
}

TEST_CASE("tolerance override via flag and environment variable") {
    // Fidelities here are exact to machine precision, so even a tiny
    // tolerance passes.
    CHECK(run_cli("cnot --i1 1 --i4 1 --tol 1e-13").exit_code == 0);

    // The KERR_SIM_TOL default is honored; --tol still takes precedence.
    const auto out_path = std::filesystem::temp_directory_path() / "kerrsim_env_out.txt";
    const std::string command = "KERR_SIM_TOL=1e-13 '" + kCli +
                                "' teleport --n 3 > '" + out_path.string() + "' 2>&1";
    const int raw = std::system(command.c_str());
    CHECK(WEXITSTATUS(raw) == 0);
    std::filesystem::remove(out_path);

    const std::string bad_env = "KERR_SIM_TOL=banana '" + kCli + "' teleport --n 3 > '" +
                                out_path.string() + "' 2>&1";
    CHECK(WEXITSTATUS(std::system(bad_env.c_str())) == 0);  // warns, keeps default
    std::filesystem::remove(out_path);
}

TEST_SUITE_END();
