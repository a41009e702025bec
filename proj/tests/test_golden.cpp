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

#include <filesystem>
#include <fstream>
#include <nlohmann/json.hpp>
#include <sstream>

#include "kerrsim/golden.hpp"
#include "kerrsim/errors.hpp"

using namespace kerrsim;

TEST_SUITE_BEGIN("golden");

namespace {

const std::string kGoldenDir = std::string(KERRSIM_SOURCE_DIR) + "/data/golden";

std::string read_file(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    REQUIRE(in);
    std::ostringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

std::filesystem::path fresh_temp_dir(const char* tag) {
    auto dir = std::filesystem::temp_directory_path() /
               (std::string("kerrsim_golden_") + tag);
    std::filesystem::remove_all(dir);
    std::filesystem::create_directories(dir);
    return dir;
}

}  // namespace

TEST_CASE("committed golden files are byte-identical to a regeneration") {
    for (const auto& fresh : generate_golden_files()) {
        CHECK(read_file(kGoldenDir + "/" + fresh.name) == fresh.contents);
    }
    CHECK(stale_golden_files(kGoldenDir).empty());
}

TEST_CASE("golden structure matches the protocols") {
    const auto cnot = nlohmann::json::parse(cnot_golden_json());
    REQUIRE(cnot.at("cases").size() == 16);
    for (const auto& entry : cnot.at("cases")) {
        CHECK(entry.at("amplitudes").size() == 16);
        CHECK(entry.at("probability").get<double>() == doctest::Approx(0.25));
        // every oracle state matches its published row
        CHECK(entry.at("table_overlap").get<double>() >= 1.0 - 1e-10);
    }

    const auto tele3 = nlohmann::json::parse(teleport_golden_json(3));
    REQUIRE(tele3.at("entries").size() == 4);
    for (const auto& entry : tele3.at("entries")) {
        CHECK(entry.at("fidelity").get<double>() >= 1.0 - 1e-10);
        CHECK(entry.at("x_quarter_turns").get<int>() == 0);
    }
    const auto tele4 = nlohmann::json::parse(teleport_golden_json(4));
    REQUIRE(tele4.at("entries").size() == 8);
    const auto tele7 = nlohmann::json::parse(teleport_golden_json(7));
    REQUIRE(tele7.at("entries").size() == 64);
}

TEST_CASE("write and stale detection") {
    const auto dir = fresh_temp_dir("roundtrip");
    write_golden_files(dir.string());
    CHECK(stale_golden_files(dir.string()).empty());

    // Flip one byte: that file (and only that file) becomes stale.
    {
        std::ofstream out(dir / "cnot_cases.json", std::ios::binary | std::ios::app);
        out << " ";
    }
    const auto stale = stale_golden_files(dir.string());
    REQUIRE(stale.size() == 1);
    CHECK(stale[0] == "cnot_cases.json");
    std::filesystem::remove_all(dir);
}

TEST_CASE("missing and malformed files give structured errors") {
    const auto dir = fresh_temp_dir("badfiles");
    const auto missing = stale_golden_files(dir.string());
    CHECK(missing.size() == generate_golden_files().size());

    {
        std::ofstream out(dir / "cnot_cases.json", std::ios::binary);
        out << "{definitely not json";
    }
    CHECK_THROWS_AS(check_golden_file((dir / "cnot_cases.json").string()), IoError);
    CHECK_THROWS_AS(stale_golden_files(dir.string()), IoError);

    {
        std::ofstream out(dir / "cnot_cases.json", std::ios::binary);
        out << "{\"protocol\":\"cnot\",\"cases\":[]}";
    }
    CHECK_THROWS_AS(check_golden_file((dir / "cnot_cases.json").string()), IoError);

    CHECK_THROWS_AS(check_golden_file((dir / "nope.json").string()), IoError);
    std::filesystem::remove_all(dir);
}

TEST_SUITE_END();
