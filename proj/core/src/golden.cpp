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

#include "kerrsim/golden.hpp"

#include <cmath>
#include <fstream>
#include <nlohmann/json.hpp>
#include <sstream>

#include "kerrsim/jsonfmt.hpp"
#include "kerrsim/qubit_oracle.hpp"

namespace kerrsim {

namespace {

std::string read_file(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) {
        throw IoError("cannot read '" + path + "'");
    }
    std::ostringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

}  // namespace

std::string teleport_golden_json(std::size_t n_qubits) {
    const auto table = teleport_correction_table(n_qubits);
    JsonWriter w;
    w.begin_object();
    w.key("protocol");
    w.value_string("teleport");
    w.key("n");
    w.value_int(static_cast<long long>(n_qubits));
    w.key("probe_alpha");
    w.value_raw(complex_to_json(Complex{0.6, 0.0}));
    w.key("probe_beta");
    w.value_raw(complex_to_json(Complex{0.0, 0.8}));
    w.key("entries");
    w.begin_array();
    for (const auto& entry : table) {
        w.begin_object();
        w.key("s");
        w.begin_array();
        for (int s : entry.outcomes) {
            w.value_int(s);
        }
        w.end_array();
        w.key("pauli");
        w.value_string(to_string(entry.correction.pauli));
        w.key("x_quarter_turns");
        w.value_int(entry.correction.x_quarter_turns);
        w.key("fidelity");
        w.value_number(entry.fidelity);
        w.key("probability");
        w.value_number(entry.probability);
        w.end_object();
    }
    w.end_array();
    w.end_object();
    return w.str() + "\n";
}

std::string cnot_golden_json() {
    JsonWriter w;
    w.begin_object();
    w.key("protocol");
    w.value_string("cnot");
    w.key("cases");
    w.begin_array();
    for (int i1 = 0; i1 < 2; ++i1) {
        for (int i4 = 0; i4 < 2; ++i4) {
            for (const auto& c : cnot_reference(i1, i4)) {
                const QubitState table = cnot_table_state(c.i1, c.i4, c.s1, c.s2);
                w.begin_object();
                w.key("i1");
                w.value_int(c.i1);
                w.key("i4");
                w.value_int(c.i4);
                w.key("s");
                w.begin_array();
                w.value_int(c.s1);
                w.value_int(c.s2);
                w.end_array();
                w.key("probability");
                w.value_number(c.probability);
                w.key("table_overlap");
                w.value_number(std::abs(qubit_inner_product(table, c.post_state)));
                w.key("amplitudes");
                w.begin_array();
                for (const auto& amp : c.post_state.amplitudes()) {
                    w.value_raw(complex_to_json(amp));
                }
                w.end_array();
                w.end_object();
            }
        }
    }
    w.end_array();
    w.end_object();
    return w.str() + "\n";
}

std::vector<GoldenFile> generate_golden_files() {
    std::vector<GoldenFile> files;
    files.push_back({"cnot_cases.json", cnot_golden_json()});
    for (std::size_t n : {3, 4, 5, 7}) {
        files.push_back(
            {"teleport_corrections_n" + std::to_string(n) + ".json", teleport_golden_json(n)});
    }
    return files;
}

void write_golden_files(const std::string& directory) {
    for (const auto& file : generate_golden_files()) {
        const std::string path = directory + "/" + file.name;
        std::ofstream out(path, std::ios::binary);
        if (!out) {
            throw IoError("cannot open '" + path + "' for writing");
        }
        out << file.contents;
        if (!out) {
            throw IoError("failed writing '" + path + "'");
        }
    }
}

void check_golden_file(const std::string& path) {
    const std::string text = read_file(path);
    nlohmann::json doc;
    try {
        doc = nlohmann::json::parse(text);
    } catch (const nlohmann::json::exception& e) {
        throw IoError("malformed golden file '" + path + "': " + e.what());
    }
    try {
        const std::string protocol = doc.at("protocol").get<std::string>();
        if (protocol == "cnot") {
            if (doc.at("cases").size() != 16) {
                throw IoError("golden file '" + path + "' must hold 16 CNOT cases, found " +
                              std::to_string(doc.at("cases").size()));
            }
        } else if (protocol == "teleport") {
            const auto n = doc.at("n").get<std::size_t>();
            if (n < 2 || n > 12) {
                throw IoError("golden file '" + path + "' has implausible chain length " +
                              std::to_string(n));
            }
            const std::size_t expected = std::size_t{1} << (n - 1);
            if (doc.at("entries").size() != expected) {
                throw IoError("golden file '" + path + "' must hold " + std::to_string(expected) +
                              " outcome entries, found " +
                              std::to_string(doc.at("entries").size()));
            }
        } else {
            throw IoError("golden file '" + path + "' has unknown protocol '" + protocol + "'");
        }
    } catch (const nlohmann::json::exception& e) {
        throw IoError("malformed golden file '" + path + "': " + e.what());
    }
}

std::vector<std::string> stale_golden_files(const std::string& directory) {
    std::vector<std::string> stale;
    for (const auto& fresh : generate_golden_files()) {
        const std::string path = directory + "/" + fresh.name;
        std::string committed;
        try {
            committed = read_file(path);
        } catch (const IoError&) {
            stale.push_back(fresh.name);
            continue;
        }
        check_golden_file(path);
        if (committed != fresh.contents) {
            stale.push_back(fresh.name);
        }
    }
    return stale;
}

}  // namespace kerrsim
