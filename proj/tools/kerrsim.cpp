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

// Command-line front end: run the shipped protocols, execute .qc circuit
// files, verify the published state tables, and (re)generate the golden
// files. Exit codes: 0 success / all PASS, 1 any verification FAIL or
// runtime failure, 2 usage or parse errors.

#include <CLI11.hpp>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>

#include "kerrsim/circuit_script.hpp"
#include "kerrsim/golden.hpp"
#include "kerrsim/jsonfmt.hpp"
#include "kerrsim/protocols.hpp"

namespace {

using namespace kerrsim;

constexpr std::uint64_t kVerifySuiteSeed = 20260810;

struct CommonOptions {
    std::string format = "text";
    double tolerance = kGlobalPhaseTolerance;
    bool sample = false;
    bool enumerate = false;
    std::uint64_t seed = 0;
    bool seed_given = false;
};

double env_tolerance() {
    if (const char* env = std::getenv("KERR_SIM_TOL")) {
        char* end = nullptr;
        const double v = std::strtod(env, &end);
        if (end != env && *end == '\0' && v > 0.0) {
            return v;
        }
        std::cerr << "warning: ignoring invalid KERR_SIM_TOL='" << env << "'\n";
    }
    return kGlobalPhaseTolerance;
}

void add_common(CLI::App* cmd, CommonOptions& opt, bool with_policy) {
    cmd->add_option("--format", opt.format, "Output format")
        ->check(CLI::IsMember({"json", "text"}))
        ->capture_default_str();
    cmd->add_option("--tol", opt.tolerance, "Pass tolerance on |overlap| (or KERR_SIM_TOL)")
        ->check(CLI::PositiveNumber);
    if (with_policy) {
        cmd->add_flag("--enumerate", opt.enumerate, "Visit every measurement branch (default)");
        cmd->add_flag("--sample", opt.sample, "Sample one branch with the seeded generator");
        cmd->add_option("--seed", opt.seed, "Seed for --sample")
            ->check(CLI::NonNegativeNumber);
    }
}

BranchPolicy make_policy(const CommonOptions& opt) {
    if (opt.sample && opt.enumerate) {
        throw CLI::ValidationError("branch policy", "--sample and --enumerate are exclusive");
    }
    if (opt.sample) {
        if (!opt.seed_given) {
            throw CLI::ValidationError("branch policy", "--sample requires --seed");
        }
        return BranchPolicy::sample(opt.seed);
    }
    return BranchPolicy::enumerate_all();
}

std::string outcome_digits(const std::vector<int>& outcomes) {
    std::string s;
    for (int o : outcomes) {
        s += static_cast<char>('0' + o);
    }
    return s.empty() ? "-" : s;
}

int report_rows(const OpticalProtocol& proto, const std::vector<ProtocolResult>& rows,
                const CommonOptions& opt) {
    bool all_pass = true;
    for (const auto& row : rows) {
        if (row.pass.has_value() && !*row.pass) {
            all_pass = false;
        }
    }
    if (opt.format == "json") {
        std::cout << report_to_json(proto, rows) << "\n";
    } else {
        for (const auto& row : rows) {
            std::cout << "s=" << outcome_digits(row.outcomes)
                      << "  p=" << format_double(row.probability);
            if (row.overlap.has_value()) {
                std::cout << "  overlap=" << format_double(*row.overlap) << "  "
                          << (*row.pass ? "PASS" : "FAIL");
            }
            std::cout << "\n";
        }
        std::size_t passing = 0, scored = 0;
        for (const auto& row : rows) {
            if (row.pass.has_value()) {
                ++scored;
                if (*row.pass) ++passing;
            }
        }
        if (scored > 0) {
            std::cout << passing << "/" << scored << " branches PASS\n";
        } else {
            std::cout << rows.size() << " branch" << (rows.size() == 1 ? "" : "es") << "\n";
        }
    }
    return all_pass ? 0 : 1;
}

int cmd_teleport(std::size_t n, const std::string& alpha_text, const std::string& beta_text,
                 const CommonOptions& opt) {
    const Complex alpha = parse_complex_literal(alpha_text);
    const Complex beta = parse_complex_literal(beta_text);
    const OpticalProtocol proto = teleport_protocol(alpha, beta, n);
    return report_rows(proto, run_protocol(proto, make_policy(opt), opt.tolerance), opt);
}

int cmd_cnot(int i1, int i4, const CommonOptions& opt) {
    const OpticalProtocol proto = cnot_protocol(i1, i4);
    return report_rows(proto, run_protocol(proto, make_policy(opt), opt.tolerance), opt);
}

int cmd_run(const std::string& path, const CommonOptions& opt) {
    std::ifstream in(path, std::ios::binary);
    if (!in) {
        throw IoError("cannot read circuit file '" + path + "'");
    }
    std::ostringstream ss;
    ss << in.rdbuf();
    const CircuitProgram program = parse_circuit(ss.str());
    const OpticalProtocol proto = compile_circuit(program);
    return report_rows(proto, run_protocol(proto, make_policy(opt), opt.tolerance), opt);
}

int cmd_verify(const std::string& golden_dir, const CommonOptions& opt) {
    const auto table_rows = verify_tables(0.0, opt.tolerance);
    bool all_pass = true;
    std::size_t table_passing = 0;
    for (const auto& row : table_rows) {
        if (row.pass) {
            ++table_passing;
        } else {
            all_pass = false;
        }
    }

    std::vector<TeleportSuiteResult> suites;
    for (std::size_t n : {3, 4, 5, 7}) {
        suites.push_back(run_teleport_fidelity_suite(n, 100, kVerifySuiteSeed, opt.tolerance));
        all_pass = all_pass && suites.back().pass;
    }

    std::vector<std::string> stale;
    std::string golden_error;
    try {
        stale = stale_golden_files(golden_dir);
    } catch (const IoError& e) {
        golden_error = e.what();
        all_pass = false;
    }
    if (!stale.empty()) {
        all_pass = false;
    }

    if (opt.format == "json") {
        JsonWriter w;
        w.begin_object();
        w.key("tables");
        w.value_raw(table_report_to_json(table_rows));
        w.key("teleport");
        w.begin_array();
        for (const auto& s : suites) {
            w.begin_object();
            w.key("n");
            w.value_int(static_cast<long long>(s.n_qubits));
            w.key("states");
            w.value_int(static_cast<long long>(s.states));
            w.key("branches");
            w.value_int(static_cast<long long>(s.branches));
            w.key("min_fidelity");
            w.value_number(s.min_fidelity);
            w.key("pauli_only");
            w.value_bool(s.corrections_pauli_only);
            w.key("pass");
            w.value_bool(s.pass);
            w.end_object();
        }
        w.end_array();
        w.key("golden_stale");
        w.begin_array();
        for (const auto& name : stale) {
            w.value_string(name);
        }
        w.end_array();
        w.key("golden_error");
        if (golden_error.empty()) {
            w.value_null();
        } else {
            w.value_string(golden_error);
        }
        w.key("pass");
        w.value_bool(all_pass);
        w.end_object();
        std::cout << w.str() << "\n";
    } else {
        for (const auto& row : table_rows) {
            std::cout << (row.pass ? "PASS" : "FAIL") << "  table i1=" << row.i1
                      << " i4=" << row.i4 << " s=" << row.s1 << row.s2
                      << "  overlap=" << format_double(row.overlap) << "\n";
        }
        std::cout << table_passing << "/16 published CNOT rows PASS\n";
        for (const auto& s : suites) {
            std::cout << (s.pass ? "PASS" : "FAIL") << "  teleport n=" << s.n_qubits << " ("
                      << s.states << " random states, " << s.branches
                      << " branches, min fidelity " << format_double(s.min_fidelity)
                      << (s.corrections_pauli_only ? ", Pauli corrections"
                                                   : ", Pauli + quarter-turn corrections")
                      << ")\n";
        }
        if (!golden_error.empty()) {
            std::cout << "FAIL  golden: " << golden_error << "\n";
        } else if (stale.empty()) {
            std::cout << "PASS  golden files fresh in " << golden_dir << "\n";
        } else {
            for (const auto& name : stale) {
                std::cout << "FAIL  golden file stale or missing: " << name << "\n";
            }
        }
        std::cout << (all_pass ? "VERIFY PASS" : "VERIFY FAIL") << "\n";
    }
    return all_pass ? 0 : 1;
}

int cmd_regen_golden(const std::string& out_dir) {
    std::error_code ec;
    std::filesystem::create_directories(out_dir, ec);
    if (ec) {
        throw IoError("cannot create '" + out_dir + "': " + ec.message());
    }
    write_golden_files(out_dir);
    for (const auto& file : generate_golden_files()) {
        std::cout << "wrote " << out_dir << "/" << file.name << "\n";
    }
    return 0;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Photonic measurement-based computing simulator (dual-rail qubits entangled "
                 "by mutual-Kerr gates)"};
    app.require_subcommand(1);

    CommonOptions opt;
    opt.tolerance = env_tolerance();

    std::size_t n_qubits = 3;
    std::string alpha_text = "0.7071067811865476";
    std::string beta_text = "0.7071067811865476";
    int i1 = 0, i4 = 0;
    std::string circuit_path;
    std::string golden_dir = "data/golden";

    auto* teleport = app.add_subcommand("teleport", "Teleport (alpha, beta) along an n-qubit chain");
    teleport->add_option("--n", n_qubits, "Chain length")->check(CLI::Range(2, 12))
        ->capture_default_str();
    teleport->add_option("--alpha", alpha_text, "Input amplitude for |0>_L")
        ->capture_default_str();
    teleport->add_option("--beta", beta_text, "Input amplitude for |1>_L")
        ->capture_default_str();
    add_common(teleport, opt, true);

    auto* cnot = app.add_subcommand("cnot", "Run the four-qubit CNOT gate");
    cnot->add_option("--i1", i1, "Target input t_in")->check(CLI::Range(0, 1))
        ->capture_default_str();
    cnot->add_option("--i4", i4, "Control input")->check(CLI::Range(0, 1))
        ->capture_default_str();
    add_common(cnot, opt, true);

    auto* run = app.add_subcommand("run", "Execute a .qc circuit file");
    run->add_option("file", circuit_path, "Circuit script")->required();
    add_common(run, opt, true);

    auto* verify = app.add_subcommand(
        "verify", "Check the 16 published CNOT rows, the teleportation fidelity sweep, and "
                  "golden-file freshness");
    verify->add_option("--golden-dir", golden_dir, "Committed golden files")
        ->capture_default_str();
    add_common(verify, opt, false);

    auto* regen = app.add_subcommand("regen-golden", "Regenerate golden files from the oracle");
    regen->add_option("--out", golden_dir, "Output directory")->capture_default_str();

    try {
        app.parse(argc, argv);
        for (auto* cmd : {teleport, cnot, run}) {
            if (cmd->parsed()) {
                opt.seed_given = cmd->count("--seed") > 0;
            }
        }
        if (teleport->parsed()) {
            return cmd_teleport(n_qubits, alpha_text, beta_text, opt);
        }
        if (cnot->parsed()) {
            return cmd_cnot(i1, i4, opt);
        }
        if (run->parsed()) {
            return cmd_run(circuit_path, opt);
        }
        if (verify->parsed()) {
            return cmd_verify(golden_dir, opt);
        }
        if (regen->parsed()) {
            return cmd_regen_golden(golden_dir);
        }
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return e.get_exit_code() == 0 ? 0 : 2;
    } catch (const CLI::Error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    } catch (const kerrsim::ParseError& e) {
        std::cerr << "parse error: " << e.what() << "\n";
        return 2;
    } catch (const kerrsim::Error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    }
    return 0;
}
