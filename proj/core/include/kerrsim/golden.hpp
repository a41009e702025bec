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

/**
 * @file
 * Golden reference files generated from the qubit oracle: the teleportation
 * outcome-to-correction tables and the sixteen CNOT cases. The files are
 * deterministic byte-for-byte (sorted entries, fixed 12-digit precision), so
 * staleness is a plain byte comparison against a fresh regeneration.
 */

#pragma once

#include <string>
#include <vector>

namespace kerrsim {

/// Golden teleport correction table for one chain length, as JSON text.
std::string teleport_golden_json(std::size_t n_qubits);

/// All sixteen oracle CNOT cases (inputs x outcomes), as JSON text.
std::string cnot_golden_json();

struct GoldenFile {
    std::string name;
    std::string contents;
};

/// cnot_cases.json plus teleport_corrections_n{3,4,5,7}.json.
std::vector<GoldenFile> generate_golden_files();

/// Writes the full set into `directory` (must exist). Throws IoError with
/// the offending path.
void write_golden_files(const std::string& directory);

/// Parses a committed golden file and checks its basic shape; throws IoError
/// on unreadable or malformed content.
void check_golden_file(const std::string& path);

/// Names of golden files in `directory` that are missing or differ
/// byte-for-byte from a fresh regeneration. Malformed files throw IoError.
std::vector<std::string> stale_golden_files(const std::string& directory);

}  // namespace kerrsim
