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
 * Deterministic JSON emission. Reports and golden files must be byte-stable
 * across runs, so numbers are written through one fixed formatter (12
 * significant digits, "-0" normalized to "0") instead of a generic
 * serializer. Reading JSON back is delegated to nlohmann::json in the .cpp.
 */

#pragma once

#include <complex>
#include <string>
#include <vector>

namespace kerrsim {

/// 12-significant-digit decimal rendering with -0 normalized to 0.
std::string format_double(double value);

/// Shortest decimal rendering that parses back to the same double.
std::string format_double_roundtrip(double value);

/// Minimal streaming JSON writer with explicit structure control.
/// Keys are emitted in call order; the caller owns field ordering.
class JsonWriter {
  public:
    void begin_object();
    void end_object();
    void begin_array();
    void end_array();
    void key(const std::string& name);
    void value_string(const std::string& s);
    void value_number(double v);
    void value_int(long long v);
    void value_bool(bool b);
    void value_null();
    void value_raw(const std::string& fragment);

    const std::string& str() const { return out_; }

  private:
    void separator();

    std::string out_;
    std::vector<bool> first_in_scope_;
    bool pending_key_ = false;
};

/// [re, im] as a two-element JSON array with format_double rendering.
std::string complex_to_json(const std::complex<double>& z);

std::string json_escape(const std::string& s);

}  // namespace kerrsim
