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

#include "kerrsim/jsonfmt.hpp"

#include <charconv>
#include <cstdio>

namespace kerrsim {

std::string format_double(double value) {
    if (value == 0.0) {
        return "0";  // folds -0.0 as well
    }
    char buf[64];
    std::snprintf(buf, sizeof(buf), "%.12g", value);
    return buf;
}

std::string format_double_roundtrip(double value) {
    if (value == 0.0) {
        return "0";
    }
    char buf[64];
    auto res = std::to_chars(buf, buf + sizeof(buf), value);
    return std::string(buf, res.ptr);
}

std::string json_escape(const std::string& s) {
    std::string out;
    out.reserve(s.size() + 2);
    for (char c : s) {
        switch (c) {
            case '"': out += "\\\""; break;
            case '\\': out += "\\\\"; break;
            case '\n': out += "\\n"; break;
            case '\t': out += "\\t"; break;
            case '\r': out += "\\r"; break;
            default:
                if (static_cast<unsigned char>(c) < 0x20) {
                    char buf[8];
                    std::snprintf(buf, sizeof(buf), "\\u%04x", c);
                    out += buf;
                } else {
                    out += c;
                }
        }
    }
    return out;
}

void JsonWriter::separator() {
    if (pending_key_) {
        pending_key_ = false;
        return;
    }
    if (!first_in_scope_.empty()) {
        if (!first_in_scope_.back()) {
            out_ += ',';
        }
        first_in_scope_.back() = false;
    }
}

void JsonWriter::begin_object() {
    separator();
    out_ += '{';
    first_in_scope_.push_back(true);
}

void JsonWriter::end_object() {
    out_ += '}';
    first_in_scope_.pop_back();
}

void JsonWriter::begin_array() {
    separator();
    out_ += '[';
    first_in_scope_.push_back(true);
}

void JsonWriter::end_array() {
    out_ += ']';
    first_in_scope_.pop_back();
}

void JsonWriter::key(const std::string& name) {
    separator();
    out_ += '"';
    out_ += json_escape(name);
    out_ += "\":";
    pending_key_ = true;
}

void JsonWriter::value_string(const std::string& s) {
    separator();
    out_ += '"';
    out_ += json_escape(s);
    out_ += '"';
}

void JsonWriter::value_number(double v) {
    separator();
    out_ += format_double(v);
}

void JsonWriter::value_int(long long v) {
    separator();
    out_ += std::to_string(v);
}

void JsonWriter::value_bool(bool b) {
    separator();
    out_ += b ? "true" : "false";
}

void JsonWriter::value_null() {
    separator();
    out_ += "null";
}

void JsonWriter::value_raw(const std::string& fragment) {
    separator();
    out_ += fragment;
}

std::string complex_to_json(const std::complex<double>& z) {
    return "[" + format_double(z.real()) + "," + format_double(z.imag()) + "]";
}

}  // namespace kerrsim
