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

#include "kerrsim/fock.hpp"

#include <cmath>
#include <nlohmann/json.hpp>

#include "kerrsim/jsonfmt.hpp"

namespace kerrsim {

unsigned FockBasis::total_photons() const {
    unsigned total = 0;
    for (auto n : occ) {
        total += n;
    }
    return total;
}

PhotonicState::PhotonicState(std::size_t mode_count, int cutoff)
    : mode_count_(mode_count), cutoff_(cutoff) {
    if (mode_count == 0) {
        throw InvalidMode("mode_count must be at least 1");
    }
    if (cutoff < 1) {
        throw CutoffExceeded("cutoff must be at least 1");
    }
}

Complex PhotonicState::amplitude(const FockBasis& basis) const {
    auto it = terms_.find(basis);
    return it == terms_.end() ? Complex{0.0, 0.0} : it->second;
}

void PhotonicState::add_term(const FockBasis& basis, Complex amplitude) {
    if (basis.mode_count() != mode_count_) {
        throw MismatchedShape("basis vector has " + std::to_string(basis.mode_count()) +
                              " modes, state has " + std::to_string(mode_count_));
    }
    for (auto n : basis.occ) {
        if (static_cast<int>(n) > cutoff_) {
            throw CutoffExceeded("occupation " + std::to_string(n) + " exceeds cutoff " +
                                 std::to_string(cutoff_));
        }
    }
    terms_[basis] += amplitude;
}

double PhotonicState::norm() const {
    double sum = 0.0;
    for (const auto& [basis, amp] : terms_) {
        sum += std::norm(amp);
    }
    return std::sqrt(sum);
}

void PhotonicState::normalize() {
    const double n = norm();
    if (n < kPruneThreshold) {
        throw NotNormalized("cannot normalize a zero state");
    }
    for (auto& [basis, amp] : terms_) {
        amp /= n;
    }
}

void PhotonicState::prune() {
    for (auto it = terms_.begin(); it != terms_.end();) {
        if (std::abs(it->second) < kPruneThreshold) {
            it = terms_.erase(it);
        } else {
            ++it;
        }
    }
}

PhotonicState make_vacuum(std::size_t mode_count, int cutoff) {
    PhotonicState state(mode_count, cutoff);
    state.add_term(FockBasis(std::vector<std::uint8_t>(mode_count, 0)), Complex{1.0, 0.0});
    return state;
}

PhotonicState create_photon(const PhotonicState& state, std::size_t mode) {
    if (mode >= state.mode_count()) {
        throw InvalidMode("mode " + std::to_string(mode) + " out of range");
    }
    PhotonicState result(state.mode_count(), state.cutoff());
    for (const auto& [basis, amp] : state.terms()) {
        const int n = basis.occ[mode];
        if (n + 1 > state.cutoff()) {
            throw CutoffExceeded("create_photon on mode " + std::to_string(mode) +
                                 " would exceed cutoff " + std::to_string(state.cutoff()));
        }
        FockBasis raised = basis;
        raised.occ[mode] = static_cast<std::uint8_t>(n + 1);
        result.add_term(raised, amp * std::sqrt(static_cast<double>(n + 1)));
    }
    result.normalize();
    result.prune();
    return result;
}

Complex inner_product(const PhotonicState& s1, const PhotonicState& s2) {
    if (s1.mode_count() != s2.mode_count() || s1.cutoff() != s2.cutoff()) {
        throw MismatchedShape("inner_product requires matching mode count and cutoff");
    }
    Complex sum{0.0, 0.0};
    // Both maps share the ordering; a merge walk touches each term once.
    auto it1 = s1.terms().begin();
    auto it2 = s2.terms().begin();
    while (it1 != s1.terms().end() && it2 != s2.terms().end()) {
        if (it1->first < it2->first) {
            ++it1;
        } else if (it2->first < it1->first) {
            ++it2;
        } else {
            sum += std::conj(it1->second) * it2->second;
            ++it1;
            ++it2;
        }
    }
    return sum;
}

bool equal_up_to_global_phase(const PhotonicState& s1, const PhotonicState& s2, double tol) {
    return std::abs(inner_product(s1, s2)) >= 1.0 - tol;
}

std::string state_to_json(const PhotonicState& state) {
    JsonWriter w;
    w.begin_object();
    w.key("modes");
    w.value_int(static_cast<long long>(state.mode_count()));
    w.key("cutoff");
    w.value_int(state.cutoff());
    w.key("terms");
    w.begin_array();
    for (const auto& [basis, amp] : state.terms()) {
        w.begin_object();
        w.key("occ");
        w.begin_array();
        for (auto n : basis.occ) {
            w.value_int(n);
        }
        w.end_array();
        w.key("re");
        w.value_number(amp.real());
        w.key("im");
        w.value_number(amp.imag());
        w.end_object();
    }
    w.end_array();
    w.end_object();
    return w.str();
}

PhotonicState state_from_json(const std::string& text) {
    nlohmann::json doc;
    try {
        doc = nlohmann::json::parse(text);
    } catch (const nlohmann::json::exception& e) {
        throw IoError(std::string("invalid state JSON: ") + e.what());
    }
    try {
        PhotonicState state(doc.at("modes").get<std::size_t>(), doc.at("cutoff").get<int>());
        for (const auto& term : doc.at("terms")) {
            std::vector<std::uint8_t> occ;
            for (const auto& n : term.at("occ")) {
                occ.push_back(n.get<std::uint8_t>());
            }
            state.add_term(FockBasis(std::move(occ)),
                           Complex{term.at("re").get<double>(), term.at("im").get<double>()});
        }
        return state;
    } catch (const nlohmann::json::exception& e) {
        throw IoError(std::string("invalid state JSON: ") + e.what());
    } catch (const IoError&) {
        throw;
    } catch (const Error& e) {
        throw IoError(std::string("invalid state JSON: ") + e.what());
    }
}

}  // namespace kerrsim
