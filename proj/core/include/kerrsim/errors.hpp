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

#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace kerrsim {

/// Base class for every error raised by the library.
struct Error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

/// An operation would push a mode occupation above the state's photon cutoff.
struct CutoffExceeded : Error {
    using Error::Error;
};

/// A mode index does not exist, or a mode pair is degenerate.
struct InvalidMode : Error {
    using Error::Error;
};

/// Two states disagree on mode count or cutoff.
struct MismatchedShape : Error {
    using Error::Error;
};

/// A term holds zero or two photons inside a dual-rail pair.
struct InvalidDualRailSupport : Error {
    using Error::Error;
};

/// A qubit's mode pair was expected to be empty.
struct NotVacuum : Error {
    using Error::Error;
};

/// Amplitudes that should satisfy |a|^2 + |b|^2 = 1 do not.
struct NotNormalized : Error {
    using Error::Error;
};

/// A matrix that must be unitary is not.
struct NotUnitary : Error {
    using Error::Error;
};

/// A coupling graph contains a self-loop or an out-of-range vertex.
struct InvalidGraph : Error {
    using Error::Error;
};

/// File could not be read, written, or decoded.
struct IoError : Error {
    using Error::Error;
};

/// Syntax error in a circuit script. Positions are 1-based.
struct ParseError : Error {
    std::size_t line = 0;
    std::size_t column = 0;
    std::string token;

    ParseError(std::size_t line_, std::size_t column_, const std::string& message,
               std::string token_ = {})
        : Error("line " + std::to_string(line_) + ":" + std::to_string(column_) + ": " + message +
                (token_.empty() ? "" : " (near '" + token_ + "')")),
          line(line_),
          column(column_),
          token(std::move(token_)) {}
};

/// Semantic error in a circuit script (bad mode index, duplicate qubit, ...).
struct ValidationError : ParseError {
    using ParseError::ParseError;
};

}  // namespace kerrsim
