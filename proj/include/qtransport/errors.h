// Copyright 2026 The qtransport Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#ifndef QTRANSPORT_ERRORS_H
#define QTRANSPORT_ERRORS_H

#include <stdexcept>

namespace qtransport {

// Each class maps to one CLI exit code; everything else is a plain
// std::invalid_argument.

/// Malformed or schema-violating problem input.
class ProblemParseError : public std::runtime_error {
    using std::runtime_error::runtime_error;
};

/// A transport problem that parses but violates a structural invariant.
class InvariantViolation : public std::invalid_argument {
    using std::invalid_argument::invalid_argument;
};

/// The requested statevector exceeds the configured qubit ceiling.
class CapacityExceeded : public std::runtime_error {
    using std::runtime_error::runtime_error;
};

/// Unparseable or invalid amplitude-estimation predicate.
class PredicateError : public std::invalid_argument {
    using std::invalid_argument::invalid_argument;
};

}  // namespace qtransport

#endif
