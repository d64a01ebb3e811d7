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

#ifndef QTRANSPORT_PROBLEM_IO_H
#define QTRANSPORT_PROBLEM_IO_H

#include <string>
#include <string_view>

#include "json.hpp"
#include "qtransport/transport.h"

namespace qtransport {

/// Strict problem schema:
///   { "x_qubits": int, "max_flights": int, "boundary": int,
///     "regions": [ {"distance_pmf": [real...], "p_absorb": real}, {...} ],
///     "first_flight_always": bool (default true),
///     "reaction_timing": "pre_flight" | "post_flight" (default "pre_flight") }
/// Malformed JSON, wrong types and unknown keys throw ProblemParseError;
/// well-formed problems that break an invariant throw InvariantViolation.
TransportProblem parse_problem(std::string_view json_text);

/// Reads and parses a problem file. Unreadable files throw ProblemParseError.
TransportProblem load_problem(const std::string &path);

nlohmann::ordered_json problem_to_json(const TransportProblem &problem);

}  // namespace qtransport

#endif
