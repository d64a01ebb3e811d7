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

#ifndef QTRANSPORT_RESOURCES_H
#define QTRANSPORT_RESOURCES_H

#include <cstddef>
#include <cstdint>
#include <string>
#include <utility>
#include <vector>

#include "qtransport/transport.h"

namespace qtransport {

/// Assumptions behind the logical-qubit estimate for a practical transport
/// circuit. Defaults: 7 tracked variables (3D position, 3D direction,
/// energy), 32-bit floating-point registers, 76 ancillas per 140-qubit adder.
struct ResourceAssumptions {
    std::uint64_t variables = 7;
    std::uint64_t bits_per_variable = 32;
    std::uint64_t adder_ancillas = 76;
};

struct ResourceEstimate {
    std::uint64_t flights = 0;
    std::uint64_t register_qubits = 0;       // bits * variables * (n + 1)
    std::uint64_t adder_ancilla_qubits = 0;  // ancillas * variables * n
    std::uint64_t reaction_qubits = 0;       // n
    std::uint64_t progress_ancilla = 0;      // 1
    std::uint64_t total = 0;
};

/// Throws std::invalid_argument for flights < 1.
ResourceEstimate logical_qubit_estimate(std::uint64_t flights, const ResourceAssumptions &assumptions = {});

/// variables * (n + 1): one register per variable per flight plus the final values.
std::uint64_t register_count(std::uint64_t flights, const ResourceAssumptions &assumptions = {});
/// variables * n.
std::uint64_t adder_count(std::uint64_t flights, const ResourceAssumptions &assumptions = {});

/// Qubit widths of the circuit build_transport_circuit produces.
struct CircuitBudget {
    std::vector<std::pair<std::string, std::size_t>> registers;  // layout order, flag last
    std::size_t transport_qubits = 0;                            // everything except the flag
    std::size_t total_with_flag = 0;
};

/// Throws InvariantViolation for an invalid problem.
CircuitBudget circuit_budget(const TransportProblem &problem);

}  // namespace qtransport

#endif
