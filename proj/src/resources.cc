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

#include "qtransport/resources.h"

#include <stdexcept>

namespace qtransport {

ResourceEstimate logical_qubit_estimate(std::uint64_t flights, const ResourceAssumptions &a) {
    if (flights < 1) {
        throw std::invalid_argument("flights must be at least 1");
    }
    ResourceEstimate e;
    e.flights = flights;
    e.register_qubits = a.bits_per_variable * register_count(flights, a);
    e.adder_ancilla_qubits = a.adder_ancillas * adder_count(flights, a);
    e.reaction_qubits = flights;
    e.progress_ancilla = 1;
    e.total = e.register_qubits + e.adder_ancilla_qubits + e.reaction_qubits + e.progress_ancilla;
    return e;
}

std::uint64_t register_count(std::uint64_t flights, const ResourceAssumptions &a) {
    return a.variables * (flights + 1);
}

std::uint64_t adder_count(std::uint64_t flights, const ResourceAssumptions &a) { return a.variables * flights; }

CircuitBudget circuit_budget(const TransportProblem &problem) {
    problem.validate();
    CircuitBudget b;
    const std::size_t wd = problem.distance_width();
    b.registers.emplace_back("X", problem.x_qubits);
    b.registers.emplace_back("AncR", 1);
    for (std::size_t m = 1; m <= problem.max_flights; m++) {
        b.registers.emplace_back("D" + std::to_string(m), wd);
        if (problem.has_reaction(m)) {
            b.registers.emplace_back("R" + std::to_string(m), 1);
        }
    }
    b.registers.emplace_back("AncP", 1);
    b.registers.emplace_back("flag", 1);
    for (const auto &[name, width] : b.registers) {
        b.total_with_flag += width;
    }
    b.transport_qubits = b.total_with_flag - 1;
    return b;
}

}  // namespace qtransport
