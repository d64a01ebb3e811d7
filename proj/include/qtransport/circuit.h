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

#ifndef QTRANSPORT_CIRCUIT_H
#define QTRANSPORT_CIRCUIT_H

#include <cstddef>
#include <cstdint>
#include <initializer_list>
#include <span>
#include <string>
#include <string_view>
#include <vector>

namespace qtransport {

enum class GateKind { PauliX, Hadamard, RotY, PhaseShift, Swap };

enum class Polarity { Positive, Negative };

struct Control {
    std::size_t qubit;
    Polarity polarity = Polarity::Positive;

    bool operator==(const Control &) const = default;
};

inline Control pos(std::size_t q) { return {q, Polarity::Positive}; }
inline Control neg(std::size_t q) { return {q, Polarity::Negative}; }

/// A single gate with an arbitrary number of polarity-tagged controls.
///
/// PauliX with k controls is the multi-controlled Toffoli; it is kept as one
/// gate rather than being decomposed.
struct Gate {
    GateKind kind = GateKind::PauliX;
    double angle = 0.0;  // RotY and PhaseShift only
    std::vector<std::size_t> targets;
    std::vector<Control> controls;

    static Gate x(std::size_t q, std::vector<Control> controls = {});
    static Gate h(std::size_t q, std::vector<Control> controls = {});
    static Gate ry(std::size_t q, double theta, std::vector<Control> controls = {});
    static Gate phase(std::size_t q, double theta, std::vector<Control> controls = {});
    static Gate swap(std::size_t a, std::size_t b, std::vector<Control> controls = {});

    /// Throws std::invalid_argument if arity, distinctness or finiteness fail.
    void validate() const;

    /// Largest qubit index touched by this gate.
    std::size_t max_qubit() const;

    bool touches(std::size_t q) const;

    bool operator==(const Gate &) const = default;
};

Gate inverse(const Gate &g);

struct Register {
    std::string name;
    std::vector<std::size_t> qubits;  // qubits[i] is the 2^i place

    bool operator==(const Register &) const = default;
};

/// Ordered gate list over a fixed number of qubits plus a map of named,
/// disjoint registers. Registers keep insertion order.
class Circuit {
   public:
    Circuit() = default;
    explicit Circuit(std::size_t qubit_count);

    std::size_t qubit_count() const { return qubit_count_; }
    const std::vector<Gate> &gates() const { return gates_; }
    const std::vector<Register> &registers() const { return registers_; }
    std::size_t size() const { return gates_.size(); }
    bool empty() const { return gates_.empty(); }

    /// Validates the gate and its qubit range before appending.
    Circuit &add(Gate g);

    /// Appends every gate of `other` (registers of `other` are merged).
    Circuit &append(const Circuit &other);

    Circuit &add_register(std::string name, std::vector<std::size_t> qubits);
    bool has_register(std::string_view name) const;
    const std::vector<std::size_t> &register_qubits(std::string_view name) const;

    bool operator==(const Circuit &) const = default;

   private:
    void merge_registers(const std::vector<Register> &regs);

    std::size_t qubit_count_ = 0;
    std::vector<Gate> gates_;
    std::vector<Register> registers_;
};

Circuit compose(const Circuit &a, const Circuit &b);

/// Reverses gate order and negates rotation/phase angles.
Circuit inverse(const Circuit &c);

/// Every gate in `c` gains `controls`. The control qubits must not be touched
/// by any gate of `c`.
Circuit add_controls(const Circuit &c, std::span<const Control> controls);
Circuit add_controls(const Circuit &c, std::initializer_list<Control> controls);

/// Basis-state index with `value` written into `qubits` (LSB-first) on top of
/// `base`.
std::uint64_t encode_register_value(std::span<const std::size_t> qubits, std::uint64_t value,
                                    std::uint64_t base = 0);
std::uint64_t decode_register_value(std::span<const std::size_t> qubits, std::uint64_t index);

/// Gate-dump text. Header `qubits=N`, one `register NAME=[..]` line per
/// register, then one gate per line:
///   KIND(angle?) targets=[i,..] controls=[+i|-i,..]
std::string dump_circuit(const Circuit &c);

/// Parses the output of dump_circuit. Throws std::invalid_argument on
/// malformed input.
Circuit parse_circuit_dump(std::string_view text);

std::string_view gate_kind_name(GateKind kind);

}  // namespace qtransport

#endif
