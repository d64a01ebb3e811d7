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

#ifndef QTRANSPORT_STATEVECTOR_H
#define QTRANSPORT_STATEVECTOR_H

#include <complex>
#include <cstddef>
#include <cstdint>
#include <span>
#include <string_view>
#include <vector>

#include "qtransport/circuit.h"
#include "qtransport/distribution.h"

namespace qtransport {

using Amplitude = std::complex<double>;

inline constexpr std::size_t kDefaultMaxQubits = 26;

/// Dense state over 2^n basis states. Index bit i is qubit i.
///
/// Gates are applied in place: the kernel enumerates only the basis indices
/// whose control bits already match, so controls cost nothing extra to
/// materialize.
class Statevector {
   public:
    /// |0...0> on `qubits` qubits. Throws CapacityExceeded above `max_qubits`.
    explicit Statevector(std::size_t qubits, std::size_t max_qubits = kDefaultMaxQubits);

    /// Basis state |index>.
    static Statevector basis(std::size_t qubits, std::uint64_t index, std::size_t max_qubits = kDefaultMaxQubits);

    std::size_t qubit_count() const { return qubits_; }
    std::size_t size() const { return amps_.size(); }
    std::span<const Amplitude> amplitudes() const { return amps_; }
    Amplitude operator[](std::uint64_t i) const { return amps_[i]; }

    void apply(const Gate &g);
    void apply(const Circuit &c);

    double norm() const;

    /// Probability that `qubit` reads |1>.
    double probability_of_one(std::size_t qubit) const;

    /// Marginal over `qubits` (LSB-first), length 2^|qubits|.
    std::vector<double> marginal(std::span<const std::size_t> qubits) const;

    /// Largest per-amplitude absolute difference.
    double max_abs_diff(const Statevector &other) const;

   private:
    std::size_t qubits_;
    std::vector<Amplitude> amps_;
};

Statevector zero_state(std::size_t qubits, std::size_t max_qubits = kDefaultMaxQubits);

/// Functional form: applies `c` to a copy of `state`.
Statevector apply(Statevector state, const Circuit &c);

PathDistribution marginal(const Statevector &state, const Circuit &c, std::string_view register_name);

/// Throws std::invalid_argument if `qubit` is out of range.
double flag_probability(const Statevector &state, std::size_t qubit);

/// Draws `shots` outcomes i.i.d. from `probabilities`. Shot i uses the stream
/// Rng(seed, i), so counts do not depend on `threads`.
std::vector<std::uint64_t> sample_counts(std::span<const double> probabilities, std::uint64_t shots,
                                         std::uint64_t seed, unsigned threads = 1);

/// Measurement counts for `qubits` (a register or a single qubit).
std::vector<std::uint64_t> sample(const Statevector &state, std::span<const std::size_t> qubits, std::uint64_t shots,
                                  std::uint64_t seed, unsigned threads = 1);

}  // namespace qtransport

#endif
