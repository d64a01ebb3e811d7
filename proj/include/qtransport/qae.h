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

#ifndef QTRANSPORT_QAE_H
#define QTRANSPORT_QAE_H

#include <cstddef>
#include <cstdint>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "qtransport/circuit.h"
#include "qtransport/statevector.h"
#include "qtransport/transport.h"

namespace qtransport {

/// Which final positions count as "good" for amplitude estimation.
struct Predicate {
    enum class Kind { AtLeast, Equal, Region2 };

    Kind kind = Kind::Equal;
    std::uint64_t value = 0;  // threshold for AtLeast, position for Equal

    static Predicate at_least(std::uint64_t threshold) { return {Kind::AtLeast, threshold}; }
    static Predicate equal(std::uint64_t position) { return {Kind::Equal, position}; }
    static Predicate region2() { return {Kind::Region2, 0}; }

    /// Grammar: `geq:K` (K a power of two), `eq:V`, `region2`. Throws
    /// PredicateError.
    static Predicate parse(std::string_view text);
    std::string to_string() const;

    /// Throws PredicateError if the predicate cannot be evaluated on an
    /// `x_qubits`-wide position register.
    void validate(std::size_t x_qubits) const;

    bool matches(std::uint64_t x, std::uint64_t boundary) const;
};

/// Flips the transport circuit's flag qubit iff X satisfies `pred`.
Circuit build_flag_oracle(const TransportCircuit &tc, const Predicate &pred);

/// A = F followed by the flag oracle.
Circuit build_a_operator(const TransportCircuit &tc, const Predicate &pred);

/// Q = A S0 A^-1 S_chi, where S_chi flips the sign of flag = |1> and S0 flips
/// the sign of |0...0>.
Circuit build_grover_operator(const Circuit &a, std::size_t flag);

/// Probability that `flag` reads |1> after A|0...0>.
double exact_amplitude(const Circuit &a, std::size_t flag, std::size_t max_qubits = kDefaultMaxQubits);

/// Flag probability after Q^m A|0...0> for each m in `powers` (any order).
std::vector<double> grover_flag_probabilities(const Circuit &a, std::size_t flag, std::span<const std::uint64_t> powers,
                                              std::size_t max_qubits = kDefaultMaxQubits);

/// Flag measurements taken after Q^power A|0...0>. Counts are real so that
/// exact probabilities can be fed in as frequencies.
struct MeasurementRecord {
    std::uint64_t power = 0;
    double shots = 0;
    double hits = 0;
};

/// sum_k h_k log sin^2((2m_k+1) theta) + (s_k - h_k) log cos^2((2m_k+1) theta).
double log_likelihood(std::span<const MeasurementRecord> records, double theta);

inline constexpr std::size_t kDefaultLikelihoodGrid = 100'000;

/// Argmax of the likelihood over theta in [0, pi/2]: dense grid, then a
/// golden-section refinement inside the best grid cell's neighbours.
double maximize_likelihood(std::span<const MeasurementRecord> records,
                           std::size_t grid_points = kDefaultLikelihoodGrid);

struct QaeEstimate {
    double p_hat = 0;
    double theta_hat = 0;
    std::uint64_t total_oracle_calls = 0;
    std::vector<std::uint64_t> schedule;
    std::uint64_t shots_per_power = 0;
    std::vector<std::uint64_t> hits;
};

/// {0, 1, 2, 4, ..., 2^k}.
std::vector<std::uint64_t> exponential_schedule(std::size_t k);

/// `exp:K` or a comma-separated list of powers.
std::vector<std::uint64_t> parse_schedule(std::string_view text);

/// Each shot at power m costs 2m + 1 applications of A or A^-1.
std::uint64_t oracle_calls(std::span<const std::uint64_t> schedule, std::uint64_t shots_per_power);

/// Maximum-likelihood amplitude estimation from sampled flag outcomes.
/// `probabilities[k]` is the exact flag probability at `schedule[k]`; shots
/// for power k are drawn with seed derive_seed(seed, k).
QaeEstimate mlqae_from_probabilities(std::span<const double> probabilities, std::span<const std::uint64_t> schedule,
                                     std::uint64_t shots_per_power, std::uint64_t seed,
                                     std::size_t grid_points = kDefaultLikelihoodGrid);

/// Simulates A and Q, then runs mlqae_from_probabilities.
QaeEstimate mlqae_estimate(const Circuit &a, std::size_t flag, std::span<const std::uint64_t> schedule,
                           std::uint64_t shots_per_power, std::uint64_t seed,
                           std::size_t grid_points = kDefaultLikelihoodGrid,
                           std::size_t max_qubits = kDefaultMaxQubits);

}  // namespace qtransport

#endif
