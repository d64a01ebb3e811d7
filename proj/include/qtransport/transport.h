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

#ifndef QTRANSPORT_TRANSPORT_H
#define QTRANSPORT_TRANSPORT_H

#include <array>
#include <cstddef>
#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "qtransport/circuit.h"

namespace qtransport {

/// Flight-distance distribution and absorption probability of one region.
/// Reaction encoding on a qubit: |0> absorb, |1> scatter.
struct RegionSpec {
    std::vector<double> distance_pmf;  // index = distance
    double p_absorb = 0.0;

    double p_scatter() const { return 1.0 - p_absorb; }
    std::size_t max_distance() const { return distance_pmf.empty() ? 0 : distance_pmf.size() - 1; }
};

/// When the absorb/scatter split that gates a flight is evaluated.
///
/// PreFlight: before flight m, in the region of the position the flight
/// starts from (what the circuit does). PostFlight: after flight m, in the
/// region the particle landed in, deciding whether flight m+1 happens.
enum class ReactionTiming { PreFlight, PostFlight };

/// One-dimensional two-region problem. Region 1 is x < boundary, region 2 is
/// x >= boundary. The source sits at x = 0.
struct TransportProblem {
    std::size_t x_qubits = 0;
    std::size_t max_flights = 0;
    std::uint64_t boundary = 0;
    std::array<RegionSpec, 2> regions;
    bool first_flight_always = true;
    ReactionTiming reaction_timing = ReactionTiming::PreFlight;

    /// Throws InvariantViolation describing the first broken invariant.
    void validate() const;

    std::size_t max_distance() const { return regions[0].max_distance(); }
    /// ceil(log2(d_max + 1)); zero when the only distance is 0.
    std::size_t distance_width() const;
    std::size_t position_count() const { return std::size_t{1} << x_qubits; }
    std::size_t region_of(std::uint64_t x) const { return x >= boundary ? 1 : 0; }
    /// Whether flight m (1-based) carries its own reaction register.
    bool has_reaction(std::size_t flight) const { return flight > 1 || !first_flight_always; }
};

/// Two regions, four positions of headroom, three flights; region 1 has mean
/// free path 1.5 and absorption 0.25, region 2 mean free path 1.0 and
/// absorption 0.40, both with distances rounded to 0..3.
TransportProblem reference_two_region_problem();

/// Built transport circuit F with its qubit layout. The "flag" qubit is
/// reserved for amplitude estimation and untouched by F.
struct TransportCircuit {
    TransportProblem problem;
    Circuit circuit;
    std::vector<std::size_t> x;
    std::size_t anc_r = 0;
    std::size_t anc_p = 0;
    std::size_t flag = 0;
    std::vector<std::vector<std::size_t>> distance;   // D_1..D_n
    std::vector<std::optional<std::size_t>> reaction;  // R_1..R_n, R_1 empty when the first flight is forced
};

/// ceil(log2(values)) with a floor of 0; values >= 1.
std::size_t bits_for(std::uint64_t values);

/// Prepares sum_d sqrt(pmf[d]) |d> on `target` from |0...0> with a tree of
/// prefix-controlled RotY gates, most significant bit first.
Circuit build_distribution_loader(std::size_t qubit_count, std::span<const std::size_t> target,
                                  std::span<const double> pmf);

/// Standalone loader on qubits 0..width-1, with register "D".
Circuit build_distribution_loader(std::span<const double> pmf, std::size_t width);

/// Flips `anc` iff the value of `x` is >= boundary (a power of two), as the
/// XOR over every non-empty subset of the high bits of their AND.
Circuit build_region_flag(std::size_t qubit_count, std::span<const std::size_t> x, std::uint64_t boundary,
                          std::size_t anc);

/// RotY(2 acos sqrt(p_absorb)) on `r_qubit` for the region selected by
/// `anc_r` (negative control: region 1, positive control: region 2).
Circuit build_reaction_rotation(std::size_t qubit_count, const std::array<RegionSpec, 2> &regions, std::size_t anc_r,
                                std::size_t r_qubit);

/// Rotation angle whose |0> weight is `p0`.
double weight_angle(double p0);

/// Fourier-basis transform of `x` without the final bit reversal: qubit q ends
/// up holding phase 2 pi x / 2^(q+1).
Circuit build_fourier_transform(std::size_t qubit_count, std::span<const std::size_t> x);

/// |x>|d> -> |x + d mod 2^w>|d>, no ancillas. With `control` the addition
/// only happens when the control is satisfied.
Circuit build_controlled_adder(std::size_t qubit_count, std::span<const std::size_t> x,
                               std::span<const std::size_t> d, std::optional<Control> control);

/// Full transport circuit for `problem` (validated first).
TransportCircuit build_transport_circuit(const TransportProblem &problem);

}  // namespace qtransport

#endif
