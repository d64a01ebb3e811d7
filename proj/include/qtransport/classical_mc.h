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

#ifndef QTRANSPORT_CLASSICAL_MC_H
#define QTRANSPORT_CLASSICAL_MC_H

#include <cstddef>
#include <cstdint>
#include <span>
#include <vector>

#include "qtransport/distribution.h"
#include "qtransport/rng.h"
#include "qtransport/transport.h"

namespace qtransport {

/// d = -lambda ln(eta). Rejects eta outside (0, 1] and lambda <= 0.
double sample_flight_distance_continuous(double mean_free_path, double eta);

/// Exponential flight distances rounded to integers: bin k collects
/// [k - 0.5, k + 0.5), bin 0 collects [0, 0.5) and bin d_max the whole tail.
std::vector<double> discretize_exponential(double mean_free_path, std::size_t d_max);

/// Inverse-CDF draw from a distance distribution.
std::size_t sample_distance(std::span<const double> pmf, Rng &rng);

/// One particle history following the classical flowchart; returns the final
/// position. Absorption is decided by `rng.uniform() < p_absorb`.
std::uint64_t run_history(const TransportProblem &problem, Rng &rng);

struct McTally {
    std::vector<std::uint64_t> counts;  // per final position
    std::uint64_t total_shots = 0;
    std::uint64_t seed = 0;

    PathDistribution frequencies() const;
};

/// History i draws from Rng(seed, i); the tally is independent of `threads`.
McTally run_tally(const TransportProblem &problem, std::uint64_t shots, std::uint64_t seed, unsigned threads = 1);

/// Exact final-position distribution by dynamic programming over
/// (position, alive) states, flight by flight.
PathDistribution exact_distribution(const TransportProblem &problem);

/// Mean number of flights in an unbounded single region: 1 / p_absorb.
double expected_flights(double p_absorb);

inline constexpr std::uint64_t kUncappedFlightLimit = 1'000'000;

/// Flights taken by one particle in an unbounded single region: every flight
/// ends in a reaction, absorption stops the particle. Throws
/// std::runtime_error past kUncappedFlightLimit flights.
std::uint64_t flights_until_absorbed(double p_absorb, Rng &rng);

/// Sample mean of flights_until_absorbed over `histories` streams.
double mean_flights_uncapped(double p_absorb, std::uint64_t histories, std::uint64_t seed);

}  // namespace qtransport

#endif
