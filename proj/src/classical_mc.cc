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

#include "qtransport/classical_mc.h"

#include <algorithm>
#include <cmath>
#include <stdexcept>
#include <string>
#include <thread>

namespace qtransport {

double sample_flight_distance_continuous(double mean_free_path, double eta) {
    if (!(mean_free_path > 0)) {
        throw std::invalid_argument("mean free path must be positive");
    }
    if (!(eta > 0) || eta > 1) {
        throw std::invalid_argument("eta must lie in (0, 1]");
    }
    return -mean_free_path * std::log(eta);
}

std::vector<double> discretize_exponential(double mean_free_path, std::size_t d_max) {
    if (!(mean_free_path > 0)) {
        throw std::invalid_argument("mean free path must be positive");
    }
    if (d_max < 1) {
        throw std::invalid_argument("d_max must be at least 1");
    }
    auto survival = [&](double d) { return std::exp(-d / mean_free_path); };
    std::vector<double> pmf(d_max + 1);
    pmf[0] = -std::expm1(-0.5 / mean_free_path);
    for (std::size_t k = 1; k < d_max; k++) {
        pmf[k] = survival(static_cast<double>(k) - 0.5) - survival(static_cast<double>(k) + 0.5);
    }
    pmf[d_max] = survival(static_cast<double>(d_max) - 0.5);
    return pmf;
}

std::size_t sample_distance(std::span<const double> pmf, Rng &rng) {
    double u = rng.uniform();
    double acc = 0;
    std::size_t last = 0;
    for (std::size_t d = 0; d < pmf.size(); d++) {
        if (pmf[d] <= 0) {
            continue;
        }
        last = d;
        acc += pmf[d];
        if (u < acc) {
            return d;
        }
    }
    return last;
}

std::uint64_t run_history(const TransportProblem &problem, Rng &rng) {
    auto absorbed_at = [&](std::uint64_t x) { return rng.uniform() < problem.regions[problem.region_of(x)].p_absorb; };
    auto fly = [&](std::uint64_t x) { return x + sample_distance(problem.regions[problem.region_of(x)].distance_pmf, rng); };

    std::uint64_t x = 0;
    if (problem.reaction_timing == ReactionTiming::PreFlight) {
        for (std::size_t m = 1; m <= problem.max_flights; m++) {
            if (problem.has_reaction(m) && absorbed_at(x)) {
                break;
            }
            x = fly(x);
        }
        return x;
    }

    if (!problem.first_flight_always && absorbed_at(x)) {
        return x;
    }
    for (std::size_t m = 1; m <= problem.max_flights; m++) {
        x = fly(x);
        if (m < problem.max_flights && absorbed_at(x)) {
            break;
        }
    }
    return x;
}

PathDistribution McTally::frequencies() const {
    PathDistribution d;
    d.probabilities.resize(counts.size());
    for (std::size_t x = 0; x < counts.size(); x++) {
        d.probabilities[x] = static_cast<double>(counts[x]) / static_cast<double>(total_shots);
    }
    return d;
}

McTally run_tally(const TransportProblem &problem, std::uint64_t shots, std::uint64_t seed, unsigned threads) {
    problem.validate();
    if (shots == 0) {
        throw std::invalid_argument("shots must be at least 1");
    }
    const std::size_t positions = problem.position_count();
    auto run = [&](std::uint64_t begin, std::uint64_t end, std::vector<std::uint64_t> &counts) {
        for (std::uint64_t i = begin; i < end; i++) {
            Rng rng(seed, i);
            counts[run_history(problem, rng)]++;
        }
    };

    threads = std::max(1u, threads);
    std::vector<std::vector<std::uint64_t>> partial(threads, std::vector<std::uint64_t>(positions, 0));
    if (threads == 1) {
        run(0, shots, partial[0]);
    } else {
        std::vector<std::jthread> pool;
        for (unsigned t = 0; t < threads; t++) {
            pool.emplace_back([&, t] { run(shots * t / threads, shots * (t + 1) / threads, partial[t]); });
        }
    }

    McTally tally{std::vector<std::uint64_t>(positions, 0), shots, seed};
    for (const auto &p : partial) {
        for (std::size_t x = 0; x < positions; x++) {
            tally.counts[x] += p[x];
        }
    }
    return tally;
}

PathDistribution exact_distribution(const TransportProblem &problem) {
    problem.validate();
    const std::size_t positions = problem.position_count();
    std::vector<double> alive(positions, 0.0);
    std::vector<double> stopped(positions, 0.0);
    alive[0] = 1.0;

    auto react = [&]() {
        for (std::size_t x = 0; x < positions; x++) {
            double pa = problem.regions[problem.region_of(x)].p_absorb;
            stopped[x] += alive[x] * pa;
            alive[x] *= 1.0 - pa;
        }
    };
    auto move = [&]() {
        std::vector<double> next(positions, 0.0);
        for (std::size_t x = 0; x < positions; x++) {
            if (alive[x] == 0.0) {
                continue;
            }
            const auto &pmf = problem.regions[problem.region_of(x)].distance_pmf;
            for (std::size_t d = 0; d < pmf.size(); d++) {
                next[x + d] += alive[x] * pmf[d];
            }
        }
        alive = std::move(next);
    };

    if (problem.reaction_timing == ReactionTiming::PreFlight) {
        for (std::size_t m = 1; m <= problem.max_flights; m++) {
            if (problem.has_reaction(m)) {
                react();
            }
            move();
        }
    } else {
        if (!problem.first_flight_always) {
            react();
        }
        for (std::size_t m = 1; m <= problem.max_flights; m++) {
            move();
            if (m < problem.max_flights) {
                react();
            }
        }
    }

    PathDistribution out;
    out.probabilities.resize(positions);
    for (std::size_t x = 0; x < positions; x++) {
        out.probabilities[x] = alive[x] + stopped[x];
    }
    return out;
}

double expected_flights(double p_absorb) {
    if (!(p_absorb > 0) || p_absorb > 1) {
        throw std::invalid_argument("p_absorb must lie in (0, 1]; the expected flight count diverges at 0");
    }
    return 1.0 / p_absorb;
}

std::uint64_t flights_until_absorbed(double p_absorb, Rng &rng) {
    std::uint64_t flights = 0;
    do {
        if (++flights > kUncappedFlightLimit) {
            throw std::runtime_error("history exceeded " + std::to_string(kUncappedFlightLimit) + " flights");
        }
    } while (rng.uniform() >= p_absorb);
    return flights;
}

double mean_flights_uncapped(double p_absorb, std::uint64_t histories, std::uint64_t seed) {
    if (histories == 0) {
        throw std::invalid_argument("histories must be at least 1");
    }
    double total = 0;
    for (std::uint64_t i = 0; i < histories; i++) {
        Rng rng(seed, i);
        total += static_cast<double>(flights_until_absorbed(p_absorb, rng));
    }
    return total / static_cast<double>(histories);
}

}  // namespace qtransport
