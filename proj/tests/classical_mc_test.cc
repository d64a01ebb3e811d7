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

#include <cmath>
#include <random>

#include "catch_amalgamated.hpp"
#include "oracles.h"

using namespace qtransport;
using Catch::Matchers::WithinAbs;
using Catch::Matchers::WithinRel;

TEST_CASE("continuous flight distances", "[classical]") {
    REQUIRE(sample_flight_distance_continuous(1.5, 1.0) == 0.0);
    REQUIRE_THAT(sample_flight_distance_continuous(2.0, std::exp(-1.0)), WithinRel(2.0, 1e-14));
    REQUIRE_THROWS_AS(sample_flight_distance_continuous(1.0, 0.0), std::invalid_argument);
    REQUIRE_THROWS_AS(sample_flight_distance_continuous(1.0, 1.5), std::invalid_argument);
    REQUIRE_THROWS_AS(sample_flight_distance_continuous(0.0, 0.5), std::invalid_argument);

    Rng rng(3, 0);
    const int n = 1'000'000;
    double sum = 0;
    for (int i = 0; i < n; i++) {
        sum += sample_flight_distance_continuous(1.5, rng.uniform_positive());
    }
    REQUIRE_THAT(sum / n, WithinRel(1.5, 0.01));
}

TEST_CASE("rounded exponential distances", "[classical]") {
    for (double lambda : {0.3, 1.0, 1.5, 4.0}) {
        auto pmf = discretize_exponential(lambda, 3);
        REQUIRE(pmf.size() == 4);
        double total = 0;
        for (double p : pmf) {
            REQUIRE(p >= 0);
            total += p;
        }
        REQUIRE_THAT(total, WithinAbs(1.0, 1e-12));
        REQUIRE_THAT(pmf[0], WithinAbs(1 - std::exp(-0.5 / lambda), 1e-15));
        REQUIRE_THAT(pmf[3], WithinAbs(std::exp(-2.5 / lambda), 1e-15));
    }
    // a vanishing mean free path puts everything at distance 0
    REQUIRE_THAT(discretize_exponential(1e-3, 3)[0], WithinAbs(1.0, 1e-12));
    REQUIRE_THROWS_AS(discretize_exponential(1.0, 0), std::invalid_argument);
}

TEST_CASE("distance sampling skips zero-probability outcomes", "[classical]") {
    std::vector<double> pmf{0.0, 0.5, 0.0, 0.5};
    Rng rng(1, 1);
    for (int i = 0; i < 10000; i++) {
        auto d = sample_distance(pmf, rng);
        REQUIRE((d == 1 || d == 3));
    }
}

TEST_CASE("single histories", "[classical]") {
    TransportProblem p;
    p.x_qubits = 3;
    p.max_flights = 3;
    p.boundary = 4;
    p.regions[0] = {{0.0, 1.0}, 0.0};
    p.regions[1] = {{0.0, 1.0}, 0.0};

    SECTION("no absorption: every flight moves") {
        Rng rng(1, 0);
        REQUIRE(run_history(p, rng) == 3);
    }

    SECTION("certain absorption: only the forced flight") {
        p.regions[0].p_absorb = p.regions[1].p_absorb = 1.0;
        Rng rng(1, 0);
        REQUIRE(run_history(p, rng) == 1);
        p.first_flight_always = false;
        REQUIRE(run_history(p, rng) == 0);
    }

    SECTION("absorbing only past the boundary") {
        p.max_flights = 7;
        p.regions[1].p_absorb = 1.0;
        Rng rng(1, 0);
        REQUIRE(run_history(p, rng) == 4);  // the reaction at x = 4 absorbs
    }
}

TEST_CASE("tallies converge to the exact distribution", "[classical]") {
    auto problem = reference_two_region_problem();
    auto exact = exact_distribution(problem);
    const std::uint64_t shots = 1'000'000;
    auto tally = run_tally(problem, shots, 42, 2);
    auto freq = tally.frequencies();
    REQUIRE(tally.total_shots == shots);
    for (std::size_t x = 0; x < exact.size(); x++) {
        double sigma = std::sqrt(exact[x] * (1 - exact[x]) / static_cast<double>(shots));
        INFO("position " << x);
        REQUIRE(std::abs(freq[x] - exact[x]) <= 4 * sigma + 1e-12);
    }
    REQUIRE_THAT(exact[0], WithinAbs(0.1070625, 1e-12));
}

TEST_CASE("tallies are reproducible", "[classical]") {
    auto problem = reference_two_region_problem();
    auto a = run_tally(problem, 20000, 7, 1);
    REQUIRE(run_tally(problem, 20000, 7, 1).counts == a.counts);
    REQUIRE(run_tally(problem, 20000, 7, 4).counts == a.counts);
    REQUIRE(run_tally(problem, 20000, 8, 1).counts != a.counts);
    REQUIRE_THROWS_AS(run_tally(problem, 0, 7), std::invalid_argument);
}

TEST_CASE("reaction timing does not change the distribution", "[classical]") {
    std::mt19937_64 gen(8);
    for (int trial = 0; trial < 20; trial++) {
        auto pre = testing::random_problem(gen, 20);
        auto post = pre;
        pre.reaction_timing = ReactionTiming::PreFlight;
        post.reaction_timing = ReactionTiming::PostFlight;
        REQUIRE(exact_distribution(pre).max_abs_diff(exact_distribution(post)) < 1e-14);
        REQUIRE(run_tally(pre, 2000, trial).counts == run_tally(post, 2000, trial).counts);
    }
}

TEST_CASE("dynamic programming agrees with brute-force enumeration", "[classical]") {
    std::mt19937_64 gen(77);
    for (int trial = 0; trial < 40; trial++) {
        auto p = testing::random_problem(gen, 22);
        REQUIRE(exact_distribution(p).max_abs_diff(testing::enumerate_histories(p)) < 1e-13);
    }
}

TEST_CASE("region 2 is irrelevant when the boundary is out of reach", "[classical]") {
    TransportProblem p;
    p.x_qubits = 5;
    p.max_flights = 2;
    p.boundary = 16;  // at most 2*3 = 6 reachable
    p.regions[0] = {{0.3, 0.4, 0.2, 0.1}, 0.25};
    p.regions[1] = {{0.4, 0.4, 0.2, 0.0}, 0.40};
    auto other = p;
    other.regions[1] = {{0.1, 0.1, 0.1, 0.7}, 0.9};
    REQUIRE(exact_distribution(other).max_abs_diff(exact_distribution(p)) == 0.0);
    REQUIRE(run_tally(other, 5000, 3).counts == run_tally(p, 5000, 3).counts);
}

TEST_CASE("mean position grows with the number of flights", "[classical]") {
    auto p = reference_two_region_problem();
    double previous = -1;
    for (std::size_t n = 1; n <= 5; n++) {
        p.max_flights = n;
        double mean = exact_distribution(p).mean();
        REQUIRE(mean > previous);
        previous = mean;
    }
}

TEST_CASE("classical error falls as one over the square root of the budget", "[classical]") {
    auto problem = reference_two_region_problem();
    double target = exact_distribution(problem)[0];
    std::vector<double> budgets{100, 1000, 10000, 100000}, rmse;
    for (double b : budgets) {
        double sq = 0;
        const int seeds = 20;
        for (int s = 0; s < seeds; s++) {
            auto f = run_tally(problem, static_cast<std::uint64_t>(b), derive_seed(5, s)).frequencies();
            sq += (f[0] - target) * (f[0] - target);
        }
        rmse.push_back(std::sqrt(sq / seeds));
    }
    double sx = 0, sy = 0, sxx = 0, sxy = 0;
    for (std::size_t i = 0; i < budgets.size(); i++) {
        double lx = std::log(budgets[i]), ly = std::log(rmse[i]);
        sx += lx;
        sy += ly;
        sxx += lx * lx;
        sxy += lx * ly;
    }
    double n = static_cast<double>(budgets.size());
    double slope = (n * sxy - sx * sy) / (n * sxx - sx * sx);
    REQUIRE_THAT(slope, WithinAbs(-0.5, 0.15));
}

TEST_CASE("unbounded single-region flights", "[classical]") {
    REQUIRE(expected_flights(0.25) == 4.0);
    REQUIRE(expected_flights(1.0) == 1.0);
    REQUIRE_THROWS_AS(expected_flights(0.0), std::invalid_argument);
    REQUIRE_THAT(mean_flights_uncapped(0.25, 200000, 3), WithinRel(4.0, 0.02));
    Rng rng(0, 0);
    REQUIRE(flights_until_absorbed(1.0, rng) == 1);
    REQUIRE_THROWS_AS(flights_until_absorbed(0.0, rng), std::runtime_error);
}
