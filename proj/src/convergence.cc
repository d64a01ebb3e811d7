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

#include "qtransport/convergence.h"

#include <cmath>
#include <stdexcept>
#include <thread>

#include "qtransport/classical_mc.h"
#include "qtransport/rng.h"

namespace qtransport {

namespace {

double slope_or_nan(std::span<const double> x, std::span<const double> y) {
    if (x.size() < 2) {
        return std::nan("");
    }
    for (double v : y) {
        if (!(v > 0)) {
            return std::nan("");
        }
    }
    return loglog_slope(x, y);
}

}  // namespace

double loglog_slope(std::span<const double> x, std::span<const double> y) {
    if (x.size() != y.size() || x.size() < 2) {
        throw std::invalid_argument("slope needs at least two matching points");
    }
    double mx = 0, my = 0;
    for (std::size_t i = 0; i < x.size(); i++) {
        if (!(x[i] > 0) || !(y[i] > 0)) {
            throw std::invalid_argument("log-log slope needs positive values");
        }
        mx += std::log(x[i]);
        my += std::log(y[i]);
    }
    mx /= static_cast<double>(x.size());
    my /= static_cast<double>(y.size());
    double sxy = 0, sxx = 0;
    for (std::size_t i = 0; i < x.size(); i++) {
        double dx = std::log(x[i]) - mx;
        sxy += dx * (std::log(y[i]) - my);
        sxx += dx * dx;
    }
    return sxy / sxx;
}

ConvergenceResult run_convergence(const TransportProblem &problem, const ConvergenceConfig &config) {
    problem.validate();
    config.predicate.validate(problem.x_qubits);
    if (config.seeds == 0) {
        throw std::invalid_argument("at least one seed is required");
    }
    if (config.schedule.empty()) {
        throw std::invalid_argument("schedule must not be empty");
    }

    ConvergenceResult result;
    const auto oracle = exact_distribution(problem);
    for (std::uint64_t x = 0; x < oracle.size(); x++) {
        if (config.predicate.matches(x, problem.boundary)) {
            result.exact_probability += oracle[x];
        }
    }
    const double p = result.exact_probability;
    const double seeds = static_cast<double>(config.seeds);
    const unsigned threads = std::max(1u, std::thread::hardware_concurrency());

    std::vector<double> xs, ys;
    for (auto shots : config.classical_budgets) {
        double sq = 0;
        for (std::uint64_t s = 0; s < config.seeds; s++) {
            auto tally = run_tally(problem, shots, derive_seed(config.base_seed, s), threads);
            std::uint64_t good = 0;
            for (std::uint64_t x = 0; x < tally.counts.size(); x++) {
                if (config.predicate.matches(x, problem.boundary)) {
                    good += tally.counts[x];
                }
            }
            double err = static_cast<double>(good) / static_cast<double>(shots) - p;
            sq += err * err;
        }
        double rmse = std::sqrt(sq / seeds);
        result.rows.push_back({"classical_mc", shots, rmse});
        xs.push_back(static_cast<double>(shots));
        ys.push_back(rmse);
    }
    result.classical_slope = slope_or_nan(xs, ys);

    const auto tc = build_transport_circuit(problem);
    const auto a = build_a_operator(tc, config.predicate);
    const auto probs = grover_flag_probabilities(a, tc.flag, config.schedule, config.max_qubits);

    xs.clear();
    ys.clear();
    for (std::size_t len = 1; len <= config.schedule.size(); len++) {
        std::span<const std::uint64_t> prefix(config.schedule.data(), len);
        std::span<const double> prefix_probs(probs.data(), len);
        double sq = 0;
        std::uint64_t calls = 0;
        for (std::uint64_t s = 0; s < config.seeds; s++) {
            auto est = mlqae_from_probabilities(prefix_probs, prefix, config.shots_per_power,
                                                derive_seed(config.base_seed, s));
            double err = est.p_hat - p;
            sq += err * err;
            calls = est.total_oracle_calls;
        }
        double rmse = std::sqrt(sq / seeds);
        result.rows.push_back({"mlqae", calls, rmse});
        xs.push_back(static_cast<double>(calls));
        ys.push_back(rmse);
    }
    result.quantum_slope = slope_or_nan(xs, ys);
    return result;
}

}  // namespace qtransport
