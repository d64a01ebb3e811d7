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

#ifndef QTRANSPORT_CONVERGENCE_H
#define QTRANSPORT_CONVERGENCE_H

#include <cstddef>
#include <cstdint>
#include <span>
#include <string>
#include <vector>

#include "qtransport/qae.h"
#include "qtransport/transport.h"

namespace qtransport {

struct ConvergenceRow {
    std::string method;  // "classical_mc" or "mlqae"
    std::uint64_t budget = 0;  // oracle calls (one classical history counts as one call)
    double rmse = 0;
};

struct ConvergenceConfig {
    Predicate predicate = Predicate::region2();
    std::vector<std::uint64_t> classical_budgets{100, 1'000, 10'000, 100'000};
    std::vector<std::uint64_t> schedule = exponential_schedule(6);
    std::uint64_t shots_per_power = 100;
    std::uint64_t seeds = 20;
    std::uint64_t base_seed = 1;
    std::size_t max_qubits = kDefaultMaxQubits;
};

struct ConvergenceResult {
    double exact_probability = 0;  // from the exact classical oracle
    std::vector<ConvergenceRow> rows;
    double classical_slope = 0;  // NaN when fewer than two points or a zero RMSE
    double quantum_slope = 0;
};

/// RMSE over seeds of the predicate probability estimated by classical Monte
/// Carlo at each shot budget and by maximum-likelihood amplitude estimation at
/// each prefix of the schedule (prefix k's budget is its oracle-call count).
/// Seed i of either method uses derive_seed(base_seed, i).
ConvergenceResult run_convergence(const TransportProblem &problem, const ConvergenceConfig &config);

/// Least-squares slope of log(y) against log(x).
double loglog_slope(std::span<const double> x, std::span<const double> y);

}  // namespace qtransport

#endif
