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

#include "qtransport/qae.h"

#include <algorithm>
#include <charconv>
#include <cmath>
#include <limits>
#include <numbers>
#include <numeric>
#include <stdexcept>

#include "qtransport/errors.h"
#include "qtransport/rng.h"

namespace qtransport {

namespace {

std::uint64_t parse_u64(std::string_view s, const char *what) {
    std::uint64_t v = 0;
    auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), v);
    if (s.empty() || ec != std::errc() || ptr != s.data() + s.size()) {
        throw std::invalid_argument(std::string(what) + ": expected a nonnegative integer, got '" + std::string(s) +
                                    "'");
    }
    return v;
}

bool is_power_of_two(std::uint64_t v) { return v != 0 && (v & (v - 1)) == 0; }

}  // namespace

Predicate Predicate::parse(std::string_view text) {
    if (text == "region2") {
        return region2();
    }
    try {
        if (text.starts_with("geq:")) {
            auto k = parse_u64(text.substr(4), "predicate");
            if (!is_power_of_two(k)) {
                throw PredicateError("geq threshold " + std::to_string(k) + " is not a power of two");
            }
            return at_least(k);
        }
        if (text.starts_with("eq:")) {
            return equal(parse_u64(text.substr(3), "predicate"));
        }
    } catch (const PredicateError &) {
        throw;
    } catch (const std::invalid_argument &e) {
        throw PredicateError(e.what());
    }
    throw PredicateError("unknown predicate '" + std::string(text) + "' (expected geq:K, eq:V or region2)");
}

std::string Predicate::to_string() const {
    switch (kind) {
        case Kind::AtLeast:
            return "geq:" + std::to_string(value);
        case Kind::Equal:
            return "eq:" + std::to_string(value);
        case Kind::Region2:
            return "region2";
    }
    return "?";
}

void Predicate::validate(std::size_t x_qubits) const {
    const std::uint64_t positions = std::uint64_t{1} << x_qubits;
    switch (kind) {
        case Kind::AtLeast:
            if (!is_power_of_two(value) || value >= positions) {
                throw PredicateError("geq threshold must be a power of two below " + std::to_string(positions));
            }
            break;
        case Kind::Equal:
            if (value >= positions) {
                throw PredicateError("eq value must be below " + std::to_string(positions));
            }
            break;
        case Kind::Region2:
            break;
    }
}

bool Predicate::matches(std::uint64_t x, std::uint64_t boundary) const {
    switch (kind) {
        case Kind::AtLeast:
            return x >= value;
        case Kind::Equal:
            return x == value;
        case Kind::Region2:
            return x >= boundary;
    }
    return false;
}

Circuit build_flag_oracle(const TransportCircuit &tc, const Predicate &pred) {
    pred.validate(tc.x.size());
    const std::size_t total = tc.circuit.qubit_count();
    switch (pred.kind) {
        case Predicate::Kind::AtLeast:
            return build_region_flag(total, tc.x, pred.value, tc.flag);
        case Predicate::Kind::Region2:
            return build_region_flag(total, tc.x, tc.problem.boundary, tc.flag);
        case Predicate::Kind::Equal: {
            std::vector<Control> controls;
            for (std::size_t i = 0; i < tc.x.size(); i++) {
                controls.push_back({tc.x[i], (pred.value >> i) & 1 ? Polarity::Positive : Polarity::Negative});
            }
            Circuit c(total);
            c.add(Gate::x(tc.flag, std::move(controls)));
            return c;
        }
    }
    throw PredicateError("unhandled predicate kind");
}

Circuit build_a_operator(const TransportCircuit &tc, const Predicate &pred) {
    return compose(tc.circuit, build_flag_oracle(tc, pred));
}

Circuit build_grover_operator(const Circuit &a, std::size_t flag) {
    const std::size_t n = a.qubit_count();
    if (flag >= n) {
        throw std::invalid_argument("flag qubit " + std::to_string(flag) + " outside a " + std::to_string(n) +
                                    "-qubit operator");
    }
    Circuit q(n);
    // S_chi
    q.add(Gate::phase(flag, std::numbers::pi));
    q.append(inverse(a));
    // S0: phase flip on |0...0>, via X-conjugation of a phase on |1,0...0>.
    std::vector<Control> others;
    for (std::size_t i = 1; i < n; i++) {
        others.push_back(neg(i));
    }
    q.add(Gate::x(0));
    q.add(Gate::phase(0, std::numbers::pi, std::move(others)));
    q.add(Gate::x(0));
    q.append(a);
    return q;
}

double exact_amplitude(const Circuit &a, std::size_t flag, std::size_t max_qubits) {
    Statevector s(a.qubit_count(), max_qubits);
    s.apply(a);
    return s.probability_of_one(flag);
}

std::vector<double> grover_flag_probabilities(const Circuit &a, std::size_t flag, std::span<const std::uint64_t> powers,
                                              std::size_t max_qubits) {
    std::vector<std::size_t> order(powers.size());
    std::iota(order.begin(), order.end(), 0);
    std::sort(order.begin(), order.end(), [&](std::size_t i, std::size_t j) { return powers[i] < powers[j]; });

    const Circuit q = build_grover_operator(a, flag);
    Statevector s(a.qubit_count(), max_qubits);
    s.apply(a);
    std::uint64_t applied = 0;
    std::vector<double> probs(powers.size());
    for (auto k : order) {
        for (; applied < powers[k]; applied++) {
            s.apply(q);
        }
        probs[k] = s.probability_of_one(flag);
    }
    return probs;
}

double log_likelihood(std::span<const MeasurementRecord> records, double theta) {
    double ll = 0;
    for (const auto &r : records) {
        double angle = static_cast<double>(2 * r.power + 1) * theta;
        double s = std::sin(angle);
        double c = std::cos(angle);
        if (r.hits > 0) {
            ll += r.hits * std::log(s * s);
        }
        if (r.shots - r.hits > 0) {
            ll += (r.shots - r.hits) * std::log(c * c);
        }
    }
    return ll;
}

double maximize_likelihood(std::span<const MeasurementRecord> records, std::size_t grid_points) {
    if (records.empty()) {
        throw std::invalid_argument("likelihood needs at least one measurement record");
    }
    if (grid_points < 3) {
        throw std::invalid_argument("likelihood grid needs at least 3 points");
    }
    const bool none = std::all_of(records.begin(), records.end(), [](const auto &r) { return r.hits <= 0; });
    const bool all = std::all_of(records.begin(), records.end(), [](const auto &r) { return r.hits >= r.shots; });
    if (none) {
        return 0.0;
    }
    if (all) {
        return std::numbers::pi / 2;
    }

    const double step = (std::numbers::pi / 2) / static_cast<double>(grid_points - 1);
    std::size_t best = 0;
    double best_ll = -std::numeric_limits<double>::infinity();
    for (std::size_t i = 0; i < grid_points; i++) {
        double ll = log_likelihood(records, static_cast<double>(i) * step);
        if (ll > best_ll) {
            best_ll = ll;
            best = i;
        }
    }

    double lo = best == 0 ? 0.0 : static_cast<double>(best - 1) * step;
    double hi = std::min(std::numbers::pi / 2, static_cast<double>(best + 1) * step);
    const double inv_phi = (std::sqrt(5.0) - 1) / 2;
    double x1 = hi - inv_phi * (hi - lo);
    double x2 = lo + inv_phi * (hi - lo);
    double f1 = log_likelihood(records, x1);
    double f2 = log_likelihood(records, x2);
    for (int it = 0; it < 200 && hi - lo > 1e-15; it++) {
        if (f1 < f2) {
            lo = x1;
            x1 = x2;
            f1 = f2;
            x2 = lo + inv_phi * (hi - lo);
            f2 = log_likelihood(records, x2);
        } else {
            hi = x2;
            x2 = x1;
            f2 = f1;
            x1 = hi - inv_phi * (hi - lo);
            f1 = log_likelihood(records, x1);
        }
    }
    double refined = (lo + hi) / 2;
    double grid_theta = static_cast<double>(best) * step;
    return log_likelihood(records, refined) >= best_ll ? refined : grid_theta;
}

std::vector<std::uint64_t> exponential_schedule(std::size_t k) {
    if (k > 40) {
        throw std::invalid_argument("exponential schedule exponent too large");
    }
    std::vector<std::uint64_t> s{0};
    for (std::size_t i = 0; i <= k; i++) {
        s.push_back(std::uint64_t{1} << i);
    }
    return s;
}

std::vector<std::uint64_t> parse_schedule(std::string_view text) {
    if (text.starts_with("exp:")) {
        return exponential_schedule(parse_u64(text.substr(4), "schedule"));
    }
    std::vector<std::uint64_t> out;
    while (true) {
        auto comma = text.find(',');
        out.push_back(parse_u64(text.substr(0, comma), "schedule"));
        if (comma == std::string_view::npos) {
            break;
        }
        text.remove_prefix(comma + 1);
    }
    return out;
}

std::uint64_t oracle_calls(std::span<const std::uint64_t> schedule, std::uint64_t shots_per_power) {
    std::uint64_t calls = 0;
    for (auto m : schedule) {
        calls += shots_per_power * (2 * m + 1);
    }
    return calls;
}

QaeEstimate mlqae_from_probabilities(std::span<const double> probabilities, std::span<const std::uint64_t> schedule,
                                     std::uint64_t shots_per_power, std::uint64_t seed, std::size_t grid_points) {
    if (schedule.empty()) {
        throw std::invalid_argument("schedule must not be empty");
    }
    if (probabilities.size() != schedule.size()) {
        throw std::invalid_argument("one probability per scheduled power is required");
    }
    if (shots_per_power == 0) {
        throw std::invalid_argument("shots per power must be at least 1");
    }
    QaeEstimate est;
    est.schedule.assign(schedule.begin(), schedule.end());
    est.shots_per_power = shots_per_power;
    std::vector<MeasurementRecord> records;
    for (std::size_t k = 0; k < schedule.size(); k++) {
        double p = std::clamp(probabilities[k], 0.0, 1.0);
        const double outcome[2] = {1.0 - p, p};
        auto counts = sample_counts(outcome, shots_per_power, derive_seed(seed, k));
        est.hits.push_back(counts[1]);
        records.push_back({schedule[k], static_cast<double>(shots_per_power), static_cast<double>(counts[1])});
    }
    est.theta_hat = maximize_likelihood(records, grid_points);
    double s = std::sin(est.theta_hat);
    est.p_hat = std::clamp(s * s, 0.0, 1.0);
    est.total_oracle_calls = oracle_calls(schedule, shots_per_power);
    return est;
}

QaeEstimate mlqae_estimate(const Circuit &a, std::size_t flag, std::span<const std::uint64_t> schedule,
                           std::uint64_t shots_per_power, std::uint64_t seed, std::size_t grid_points,
                           std::size_t max_qubits) {
    if (schedule.empty()) {
        throw std::invalid_argument("schedule must not be empty");
    }
    auto probs = grover_flag_probabilities(a, flag, schedule, max_qubits);
    return mlqae_from_probabilities(probs, schedule, shots_per_power, seed, grid_points);
}

}  // namespace qtransport
