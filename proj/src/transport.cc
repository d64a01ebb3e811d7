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

#include "qtransport/transport.h"

#include <algorithm>
#include <cmath>
#include <functional>
#include <numbers>
#include <stdexcept>
#include <string>

#include "qtransport/errors.h"

namespace qtransport {

namespace {

constexpr double kPmfTolerance = 1e-9;

bool is_power_of_two(std::uint64_t v) { return v != 0 && (v & (v - 1)) == 0; }

// Empty string when valid.
std::string pmf_problem(std::span<const double> pmf) {
    if (pmf.empty()) {
        return "distribution is empty";
    }
    double total = 0;
    for (double p : pmf) {
        if (!std::isfinite(p) || p < 0) {
            return "distribution has a negative or non-finite entry";
        }
        total += p;
    }
    if (std::abs(total - 1.0) > kPmfTolerance) {
        return "distribution sums to " + std::to_string(total) + ", not 1";
    }
    return {};
}

void check_disjoint(std::span<const std::size_t> a, std::span<const std::size_t> b, const char *what) {
    for (auto q : a) {
        if (std::find(b.begin(), b.end(), q) != b.end()) {
            throw std::invalid_argument(std::string(what) + ": registers overlap at qubit " + std::to_string(q));
        }
    }
}

// Subsets of `bits` in order of increasing size.
void for_each_subset_by_size(const std::vector<std::size_t> &bits,
                             const std::function<void(const std::vector<std::size_t> &)> &visit) {
    std::vector<std::size_t> chosen;
    std::function<void(std::size_t, std::size_t)> rec = [&](std::size_t start, std::size_t remaining) {
        if (remaining == 0) {
            visit(chosen);
            return;
        }
        for (std::size_t i = start; i + remaining <= bits.size(); i++) {
            chosen.push_back(bits[i]);
            rec(i + 1, remaining - 1);
            chosen.pop_back();
        }
    };
    for (std::size_t size = 1; size <= bits.size(); size++) {
        rec(0, size);
    }
}

}  // namespace

void TransportProblem::validate() const {
    if (x_qubits < 1 || x_qubits > 62) {
        throw InvariantViolation("x_qubits must be in [1, 62]");
    }
    if (max_flights < 1) {
        throw InvariantViolation("max_flights must be at least 1");
    }
    if (!is_power_of_two(boundary) || boundary >= (std::uint64_t{1} << x_qubits)) {
        throw InvariantViolation("boundary must be a power of two with 0 < boundary < 2^x_qubits, got " +
                                 std::to_string(boundary));
    }
    for (std::size_t r = 0; r < 2; r++) {
        auto why = pmf_problem(regions[r].distance_pmf);
        if (!why.empty()) {
            throw InvariantViolation("region " + std::to_string(r + 1) + ": " + why);
        }
        double pa = regions[r].p_absorb;
        if (!std::isfinite(pa) || pa < 0 || pa > 1) {
            throw InvariantViolation("region " + std::to_string(r + 1) + ": p_absorb must lie in [0, 1]");
        }
    }
    if (regions[0].distance_pmf.size() != regions[1].distance_pmf.size()) {
        throw InvariantViolation("both regions need distance distributions of the same length");
    }
    // n * d_max < 2^x_qubits, written to avoid overflow.
    std::uint64_t capacity = (std::uint64_t{1} << x_qubits) - 1;
    std::uint64_t d_max = max_distance();
    if (d_max != 0 && max_flights > capacity / d_max) {
        throw InvariantViolation("position register overflows: " + std::to_string(max_flights) + " flights of up to " +
                                 std::to_string(d_max) + " exceed " + std::to_string(capacity));
    }
}

std::size_t bits_for(std::uint64_t values) {
    std::size_t bits = 0;
    while (bits < 64 && (std::uint64_t{1} << bits) < values) {
        bits++;
    }
    return bits;
}

std::size_t TransportProblem::distance_width() const { return bits_for(max_distance() + 1); }

TransportProblem reference_two_region_problem() {
    TransportProblem p;
    p.x_qubits = 4;
    p.max_flights = 3;
    p.boundary = 4;
    p.regions[0] = RegionSpec{{0.3, 0.4, 0.2, 0.1}, 0.25};
    p.regions[1] = RegionSpec{{0.4, 0.4, 0.2, 0.0}, 0.40};
    return p;
}

double weight_angle(double p0) { return 2.0 * std::acos(std::sqrt(std::clamp(p0, 0.0, 1.0))); }

Circuit build_distribution_loader(std::size_t qubit_count, std::span<const std::size_t> target,
                                  std::span<const double> pmf) {
    auto why = pmf_problem(pmf);
    if (!why.empty()) {
        throw std::invalid_argument("distribution loader: " + why);
    }
    const std::size_t width = target.size();
    if (width < 64 && pmf.size() > (std::size_t{1} << width)) {
        throw std::invalid_argument("distribution loader: " + std::to_string(pmf.size()) +
                                    " outcomes do not fit in " + std::to_string(width) + " qubits");
    }
    Circuit c(qubit_count);
    if (width == 0) {
        return c;
    }

    // mass[v] for every value, padded with zeros.
    std::vector<double> mass(std::size_t{1} << width, 0.0);
    std::copy(pmf.begin(), pmf.end(), mass.begin());

    // Level `bit` splits each prefix subtree (values sharing bits above `bit`)
    // into its lower and upper halves.
    for (std::size_t level = 0; level < width; level++) {
        const std::size_t bit = width - 1 - level;
        const std::size_t span_len = std::size_t{1} << (bit + 1);
        const std::size_t prefixes = std::size_t{1} << level;
        for (std::size_t p = prefixes; p-- > 0;) {
            double total = 0;
            double lower = 0;
            for (std::size_t v = p * span_len; v < (p + 1) * span_len; v++) {
                total += mass[v];
                if (v < p * span_len + span_len / 2) {
                    lower += mass[v];
                }
            }
            double theta = total > 0 ? weight_angle(lower / total) : 0.0;
            std::vector<Control> controls;
            for (std::size_t j = width - 1; j > bit; j--) {
                bool set = (p >> (j - bit - 1)) & 1;
                controls.push_back({target[j], set ? Polarity::Positive : Polarity::Negative});
            }
            c.add(Gate::ry(target[bit], theta, std::move(controls)));
        }
    }
    return c;
}

Circuit build_distribution_loader(std::span<const double> pmf, std::size_t width) {
    std::vector<std::size_t> qubits(width);
    for (std::size_t i = 0; i < width; i++) {
        qubits[i] = i;
    }
    Circuit c = build_distribution_loader(width, qubits, pmf);
    c.add_register("D", qubits);
    return c;
}

Circuit build_region_flag(std::size_t qubit_count, std::span<const std::size_t> x, std::uint64_t boundary,
                          std::size_t anc) {
    if (!is_power_of_two(boundary)) {
        throw std::invalid_argument("region flag: boundary " + std::to_string(boundary) + " is not a power of two");
    }
    const std::size_t k = bits_for(boundary);
    if (k >= x.size()) {
        throw std::invalid_argument("region flag: boundary " + std::to_string(boundary) + " does not fit below 2^" +
                                    std::to_string(x.size()));
    }
    if (std::find(x.begin(), x.end(), anc) != x.end()) {
        throw std::invalid_argument("region flag: ancilla overlaps the position register");
    }
    std::vector<std::size_t> high;
    for (std::size_t i = x.size(); i-- > k;) {
        high.push_back(x[i]);
    }
    // OR(b_1..b_m) = XOR over non-empty subsets S of AND(S).
    Circuit c(qubit_count);
    for_each_subset_by_size(high, [&](const std::vector<std::size_t> &subset) {
        std::vector<Control> controls;
        for (auto q : subset) {
            controls.push_back(pos(q));
        }
        c.add(Gate::x(anc, std::move(controls)));
    });
    return c;
}

Circuit build_reaction_rotation(std::size_t qubit_count, const std::array<RegionSpec, 2> &regions, std::size_t anc_r,
                                std::size_t r_qubit) {
    Circuit c(qubit_count);
    c.add(Gate::ry(r_qubit, weight_angle(regions[0].p_absorb), {neg(anc_r)}));
    c.add(Gate::ry(r_qubit, weight_angle(regions[1].p_absorb), {pos(anc_r)}));
    return c;
}

Circuit build_fourier_transform(std::size_t qubit_count, std::span<const std::size_t> x) {
    Circuit c(qubit_count);
    for (std::size_t q = x.size(); q-- > 0;) {
        c.add(Gate::h(x[q]));
        for (std::size_t k = q; k-- > 0;) {
            c.add(Gate::phase(x[q], std::numbers::pi / static_cast<double>(std::uint64_t{1} << (q - k)), {pos(x[k])}));
        }
    }
    return c;
}

Circuit build_controlled_adder(std::size_t qubit_count, std::span<const std::size_t> x,
                               std::span<const std::size_t> d, std::optional<Control> control) {
    if (d.size() > x.size()) {
        throw std::invalid_argument("adder: distance register wider than position register");
    }
    check_disjoint(x, d, "adder");
    if (control) {
        std::size_t cq = control->qubit;
        if (std::find(x.begin(), x.end(), cq) != x.end() || std::find(d.begin(), d.end(), cq) != d.end()) {
            throw std::invalid_argument("adder: control qubit overlaps an operand register");
        }
    }

    // In the transformed basis qubit q carries 2 pi x / 2^(q+1); adding d
    // multiplies it by 2 pi d / 2^(q+1), i.e. pi / 2^(q-i) per set bit i <= q.
    Circuit phases(qubit_count);
    for (std::size_t q = 0; q < x.size(); q++) {
        for (std::size_t i = 0; i <= q && i < d.size(); i++) {
            phases.add(Gate::phase(x[q], std::numbers::pi / static_cast<double>(std::uint64_t{1} << (q - i)),
                                   {pos(d[i])}));
        }
    }
    if (control) {
        phases = add_controls(phases, {*control});
    }
    Circuit qft = build_fourier_transform(qubit_count, x);
    Circuit c = compose(qft, phases);
    c.append(inverse(qft));
    return c;
}

TransportCircuit build_transport_circuit(const TransportProblem &problem) {
    problem.validate();
    const std::size_t n = problem.max_flights;
    const std::size_t wd = problem.distance_width();

    TransportCircuit tc;
    tc.problem = problem;
    std::size_t next = 0;
    auto take = [&](std::size_t count) {
        std::vector<std::size_t> qs(count);
        for (auto &q : qs) {
            q = next++;
        }
        return qs;
    };
    tc.x = take(problem.x_qubits);
    tc.anc_r = take(1)[0];
    for (std::size_t m = 1; m <= n; m++) {
        tc.distance.push_back(take(wd));
        tc.reaction.push_back(problem.has_reaction(m) ? std::optional<std::size_t>(take(1)[0]) : std::nullopt);
    }
    tc.anc_p = take(1)[0];
    tc.flag = take(1)[0];
    const std::size_t total = next;

    Circuit c(total);
    c.add_register("X", tc.x);
    c.add_register("AncR", {tc.anc_r});
    for (std::size_t m = 1; m <= n; m++) {
        c.add_register("D" + std::to_string(m), tc.distance[m - 1]);
        if (tc.reaction[m - 1]) {
            c.add_register("R" + std::to_string(m), {*tc.reaction[m - 1]});
        }
    }
    c.add_register("AncP", {tc.anc_p});
    c.add_register("flag", {tc.flag});

    const Circuit region_flag = build_region_flag(total, tc.x, problem.boundary, tc.anc_r);
    const Circuit region_unflag = inverse(region_flag);

    std::vector<Control> scattered;  // reactions so far
    for (std::size_t m = 1; m <= n; m++) {
        const auto &dm = tc.distance[m - 1];
        const auto &rm = tc.reaction[m - 1];

        // Load D_m and R_m from the region of the current position.
        c.append(region_flag);
        for (std::size_t r = 0; r < 2; r++) {
            Circuit load = build_distribution_loader(total, dm, problem.regions[r].distance_pmf);
            if (rm) {
                load.add(Gate::ry(*rm, weight_angle(problem.regions[r].p_absorb)));
            }
            c.append(add_controls(load, {r == 0 ? neg(tc.anc_r) : pos(tc.anc_r)}));
        }
        c.append(region_unflag);

        if (rm) {
            scattered.push_back(pos(*rm));
        }
        if (scattered.empty()) {
            c.append(build_controlled_adder(total, tc.x, dm, std::nullopt));
            continue;
        }
        // Anc.P = AND(all reactions so far); uncomputed after the addition.
        Gate progress = Gate::x(tc.anc_p, scattered);
        c.add(progress);
        c.append(build_controlled_adder(total, tc.x, dm, pos(tc.anc_p)));
        c.add(progress);
    }
    tc.circuit = std::move(c);
    return tc;
}

}  // namespace qtransport
