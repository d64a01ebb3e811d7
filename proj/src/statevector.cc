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

#include "qtransport/statevector.h"

#include <algorithm>
#include <cmath>
#include <stdexcept>
#include <string>
#include <thread>

#include "qtransport/errors.h"
#include "qtransport/rng.h"

namespace qtransport {

namespace {

// Inserts a zero bit at each position of `fixed` (sorted ascending).
inline std::uint64_t spread(std::uint64_t free_index, std::span<const std::size_t> fixed) {
    for (std::size_t p : fixed) {
        std::uint64_t low = free_index & ((std::uint64_t{1} << p) - 1);
        free_index = ((free_index >> p) << (p + 1)) | low;
    }
    return free_index;
}

struct GateFrame {
    std::vector<std::size_t> fixed;  // targets + controls, sorted
    std::uint64_t control_bits = 0;  // bits that must be set for the gate to act
    std::uint64_t free_count = 0;
};

GateFrame frame_for(const Gate &g, std::size_t qubits) {
    GateFrame f;
    f.fixed = g.targets;
    for (const auto &c : g.controls) {
        f.fixed.push_back(c.qubit);
        if (c.polarity == Polarity::Positive) {
            f.control_bits |= std::uint64_t{1} << c.qubit;
        }
    }
    std::sort(f.fixed.begin(), f.fixed.end());
    f.free_count = std::uint64_t{1} << (qubits - f.fixed.size());
    return f;
}

template <typename Body>
inline void for_each_pair(const GateFrame &f, std::uint64_t target_bit, Body &&body) {
    for (std::uint64_t k = 0; k < f.free_count; k++) {
        std::uint64_t i0 = spread(k, f.fixed) | f.control_bits;
        body(i0, i0 | target_bit);
    }
}

}  // namespace

Statevector::Statevector(std::size_t qubits, std::size_t max_qubits) : qubits_(qubits) {
    if (qubits == 0) {
        throw std::invalid_argument("a statevector needs at least one qubit");
    }
    if (qubits > max_qubits) {
        throw CapacityExceeded("statevector of " + std::to_string(qubits) + " qubits exceeds the ceiling of " +
                               std::to_string(max_qubits));
    }
    amps_.assign(std::size_t{1} << qubits, Amplitude{0.0, 0.0});
    amps_[0] = 1.0;
}

Statevector Statevector::basis(std::size_t qubits, std::uint64_t index, std::size_t max_qubits) {
    Statevector s(qubits, max_qubits);
    if (index >= s.size()) {
        throw std::invalid_argument("basis index out of range");
    }
    s.amps_[0] = 0.0;
    s.amps_[index] = 1.0;
    return s;
}

void Statevector::apply(const Gate &g) {
    g.validate();
    if (g.max_qubit() >= qubits_) {
        throw std::invalid_argument("gate references qubit " + std::to_string(g.max_qubit()) + " of a " +
                                    std::to_string(qubits_) + "-qubit state");
    }
    GateFrame f = frame_for(g, qubits_);
    Amplitude *a = amps_.data();

    if (g.kind == GateKind::Swap) {
        std::uint64_t b0 = std::uint64_t{1} << g.targets[0];
        std::uint64_t b1 = std::uint64_t{1} << g.targets[1];
        for (std::uint64_t k = 0; k < f.free_count; k++) {
            std::uint64_t base = spread(k, f.fixed) | f.control_bits;
            std::swap(a[base | b0], a[base | b1]);
        }
        return;
    }

    std::uint64_t t = std::uint64_t{1} << g.targets[0];
    switch (g.kind) {
        case GateKind::PauliX:
            for_each_pair(f, t, [a](std::uint64_t i0, std::uint64_t i1) { std::swap(a[i0], a[i1]); });
            break;
        case GateKind::Hadamard: {
            const double s = 1.0 / std::sqrt(2.0);
            for_each_pair(f, t, [a, s](std::uint64_t i0, std::uint64_t i1) {
                Amplitude v0 = a[i0];
                Amplitude v1 = a[i1];
                a[i0] = s * (v0 + v1);
                a[i1] = s * (v0 - v1);
            });
            break;
        }
        case GateKind::RotY: {
            const double c = std::cos(g.angle / 2);
            const double s = std::sin(g.angle / 2);
            for_each_pair(f, t, [a, c, s](std::uint64_t i0, std::uint64_t i1) {
                Amplitude v0 = a[i0];
                Amplitude v1 = a[i1];
                a[i0] = c * v0 - s * v1;
                a[i1] = s * v0 + c * v1;
            });
            break;
        }
        case GateKind::PhaseShift: {
            const Amplitude ph = std::polar(1.0, g.angle);
            for_each_pair(f, t, [a, ph](std::uint64_t, std::uint64_t i1) { a[i1] *= ph; });
            break;
        }
        case GateKind::Swap:
            break;
    }
}

void Statevector::apply(const Circuit &c) {
    if (c.qubit_count() != qubits_) {
        throw std::invalid_argument("circuit has " + std::to_string(c.qubit_count()) + " qubits, state has " +
                                    std::to_string(qubits_));
    }
    for (const auto &g : c.gates()) {
        apply(g);
    }
}

double Statevector::norm() const {
    double s = 0;
    for (const auto &v : amps_) {
        s += std::norm(v);
    }
    return std::sqrt(s);
}

double Statevector::probability_of_one(std::size_t qubit) const {
    if (qubit >= qubits_) {
        throw std::invalid_argument("qubit " + std::to_string(qubit) + " out of range");
    }
    std::uint64_t bit = std::uint64_t{1} << qubit;
    double p = 0;
    for (std::uint64_t i = 0; i < amps_.size(); i++) {
        if (i & bit) {
            p += std::norm(amps_[i]);
        }
    }
    return p;
}

std::vector<double> Statevector::marginal(std::span<const std::size_t> qubits) const {
    for (auto q : qubits) {
        if (q >= qubits_) {
            throw std::invalid_argument("qubit " + std::to_string(q) + " out of range");
        }
    }
    std::vector<double> probs(std::size_t{1} << qubits.size(), 0.0);
    for (std::uint64_t i = 0; i < amps_.size(); i++) {
        double w = std::norm(amps_[i]);
        if (w != 0.0) {
            probs[decode_register_value(qubits, i)] += w;
        }
    }
    return probs;
}

double Statevector::max_abs_diff(const Statevector &other) const {
    if (other.size() != size()) {
        throw std::invalid_argument("statevector size mismatch");
    }
    double worst = 0;
    for (std::size_t i = 0; i < amps_.size(); i++) {
        worst = std::max(worst, std::abs(amps_[i] - other.amps_[i]));
    }
    return worst;
}

Statevector zero_state(std::size_t qubits, std::size_t max_qubits) { return Statevector(qubits, max_qubits); }

Statevector apply(Statevector state, const Circuit &c) {
    state.apply(c);
    return state;
}

PathDistribution marginal(const Statevector &state, const Circuit &c, std::string_view register_name) {
    return PathDistribution{state.marginal(c.register_qubits(register_name))};
}

double flag_probability(const Statevector &state, std::size_t qubit) { return state.probability_of_one(qubit); }

std::vector<std::uint64_t> sample_counts(std::span<const double> probabilities, std::uint64_t shots,
                                         std::uint64_t seed, unsigned threads) {
    if (shots == 0) {
        throw std::invalid_argument("shots must be at least 1");
    }
    if (probabilities.empty()) {
        throw std::invalid_argument("cannot sample from an empty distribution");
    }
    std::vector<double> cdf(probabilities.size());
    double acc = 0;
    std::size_t last_nonzero = 0;
    for (std::size_t i = 0; i < probabilities.size(); i++) {
        if (probabilities[i] < 0) {
            throw std::invalid_argument("negative probability");
        }
        acc += probabilities[i];
        cdf[i] = acc;
        if (probabilities[i] > 0) {
            last_nonzero = i;
        }
    }
    if (!(acc > 0)) {
        throw std::invalid_argument("distribution has no mass");
    }

    auto run = [&](std::uint64_t begin, std::uint64_t end, std::vector<std::uint64_t> &counts) {
        for (std::uint64_t shot = begin; shot < end; shot++) {
            Rng rng(seed, shot);
            double u = rng.uniform() * acc;
            auto idx = static_cast<std::size_t>(std::upper_bound(cdf.begin(), cdf.end(), u) - cdf.begin());
            counts[std::min(idx, last_nonzero)]++;
        }
    };

    threads = std::max(1u, threads);
    std::vector<std::vector<std::uint64_t>> partial(threads, std::vector<std::uint64_t>(probabilities.size(), 0));
    if (threads == 1) {
        run(0, shots, partial[0]);
    } else {
        std::vector<std::jthread> pool;
        for (unsigned t = 0; t < threads; t++) {
            std::uint64_t begin = shots * t / threads;
            std::uint64_t end = shots * (t + 1) / threads;
            pool.emplace_back([&, begin, end, t] { run(begin, end, partial[t]); });
        }
    }
    std::vector<std::uint64_t> counts(probabilities.size(), 0);
    for (const auto &p : partial) {
        for (std::size_t i = 0; i < counts.size(); i++) {
            counts[i] += p[i];
        }
    }
    return counts;
}

std::vector<std::uint64_t> sample(const Statevector &state, std::span<const std::size_t> qubits, std::uint64_t shots,
                                  std::uint64_t seed, unsigned threads) {
    auto probs = state.marginal(qubits);
    return sample_counts(probs, shots, seed, threads);
}

}  // namespace qtransport
