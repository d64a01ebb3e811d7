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

#include <cmath>
#include <random>

#include "catch_amalgamated.hpp"
#include "oracles.h"
#include "qtransport/classical_mc.h"
#include "qtransport/errors.h"
#include "qtransport/statevector.h"

using namespace qtransport;
using Catch::Matchers::WithinAbs;

namespace {

PathDistribution simulate_positions(const TransportCircuit &tc) {
    auto s = apply(zero_state(tc.circuit.qubit_count()), tc.circuit);
    return marginal(s, tc.circuit, "X");
}

std::vector<std::size_t> iota_qubits(std::size_t from, std::size_t count) {
    std::vector<std::size_t> q(count);
    for (std::size_t i = 0; i < count; i++) {
        q[i] = from + i;
    }
    return q;
}

}  // namespace

TEST_CASE("distribution loader", "[transport]") {
    SECTION("binary-tree angles for a four-outcome pmf") {
        std::vector<double> pmf{0.3, 0.4, 0.2, 0.1};
        auto c = build_distribution_loader(pmf, 2);
        REQUIRE(c.size() == 3);
        REQUIRE(c.gates()[0] == Gate::ry(1, 2 * std::acos(std::sqrt(0.7))));
        const auto &upper = c.gates()[1];
        const auto &lower = c.gates()[2];
        REQUIRE(upper.controls == std::vector<Control>{pos(1)});
        REQUIRE(lower.controls == std::vector<Control>{neg(1)});
        REQUIRE_THAT(upper.angle, WithinAbs(2 * std::acos(std::sqrt(0.2 / 0.3)), 1e-15));
        REQUIRE_THAT(lower.angle, WithinAbs(2 * std::acos(std::sqrt(0.3 / 0.7)), 1e-15));
    }

    SECTION("empty subtrees get a zero angle but are still emitted") {
        std::vector<double> pmf{0.5, 0.5, 0.0, 0.0};
        auto c = build_distribution_loader(pmf, 2);
        REQUIRE(c.size() == 3);
        REQUIRE(c.gates()[0].angle == 0.0);
        REQUIRE(c.gates()[1].angle == 0.0);
    }

    SECTION("prepared amplitudes are sqrt(pmf) for random pmfs") {
        std::mt19937_64 gen(31);
        for (std::size_t width = 1; width <= 4; width++) {
            for (int trial = 0; trial < 10; trial++) {
                std::size_t len = std::uniform_int_distribution<std::size_t>(1, std::size_t{1} << width)(gen);
                auto pmf = testing::random_pmf(gen, len);
                auto s = apply(zero_state(width), build_distribution_loader(pmf, width));
                for (std::size_t v = 0; v < s.size(); v++) {
                    double expect = v < pmf.size() ? std::sqrt(pmf[v]) : 0.0;
                    REQUIRE(std::abs(s[v] - Amplitude(expect)) < 1e-12);
                }
            }
        }
    }

    SECTION("rejects invalid pmfs") {
        REQUIRE_THROWS_AS(build_distribution_loader(std::vector<double>{0.5, 0.6}, 1), std::invalid_argument);
        REQUIRE_THROWS_AS(build_distribution_loader(std::vector<double>{1.2, -0.2}, 1), std::invalid_argument);
        REQUIRE_THROWS_AS(build_distribution_loader(std::vector<double>{0.25, 0.25, 0.5}, 1), std::invalid_argument);
    }
}

TEST_CASE("region flag", "[transport]") {
    SECTION("gates for a 4-qubit position register with boundary 4") {
        auto c = build_region_flag(5, iota_qubits(0, 4), 4, 4);
        REQUIRE(c.size() == 3);
        REQUIRE(c.gates()[0].controls == std::vector<Control>{pos(3)});
        REQUIRE(c.gates()[1].controls == std::vector<Control>{pos(2)});
        REQUIRE(c.gates()[2].controls == std::vector<Control>{pos(3), pos(2)});
    }

    SECTION("flags x >= boundary for every width, boundary and position") {
        for (std::size_t w = 1; w <= 5; w++) {
            auto x = iota_qubits(0, w);
            for (std::size_t k = 0; k < w; k++) {
                std::uint64_t boundary = std::uint64_t{1} << k;
                auto c = build_region_flag(w + 1, x, boundary, w);
                REQUIRE(c.size() == (std::size_t{1} << (w - k)) - 1);
                for (std::uint64_t v = 0; v < (1u << w); v++) {
                    auto s = apply(Statevector::basis(w + 1, v), c);
                    std::uint64_t expect = v | (v >= boundary ? (1u << w) : 0);
                    REQUIRE(std::abs(s[expect] - Amplitude(1)) < 1e-12);
                }
            }
        }
    }

    SECTION("invalid boundaries") {
        auto x = iota_qubits(0, 3);
        REQUIRE_THROWS_AS(build_region_flag(4, x, 3, 3), std::invalid_argument);
        REQUIRE_THROWS_AS(build_region_flag(4, x, 8, 3), std::invalid_argument);
        REQUIRE_THROWS_AS(build_region_flag(4, x, 2, 1), std::invalid_argument);
    }
}

TEST_CASE("reaction rotation", "[transport]") {
    auto problem = reference_two_region_problem();
    auto c = build_reaction_rotation(2, problem.regions, 0, 1);
    auto region1 = apply(Statevector::basis(2, 0b00), c);
    auto region2 = apply(Statevector::basis(2, 0b01), c);
    REQUIRE_THAT(flag_probability(region1, 1), WithinAbs(0.75, 1e-12));
    REQUIRE_THAT(flag_probability(region2, 1), WithinAbs(0.60, 1e-12));
    REQUIRE_THAT(weight_angle(1.0), WithinAbs(0.0, 1e-15));
    REQUIRE_THAT(weight_angle(0.0), WithinAbs(std::numbers::pi, 1e-15));
}

TEST_CASE("Fourier-basis adder", "[transport]") {
    SECTION("adds modulo 2^w under a control, exhaustively for w=4, |d|=2") {
        auto x = iota_qubits(0, 4);
        auto d = iota_qubits(4, 2);
        auto adder = build_controlled_adder(7, x, d, pos(6));
        for (std::uint64_t ctl = 0; ctl < 2; ctl++) {
            for (std::uint64_t xv = 0; xv < 16; xv++) {
                for (std::uint64_t dv = 0; dv < 4; dv++) {
                    std::uint64_t in = encode_register_value(d, dv, encode_register_value(x, xv)) | (ctl << 6);
                    std::uint64_t sum = ctl ? (xv + dv) % 16 : xv;
                    std::uint64_t out = encode_register_value(x, sum, in);
                    auto s = apply(Statevector::basis(7, in), adder);
                    REQUIRE(std::abs(std::abs(s[out]) - 1.0) < 1e-12);
                }
            }
        }
    }

    SECTION("only the phase block carries the control") {
        auto x = iota_qubits(0, 3);
        auto d = iota_qubits(3, 2);
        auto bare = build_controlled_adder(6, x, d, std::nullopt);
        auto gated = build_controlled_adder(6, x, d, neg(5));
        REQUIRE(bare.size() == gated.size());
        std::size_t controlled = 0;
        for (const auto &g : gated.gates()) {
            controlled += g.controls.size() == 2 ? 1 : 0;
        }
        // phases: q=0: 1, q=1: 2, q=2: 2
        REQUIRE(controlled == 5);
    }

    SECTION("rejects overlapping registers") {
        auto x = iota_qubits(0, 3);
        REQUIRE_THROWS_AS(build_controlled_adder(5, x, iota_qubits(2, 2), std::nullopt), std::invalid_argument);
        REQUIRE_THROWS_AS(build_controlled_adder(5, x, iota_qubits(3, 2), pos(1)), std::invalid_argument);
        REQUIRE_THROWS_AS(build_controlled_adder(8, iota_qubits(0, 2), iota_qubits(2, 3), std::nullopt),
                          std::invalid_argument);
    }
}

TEST_CASE("negative controls equal X-conjugated positive controls", "[transport]") {
    std::mt19937_64 gen(12);
    for (int trial = 0; trial < 5; trial++) {
        auto body = testing::random_circuit(gen, 4, 25, 2);
        Circuit wide(5);
        for (const auto &g : body.gates()) {
            wide.add(g);
        }
        Circuit sandwich(5);
        sandwich.add(Gate::x(4));
        sandwich.append(add_controls(wide, {pos(4)}));
        sandwich.add(Gate::x(4));
        auto negative = add_controls(wide, {neg(4)});
        for (std::uint64_t b = 0; b < 32; b++) {
            auto s1 = apply(Statevector::basis(5, b), sandwich);
            auto s2 = apply(Statevector::basis(5, b), negative);
            REQUIRE(s1.max_abs_diff(s2) < 1e-12);
        }
    }
}

TEST_CASE("reference two-region circuit", "[transport]") {
    auto problem = reference_two_region_problem();
    auto tc = build_transport_circuit(problem);

    SECTION("layout") {
        REQUIRE(tc.circuit.qubit_count() == 15);
        REQUIRE(tc.flag == 14);
        REQUIRE(tc.x == iota_qubits(0, 4));
        REQUIRE(tc.distance.size() == 3);
        REQUIRE_FALSE(tc.reaction[0].has_value());
        REQUIRE(tc.reaction[1].has_value());
        REQUIRE(tc.reaction[2].has_value());
        std::vector<std::string> names;
        for (const auto &r : tc.circuit.registers()) {
            names.push_back(r.name);
        }
        REQUIRE(names == std::vector<std::string>{"X", "AncR", "D1", "D2", "R2", "D3", "R3", "AncP", "flag"});
    }

    SECTION("position marginal matches both classical oracles") {
        auto q = simulate_positions(tc);
        auto brute = testing::enumerate_histories(problem);
        REQUIRE(q.size() == 16);
        REQUIRE_THAT(q.total(), WithinAbs(1.0, 1e-12));
        REQUIRE(q.max_abs_diff(brute) < 1e-12);
        REQUIRE(q.max_abs_diff(exact_distribution(problem)) < 1e-12);
        REQUIRE_THAT(q[0], WithinAbs(0.1070625, 1e-12));
        for (std::size_t x = 10; x < 16; x++) {
            REQUIRE(q[x] < 1e-12);  // three flights of at most 3
        }
    }

    SECTION("ancillas and the flag end in |0>") {
        auto s = apply(zero_state(15), tc.circuit);
        REQUIRE(s.probability_of_one(tc.anc_r) < 1e-12);
        REQUIRE(s.probability_of_one(tc.anc_p) < 1e-12);
        REQUIRE(s.probability_of_one(tc.flag) < 1e-12);
    }

    SECTION("Anc.P is computed and uncomputed around the gated additions") {
        std::size_t anc_p_gates = 0;
        for (const auto &g : tc.circuit.gates()) {
            if (g.kind == GateKind::PauliX && g.targets[0] == tc.anc_p) {
                anc_p_gates++;
            }
        }
        REQUIRE(anc_p_gates == 4);
    }
}

TEST_CASE("degenerate problems", "[transport]") {
    SECTION("a single distance leaves the particle at the source") {
        TransportProblem p;
        p.x_qubits = 2;
        p.max_flights = 3;
        p.boundary = 2;
        p.regions[0] = {{1.0}, 0.3};
        p.regions[1] = {{1.0}, 0.3};
        REQUIRE(p.distance_width() == 0);
        auto q = simulate_positions(build_transport_circuit(p));
        REQUIRE_THAT(q[0], WithinAbs(1.0, 1e-12));
    }

    SECTION("certain absorption stops after the forced first flight") {
        TransportProblem p;
        p.x_qubits = 3;
        p.max_flights = 3;
        p.boundary = 4;
        p.regions[0] = {{0.2, 0.5, 0.3}, 1.0};
        p.regions[1] = {{0.2, 0.5, 0.3}, 1.0};
        auto q = simulate_positions(build_transport_circuit(p));
        REQUIRE_THAT(q[0], WithinAbs(0.2, 1e-12));
        REQUIRE_THAT(q[1], WithinAbs(0.5, 1e-12));
        REQUIRE_THAT(q[2], WithinAbs(0.3, 1e-12));
    }

    SECTION("an absorbed source never moves") {
        TransportProblem p;
        p.x_qubits = 3;
        p.max_flights = 2;
        p.boundary = 4;
        p.first_flight_always = false;
        p.regions[0] = {{0.0, 0.5, 0.5}, 1.0};
        p.regions[1] = {{0.0, 0.5, 0.5}, 1.0};
        auto q = simulate_positions(build_transport_circuit(p));
        REQUIRE_THAT(q[0], WithinAbs(1.0, 1e-12));
    }
}

TEST_CASE("circuit matches the classical oracles on random problems", "[transport]") {
    std::mt19937_64 gen(2718);
    for (int trial = 0; trial < 30; trial++) {
        auto p = testing::random_problem(gen, 14);
        auto tc = build_transport_circuit(p);
        auto q = simulate_positions(tc);
        auto brute = testing::enumerate_histories(p);
        auto s = apply(zero_state(tc.circuit.qubit_count()), tc.circuit);
        INFO("trial " << trial << " x_qubits " << p.x_qubits << " flights " << p.max_flights);
        REQUIRE(q.max_abs_diff(brute) < 1e-12);
        REQUIRE(q.max_abs_diff(exact_distribution(p)) < 1e-12);
        REQUIRE(s.probability_of_one(tc.anc_r) < 1e-12);
        REQUIRE(s.probability_of_one(tc.anc_p) < 1e-12);
    }
}

TEST_CASE("problem invariants", "[transport]") {
    auto base = reference_two_region_problem();
    REQUIRE_NOTHROW(base.validate());

    auto broken = [&](auto edit) {
        auto p = base;
        edit(p);
        return p;
    };
    REQUIRE_THROWS_AS(broken([](auto &p) { p.regions[0].distance_pmf = {0.5, 0.4, 0.2, -0.1}; }).validate(),
                      InvariantViolation);
    REQUIRE_THROWS_AS(broken([](auto &p) { p.regions[1].distance_pmf = {0.5, 0.4, 0.2, 0.2}; }).validate(),
                      InvariantViolation);
    REQUIRE_THROWS_AS(broken([](auto &p) { p.regions[1].distance_pmf = {0.5, 0.5}; }).validate(), InvariantViolation);
    REQUIRE_THROWS_AS(broken([](auto &p) { p.regions[0].p_absorb = 1.5; }).validate(), InvariantViolation);
    REQUIRE_THROWS_AS(broken([](auto &p) { p.boundary = 3; }).validate(), InvariantViolation);
    REQUIRE_THROWS_AS(broken([](auto &p) { p.boundary = 16; }).validate(), InvariantViolation);
    REQUIRE_THROWS_AS(broken([](auto &p) { p.max_flights = 0; }).validate(), InvariantViolation);
    // 6 flights of up to 3 can reach 18 > 15
    REQUIRE_THROWS_AS(broken([](auto &p) { p.max_flights = 6; }).validate(), InvariantViolation);
    REQUIRE_THROWS_AS(build_transport_circuit(broken([](auto &p) { p.x_qubits = 0; })), InvariantViolation);
}
