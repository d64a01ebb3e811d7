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

#include "qtransport/circuit.h"

#include <algorithm>
#include <charconv>
#include <cmath>
#include <cstdio>
#include <sstream>
#include <stdexcept>

namespace qtransport {

namespace {

bool has_angle(GateKind kind) { return kind == GateKind::RotY || kind == GateKind::PhaseShift; }

std::string qubit_list(const std::vector<std::size_t> &qs) {
    std::string out = "[";
    for (std::size_t i = 0; i < qs.size(); i++) {
        if (i) {
            out += ',';
        }
        out += std::to_string(qs[i]);
    }
    out += ']';
    return out;
}

std::string format_angle(double a) {
    char buf[40];
    std::snprintf(buf, sizeof(buf), "%.17g", a);
    return buf;
}

}  // namespace

Gate Gate::x(std::size_t q, std::vector<Control> controls) {
    return Gate{GateKind::PauliX, 0.0, {q}, std::move(controls)};
}

Gate Gate::h(std::size_t q, std::vector<Control> controls) {
    return Gate{GateKind::Hadamard, 0.0, {q}, std::move(controls)};
}

Gate Gate::ry(std::size_t q, double theta, std::vector<Control> controls) {
    return Gate{GateKind::RotY, theta, {q}, std::move(controls)};
}

Gate Gate::phase(std::size_t q, double theta, std::vector<Control> controls) {
    return Gate{GateKind::PhaseShift, theta, {q}, std::move(controls)};
}

Gate Gate::swap(std::size_t a, std::size_t b, std::vector<Control> controls) {
    return Gate{GateKind::Swap, 0.0, {a, b}, std::move(controls)};
}

void Gate::validate() const {
    std::size_t expected = kind == GateKind::Swap ? 2 : 1;
    if (targets.size() != expected) {
        throw std::invalid_argument(std::string(gate_kind_name(kind)) + " needs " +
                                    std::to_string(expected) + " target(s), got " +
                                    std::to_string(targets.size()));
    }
    if (!std::isfinite(angle)) {
        throw std::invalid_argument("gate angle must be finite");
    }
    std::vector<std::size_t> all = targets;
    for (const auto &c : controls) {
        all.push_back(c.qubit);
    }
    std::sort(all.begin(), all.end());
    if (std::adjacent_find(all.begin(), all.end()) != all.end()) {
        throw std::invalid_argument("gate targets and controls must be pairwise distinct");
    }
}

std::size_t Gate::max_qubit() const {
    std::size_t m = 0;
    for (auto t : targets) {
        m = std::max(m, t);
    }
    for (const auto &c : controls) {
        m = std::max(m, c.qubit);
    }
    return m;
}

bool Gate::touches(std::size_t q) const {
    if (std::find(targets.begin(), targets.end(), q) != targets.end()) {
        return true;
    }
    return std::any_of(controls.begin(), controls.end(), [&](const Control &c) { return c.qubit == q; });
}

Gate inverse(const Gate &g) {
    Gate out = g;
    if (has_angle(g.kind)) {
        out.angle = -g.angle;
    }
    return out;
}

Circuit::Circuit(std::size_t qubit_count) : qubit_count_(qubit_count) {}

Circuit &Circuit::add(Gate g) {
    g.validate();
    if (g.max_qubit() >= qubit_count_) {
        throw std::invalid_argument("gate references qubit " + std::to_string(g.max_qubit()) +
                                    " outside a " + std::to_string(qubit_count_) + "-qubit circuit");
    }
    gates_.push_back(std::move(g));
    return *this;
}

Circuit &Circuit::append(const Circuit &other) {
    if (other.qubit_count_ != qubit_count_) {
        throw std::invalid_argument("cannot append a " + std::to_string(other.qubit_count_) +
                                    "-qubit circuit to a " + std::to_string(qubit_count_) + "-qubit circuit");
    }
    merge_registers(other.registers_);
    gates_.insert(gates_.end(), other.gates_.begin(), other.gates_.end());
    return *this;
}

void Circuit::merge_registers(const std::vector<Register> &regs) {
    for (const auto &r : regs) {
        auto it = std::find_if(registers_.begin(), registers_.end(),
                               [&](const Register &mine) { return mine.name == r.name; });
        if (it == registers_.end()) {
            add_register(r.name, r.qubits);
        } else if (it->qubits != r.qubits) {
            throw std::invalid_argument("register '" + r.name + "' defined with different qubits");
        }
    }
}

Circuit &Circuit::add_register(std::string name, std::vector<std::size_t> qubits) {
    if (has_register(name)) {
        throw std::invalid_argument("duplicate register '" + name + "'");
    }
    for (auto q : qubits) {
        if (q >= qubit_count_) {
            throw std::invalid_argument("register '" + name + "' references qubit " + std::to_string(q) +
                                        " outside the circuit");
        }
        if (std::count(qubits.begin(), qubits.end(), q) != 1) {
            throw std::invalid_argument("register '" + name + "' repeats qubit " + std::to_string(q));
        }
        for (const auto &r : registers_) {
            if (std::find(r.qubits.begin(), r.qubits.end(), q) != r.qubits.end()) {
                throw std::invalid_argument("register '" + name + "' overlaps register '" + r.name + "'");
            }
        }
    }
    registers_.push_back(Register{std::move(name), std::move(qubits)});
    return *this;
}

bool Circuit::has_register(std::string_view name) const {
    return std::any_of(registers_.begin(), registers_.end(), [&](const Register &r) { return r.name == name; });
}

const std::vector<std::size_t> &Circuit::register_qubits(std::string_view name) const {
    for (const auto &r : registers_) {
        if (r.name == name) {
            return r.qubits;
        }
    }
    throw std::invalid_argument("unknown register '" + std::string(name) + "'");
}

Circuit compose(const Circuit &a, const Circuit &b) {
    Circuit out = a;
    out.append(b);
    return out;
}

Circuit inverse(const Circuit &c) {
    Circuit out(c.qubit_count());
    for (const auto &r : c.registers()) {
        out.add_register(r.name, r.qubits);
    }
    for (auto it = c.gates().rbegin(); it != c.gates().rend(); ++it) {
        out.add(inverse(*it));
    }
    return out;
}

Circuit add_controls(const Circuit &c, std::span<const Control> controls) {
    for (const auto &ctrl : controls) {
        for (const auto &g : c.gates()) {
            if (g.touches(ctrl.qubit)) {
                throw std::invalid_argument("control qubit " + std::to_string(ctrl.qubit) +
                                            " overlaps a gate of the wrapped circuit");
            }
        }
    }
    Circuit out(c.qubit_count());
    for (const auto &r : c.registers()) {
        out.add_register(r.name, r.qubits);
    }
    for (const auto &g : c.gates()) {
        Gate wrapped = g;
        wrapped.controls.insert(wrapped.controls.end(), controls.begin(), controls.end());
        out.add(std::move(wrapped));
    }
    return out;
}

Circuit add_controls(const Circuit &c, std::initializer_list<Control> controls) {
    return add_controls(c, std::span<const Control>(controls.begin(), controls.size()));
}

std::uint64_t encode_register_value(std::span<const std::size_t> qubits, std::uint64_t value,
                                    std::uint64_t base) {
    if (qubits.size() < 64 && (value >> qubits.size()) != 0) {
        throw std::invalid_argument("value " + std::to_string(value) + " does not fit a " +
                                    std::to_string(qubits.size()) + "-qubit register");
    }
    for (std::size_t i = 0; i < qubits.size(); i++) {
        std::uint64_t bit = std::uint64_t{1} << qubits[i];
        base = (value >> i) & 1 ? (base | bit) : (base & ~bit);
    }
    return base;
}

std::uint64_t decode_register_value(std::span<const std::size_t> qubits, std::uint64_t index) {
    std::uint64_t v = 0;
    for (std::size_t i = 0; i < qubits.size(); i++) {
        v |= ((index >> qubits[i]) & 1) << i;
    }
    return v;
}

std::string_view gate_kind_name(GateKind kind) {
    switch (kind) {
        case GateKind::PauliX:
            return "X";
        case GateKind::Hadamard:
            return "H";
        case GateKind::RotY:
            return "RY";
        case GateKind::PhaseShift:
            return "P";
        case GateKind::Swap:
            return "SWAP";
    }
    return "?";
}

std::string dump_circuit(const Circuit &c) {
    std::string out = "qubits=" + std::to_string(c.qubit_count()) + "\n";
    for (const auto &r : c.registers()) {
        out += "register " + r.name + "=" + qubit_list(r.qubits) + "\n";
    }
    for (const auto &g : c.gates()) {
        out += gate_kind_name(g.kind);
        if (has_angle(g.kind)) {
            out += "(" + format_angle(g.angle) + ")";
        }
        out += " targets=" + qubit_list(g.targets) + " controls=[";
        for (std::size_t i = 0; i < g.controls.size(); i++) {
            if (i) {
                out += ',';
            }
            out += g.controls[i].polarity == Polarity::Positive ? '+' : '-';
            out += std::to_string(g.controls[i].qubit);
        }
        out += "]\n";
    }
    return out;
}

namespace {

[[noreturn]] void bad_dump(std::size_t line_no, const std::string &why) {
    throw std::invalid_argument("circuit dump line " + std::to_string(line_no) + ": " + why);
}

std::size_t parse_index(std::string_view s, std::size_t line_no) {
    std::size_t v = 0;
    auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), v);
    if (ec != std::errc() || ptr != s.data() + s.size() || s.empty()) {
        bad_dump(line_no, "bad integer '" + std::string(s) + "'");
    }
    return v;
}

// Splits "[a,b,c]" into its items.
std::vector<std::string_view> bracket_items(std::string_view s, std::size_t line_no) {
    if (s.size() < 2 || s.front() != '[' || s.back() != ']') {
        bad_dump(line_no, "expected a bracketed list, got '" + std::string(s) + "'");
    }
    s = s.substr(1, s.size() - 2);
    std::vector<std::string_view> items;
    while (!s.empty()) {
        auto comma = s.find(',');
        items.push_back(s.substr(0, comma));
        if (comma == std::string_view::npos) {
            break;
        }
        s.remove_prefix(comma + 1);
    }
    return items;
}

std::string_view strip_prefix(std::string_view s, std::string_view prefix, std::size_t line_no) {
    if (s.substr(0, prefix.size()) != prefix) {
        bad_dump(line_no, "expected '" + std::string(prefix) + "'");
    }
    return s.substr(prefix.size());
}

}  // namespace

Circuit parse_circuit_dump(std::string_view text) {
    std::istringstream in{std::string(text)};
    std::string line;
    std::size_t line_no = 0;
    Circuit c;
    bool have_header = false;
    while (std::getline(in, line)) {
        line_no++;
        if (line.empty()) {
            continue;
        }
        std::string_view sv = line;
        if (!have_header) {
            c = Circuit(parse_index(strip_prefix(sv, "qubits=", line_no), line_no));
            have_header = true;
            continue;
        }
        if (sv.starts_with("register ")) {
            sv.remove_prefix(9);
            auto eq = sv.find('=');
            if (eq == std::string_view::npos) {
                bad_dump(line_no, "register line without '='");
            }
            std::vector<std::size_t> qs;
            for (auto item : bracket_items(sv.substr(eq + 1), line_no)) {
                qs.push_back(parse_index(item, line_no));
            }
            c.add_register(std::string(sv.substr(0, eq)), std::move(qs));
            continue;
        }

        auto sp1 = sv.find(' ');
        auto sp2 = sv.rfind(' ');
        if (sp1 == std::string_view::npos || sp1 == sp2) {
            bad_dump(line_no, "expected 'KIND targets=[..] controls=[..]'");
        }
        std::string_view head = sv.substr(0, sp1);
        std::string_view targets = strip_prefix(sv.substr(sp1 + 1, sp2 - sp1 - 1), "targets=", line_no);
        std::string_view controls = strip_prefix(sv.substr(sp2 + 1), "controls=", line_no);

        Gate g;
        std::string_view kind = head;
        auto paren = head.find('(');
        if (paren != std::string_view::npos) {
            if (head.back() != ')') {
                bad_dump(line_no, "unterminated angle");
            }
            kind = head.substr(0, paren);
            std::string angle(head.substr(paren + 1, head.size() - paren - 2));
            try {
                std::size_t used = 0;
                g.angle = std::stod(angle, &used);
                if (used != angle.size()) {
                    throw std::invalid_argument(angle);
                }
            } catch (const std::exception &) {
                bad_dump(line_no, "bad angle '" + angle + "'");
            }
        }
        if (kind == "X") {
            g.kind = GateKind::PauliX;
        } else if (kind == "H") {
            g.kind = GateKind::Hadamard;
        } else if (kind == "RY") {
            g.kind = GateKind::RotY;
        } else if (kind == "P") {
            g.kind = GateKind::PhaseShift;
        } else if (kind == "SWAP") {
            g.kind = GateKind::Swap;
        } else {
            bad_dump(line_no, "unknown gate kind '" + std::string(kind) + "'");
        }
        if (has_angle(g.kind) != (paren != std::string_view::npos)) {
            bad_dump(line_no, "angle presence does not match gate kind");
        }
        for (auto item : bracket_items(targets, line_no)) {
            g.targets.push_back(parse_index(item, line_no));
        }
        for (auto item : bracket_items(controls, line_no)) {
            if (item.empty() || (item[0] != '+' && item[0] != '-')) {
                bad_dump(line_no, "control must be signed, got '" + std::string(item) + "'");
            }
            g.controls.push_back(
                {parse_index(item.substr(1), line_no), item[0] == '+' ? Polarity::Positive : Polarity::Negative});
        }
        try {
            c.add(std::move(g));
        } catch (const std::invalid_argument &e) {
            bad_dump(line_no, e.what());
        }
    }
    if (!have_header) {
        throw std::invalid_argument("circuit dump is missing the 'qubits=N' header");
    }
    return c;
}

}  // namespace qtransport
