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

#include "qtransport/cli.h"

#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <thread>
#include <vector>

#include "CLI11.hpp"
#include "json.hpp"
#include "qtransport/classical_mc.h"
#include "qtransport/convergence.h"
#include "qtransport/errors.h"
#include "qtransport/problem_io.h"
#include "qtransport/qae.h"
#include "qtransport/resources.h"
#include "qtransport/statevector.h"
#include "qtransport/transport.h"

namespace qtransport::cli {

namespace {

using nlohmann::ordered_json;

struct UsageError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

std::string fmt_real(double v) {
    char buf[40];
    std::snprintf(buf, sizeof(buf), "%.17g", v);
    return buf;
}

std::size_t max_qubits_from_env() {
    const char *env = std::getenv("QTRANSPORT_MAX_QUBITS");
    if (env == nullptr || *env == '\0') {
        return kDefaultMaxQubits;
    }
    try {
        std::size_t used = 0;
        long v = std::stol(env, &used);
        if (used != std::string(env).size() || v < 1 || v > 40) {
            throw std::invalid_argument(env);
        }
        return static_cast<std::size_t>(v);
    } catch (const std::exception &) {
        throw UsageError(std::string("QTRANSPORT_MAX_QUBITS must be an integer in [1, 40], got '") + env + "'");
    }
}

void check_capacity(std::size_t qubits, std::size_t max_qubits) {
    if (qubits > max_qubits) {
        throw CapacityExceeded("circuit needs " + std::to_string(qubits) + " qubits, ceiling is " +
                               std::to_string(max_qubits) + " (set QTRANSPORT_MAX_QUBITS to raise it)");
    }
}

std::vector<std::uint64_t> parse_list(const std::string &text, const char *what) {
    std::vector<std::uint64_t> out;
    std::stringstream ss(text);
    std::string item;
    while (std::getline(ss, item, ',')) {
        try {
            std::size_t used = 0;
            unsigned long long v = std::stoull(item, &used);
            if (used != item.size() || item.starts_with('-')) {
                throw std::invalid_argument(item);
            }
            out.push_back(v);
        } catch (const std::exception &) {
            throw UsageError(std::string(what) + ": bad entry '" + item + "'");
        }
    }
    if (out.empty()) {
        throw UsageError(std::string(what) + " must not be empty");
    }
    return out;
}

std::vector<std::uint64_t> schedule_from(const std::string &text) {
    try {
        return parse_schedule(text);
    } catch (const std::invalid_argument &e) {
        throw UsageError(std::string("--schedule: ") + e.what());
    }
}

std::string exact_csv(const TransportProblem &problem, bool oracle, std::size_t max_qubits) {
    PathDistribution dist;
    if (oracle) {
        dist = exact_distribution(problem);
    } else {
        auto tc = build_transport_circuit(problem);
        check_capacity(tc.circuit.qubit_count(), max_qubits);
        dist = marginal(apply(zero_state(tc.circuit.qubit_count(), max_qubits), tc.circuit), tc.circuit, "X");
    }
    std::string csv = "position,probability\n";
    for (std::size_t x = 0; x < dist.size(); x++) {
        csv += std::to_string(x) + "," + fmt_real(dist[x]) + "\n";
    }
    return csv;
}

std::string mc_csv(const TransportProblem &problem, std::uint64_t shots, std::uint64_t seed, const std::string &mode,
                   std::size_t max_qubits) {
    std::vector<std::uint64_t> counts;
    if (mode == "flowchart") {
        counts = run_tally(problem, shots, seed, std::max(1u, std::thread::hardware_concurrency())).counts;
    } else {
        auto tc = build_transport_circuit(problem);
        check_capacity(tc.circuit.qubit_count(), max_qubits);
        auto state = apply(zero_state(tc.circuit.qubit_count(), max_qubits), tc.circuit);
        counts = sample(state, tc.x, shots, seed, std::max(1u, std::thread::hardware_concurrency()));
    }
    std::string csv = "position,count,frequency\n";
    for (std::size_t x = 0; x < counts.size(); x++) {
        csv += std::to_string(x) + "," + std::to_string(counts[x]) + "," +
               fmt_real(static_cast<double>(counts[x]) / static_cast<double>(shots)) + "\n";
    }
    return csv;
}

std::string qae_json(const TransportProblem &problem, const Predicate &pred, const std::vector<std::uint64_t> &schedule,
                     std::uint64_t shots, std::uint64_t seed, std::size_t max_qubits) {
    pred.validate(problem.x_qubits);
    auto tc = build_transport_circuit(problem);
    check_capacity(tc.circuit.qubit_count(), max_qubits);
    auto a = build_a_operator(tc, pred);
    auto probs = grover_flag_probabilities(a, tc.flag, schedule, max_qubits);
    double p_exact = exact_amplitude(a, tc.flag, max_qubits);
    auto est = mlqae_from_probabilities(probs, schedule, shots, seed);

    ordered_json j;
    j["predicate"] = pred.to_string();
    j["p_hat"] = est.p_hat;
    j["theta_hat"] = est.theta_hat;
    j["p_exact"] = p_exact;
    j["total_oracle_calls"] = est.total_oracle_calls;
    j["schedule"] = est.schedule;
    j["shots_per_power"] = est.shots_per_power;
    j["hits"] = est.hits;
    j["seed"] = seed;
    return j.dump(2) + "\n";
}

std::string resources_json(std::optional<std::uint64_t> flights, const std::optional<TransportProblem> &problem) {
    ordered_json j;
    if (flights) {
        auto e = logical_qubit_estimate(*flights);
        j["flights"] = e.flights;
        j["register_qubits"] = e.register_qubits;
        j["adder_ancilla_qubits"] = e.adder_ancilla_qubits;
        j["reaction_qubits"] = e.reaction_qubits;
        j["progress_ancilla"] = e.progress_ancilla;
        j["total"] = e.total;
    } else {
        auto b = circuit_budget(*problem);
        ordered_json regs = ordered_json::object();
        for (const auto &[name, width] : b.registers) {
            regs[name] = width;
        }
        j["registers"] = regs;
        j["transport_qubits"] = b.transport_qubits;
        j["total_with_flag"] = b.total_with_flag;
    }
    return j.dump(2) + "\n";
}

std::string convergence_csv(const TransportProblem &problem, const ConvergenceConfig &config, std::ostream &err) {
    auto tc = build_transport_circuit(problem);
    check_capacity(tc.circuit.qubit_count(), config.max_qubits);
    auto result = run_convergence(problem, config);
    std::string csv = "method,budget,rmse\n";
    for (const auto &row : result.rows) {
        csv += row.method + "," + std::to_string(row.budget) + "," + fmt_real(row.rmse) + "\n";
    }
    err << "exact p=" << fmt_real(result.exact_probability) << " classical slope=" << fmt_real(result.classical_slope)
        << " mlqae slope=" << fmt_real(result.quantum_slope) << "\n";
    return csv;
}

void emit(const std::string &text, const std::string &out_path, std::ostream &out) {
    if (out_path.empty()) {
        out << text;
        return;
    }
    std::ofstream f(out_path, std::ios::binary);
    if (!f || !(f << text)) {
        throw std::runtime_error("cannot write '" + out_path + "'");
    }
}

}  // namespace

int run(int argc, const char *const *argv, std::ostream &out, std::ostream &err) {
    CLI::App app{"Two-region particle transport on a statevector simulator", "qtransport"};
    app.require_subcommand(1);

    std::string problem_path;
    std::string out_path;
    std::uint64_t shots = 100'000;
    std::uint64_t seed = 1;
    std::string mode = "flowchart";
    std::string predicate_text;
    std::string schedule_text = "exp:6";
    std::uint64_t shots_per_power = 100;
    std::string budgets_text = "100,1000,10000,100000";
    std::uint64_t seeds = 20;
    std::uint64_t flights = 0;
    bool oracle = false;

    auto add_problem = [&](CLI::App *cmd, bool required) {
        auto *opt = cmd->add_option("-p,--problem", problem_path, "Problem JSON file");
        if (required) {
            opt->required();
        }
        cmd->add_option("-o,--out", out_path, "Output file (default: stdout)");
        return opt;
    };

    auto *exact = app.add_subcommand("exact", "Exact final-position distribution from the circuit (CSV)");
    add_problem(exact, true);
    exact->add_flag("--oracle", oracle, "Emit the exact classical oracle instead of the quantum marginal");

    auto *mc = app.add_subcommand("mc", "Monte Carlo tally of final positions (CSV)");
    add_problem(mc, true);
    mc->add_option("--shots", shots, "Number of histories or shots")->check(CLI::PositiveNumber);
    mc->add_option("--seed", seed, "Seed");
    mc->add_option("--mode", mode, "flowchart: classical histories, circuit: measure the statevector")
        ->check(CLI::IsMember({"circuit", "flowchart"}));

    auto *qae = app.add_subcommand("qae", "Maximum-likelihood amplitude estimation of a predicate (JSON)");
    add_problem(qae, true);
    qae->add_option("--predicate", predicate_text, "geq:K, eq:V or region2")->required();
    qae->add_option("--schedule", schedule_text, "Grover powers m0,m1,... or exp:K");
    qae->add_option("--shots-per-power", shots_per_power, "Shots per Grover power")->check(CLI::PositiveNumber);
    qae->add_option("--seed", seed, "Seed");

    auto *res = app.add_subcommand("resources", "Logical-qubit estimate or exact circuit budget (JSON)");
    auto *problem_opt = add_problem(res, false);
    auto *flights_opt =
        res->add_option("--flights", flights, "Flights for the logical-qubit estimate")->check(CLI::PositiveNumber);
    problem_opt->excludes(flights_opt);

    auto *conv = app.add_subcommand("convergence", "RMSE vs oracle calls, classical MC and MLQAE (CSV)");
    add_problem(conv, true);
    conv->add_option("--predicate", predicate_text, "geq:K, eq:V or region2 (default region2)");
    conv->add_option("--budgets", budgets_text, "Classical shot budgets, comma separated");
    conv->add_option("--seeds", seeds, "Seeds per budget")->check(CLI::PositiveNumber);
    conv->add_option("--schedule", schedule_text, "Grover powers m0,m1,... or exp:K");
    conv->add_option("--shots-per-power", shots_per_power, "Shots per Grover power")->check(CLI::PositiveNumber);
    conv->add_option("--seed", seed, "Base seed");

    auto *dump = app.add_subcommand("dump-circuit", "Gate-level dump of the transport circuit");
    add_problem(dump, true);

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError &e) {
        int code = app.exit(e, out, err);
        return code == 0 ? kOk : kUsage;
    }

    try {
        const std::size_t max_qubits = max_qubits_from_env();
        std::optional<Predicate> predicate;
        if (!predicate_text.empty()) {
            predicate = Predicate::parse(predicate_text);
        }
        std::optional<TransportProblem> problem;
        if (!problem_path.empty()) {
            problem = load_problem(problem_path);
        }

        std::string text;
        if (exact->parsed()) {
            text = exact_csv(*problem, oracle, max_qubits);
        } else if (mc->parsed()) {
            text = mc_csv(*problem, shots, seed, mode, max_qubits);
        } else if (qae->parsed()) {
            text = qae_json(*problem, *predicate, schedule_from(schedule_text), shots_per_power, seed, max_qubits);
        } else if (res->parsed()) {
            if (!problem && flights_opt->count() == 0) {
                throw UsageError("resources needs --flights or --problem");
            }
            text = resources_json(problem ? std::nullopt : std::optional<std::uint64_t>(flights), problem);
        } else if (conv->parsed()) {
            ConvergenceConfig config;
            config.predicate = predicate.value_or(Predicate::region2());
            config.classical_budgets = parse_list(budgets_text, "--budgets");
            config.schedule = schedule_from(schedule_text);
            config.shots_per_power = shots_per_power;
            config.seeds = seeds;
            config.base_seed = seed;
            config.max_qubits = max_qubits;
            text = convergence_csv(*problem, config, err);
        } else if (dump->parsed()) {
            auto tc = build_transport_circuit(*problem);
            text = dump_circuit(tc.circuit);
        }
        emit(text, out_path, out);
        return kOk;
    } catch (const ProblemParseError &e) {
        err << "error: " << e.what() << "\n";
        return kParse;
    } catch (const InvariantViolation &e) {
        err << "error: " << e.what() << "\n";
        return kInvariant;
    } catch (const CapacityExceeded &e) {
        err << "error: " << e.what() << "\n";
        return kCapacity;
    } catch (const PredicateError &e) {
        err << "error: " << e.what() << "\n";
        return kPredicate;
    } catch (const std::exception &e) {
        err << "error: " << e.what() << "\n";
        return kUsage;
    }
}

}  // namespace qtransport::cli
