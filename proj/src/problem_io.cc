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

#include "qtransport/problem_io.h"

#include <fstream>
#include <set>
#include <sstream>

#include "qtransport/errors.h"

namespace qtransport {

namespace {

using nlohmann::json;

void reject_unknown_keys(const json &obj, const std::set<std::string> &allowed, const std::string &where) {
    for (const auto &[key, value] : obj.items()) {
        if (!allowed.contains(key)) {
            throw ProblemParseError("unknown field '" + key + "' in " + where);
        }
    }
}

const json &required(const json &obj, const char *key, const std::string &where) {
    auto it = obj.find(key);
    if (it == obj.end()) {
        throw ProblemParseError("missing field '" + std::string(key) + "' in " + where);
    }
    return *it;
}

std::uint64_t as_count(const json &v, const char *key) {
    if (!v.is_number_integer() || (!v.is_number_unsigned() && v.get<std::int64_t>() < 0)) {
        throw ProblemParseError("field '" + std::string(key) + "' must be a nonnegative integer");
    }
    return v.get<std::uint64_t>();
}

double as_real(const json &v, const std::string &what) {
    if (!v.is_number()) {
        throw ProblemParseError(what + " must be a number");
    }
    return v.get<double>();
}

RegionSpec parse_region(const json &obj, std::size_t index) {
    const std::string where = "regions[" + std::to_string(index) + "]";
    if (!obj.is_object()) {
        throw ProblemParseError(where + " must be an object");
    }
    reject_unknown_keys(obj, {"distance_pmf", "p_absorb"}, where);
    RegionSpec r;
    const json &pmf = required(obj, "distance_pmf", where);
    if (!pmf.is_array()) {
        throw ProblemParseError(where + ".distance_pmf must be an array");
    }
    for (const auto &p : pmf) {
        r.distance_pmf.push_back(as_real(p, where + ".distance_pmf entries"));
    }
    r.p_absorb = as_real(required(obj, "p_absorb", where), where + ".p_absorb");
    return r;
}

}  // namespace

TransportProblem parse_problem(std::string_view json_text) {
    json doc;
    try {
        doc = json::parse(json_text);
    } catch (const json::parse_error &e) {
        throw ProblemParseError(std::string("malformed JSON: ") + e.what());
    }
    if (!doc.is_object()) {
        throw ProblemParseError("problem must be a JSON object");
    }
    reject_unknown_keys(doc,
                        {"x_qubits", "max_flights", "boundary", "regions", "first_flight_always", "reaction_timing"},
                        "problem");
    TransportProblem p;
    p.x_qubits = as_count(required(doc, "x_qubits", "problem"), "x_qubits");
    p.max_flights = as_count(required(doc, "max_flights", "problem"), "max_flights");
    p.boundary = as_count(required(doc, "boundary", "problem"), "boundary");
    const json &regions = required(doc, "regions", "problem");
    if (!regions.is_array() || regions.size() != 2) {
        throw ProblemParseError("'regions' must be an array of exactly two regions");
    }
    p.regions[0] = parse_region(regions[0], 0);
    p.regions[1] = parse_region(regions[1], 1);
    if (auto it = doc.find("first_flight_always"); it != doc.end()) {
        if (!it->is_boolean()) {
            throw ProblemParseError("'first_flight_always' must be a boolean");
        }
        p.first_flight_always = it->get<bool>();
    }
    if (auto it = doc.find("reaction_timing"); it != doc.end()) {
        if (*it == "pre_flight") {
            p.reaction_timing = ReactionTiming::PreFlight;
        } else if (*it == "post_flight") {
            p.reaction_timing = ReactionTiming::PostFlight;
        } else {
            throw ProblemParseError("'reaction_timing' must be \"pre_flight\" or \"post_flight\"");
        }
    }
    p.validate();
    return p;
}

TransportProblem load_problem(const std::string &path) {
    std::ifstream in(path);
    if (!in) {
        throw ProblemParseError("cannot read problem file '" + path + "'");
    }
    std::ostringstream buf;
    buf << in.rdbuf();
    return parse_problem(buf.str());
}

nlohmann::ordered_json problem_to_json(const TransportProblem &p) {
    nlohmann::ordered_json out;
    out["x_qubits"] = p.x_qubits;
    out["max_flights"] = p.max_flights;
    out["boundary"] = p.boundary;
    out["regions"] = nlohmann::ordered_json::array();
    for (const auto &r : p.regions) {
        out["regions"].push_back({{"distance_pmf", r.distance_pmf}, {"p_absorb", r.p_absorb}});
    }
    out["first_flight_always"] = p.first_flight_always;
    out["reaction_timing"] = p.reaction_timing == ReactionTiming::PreFlight ? "pre_flight" : "post_flight";
    return out;
}

}  // namespace qtransport
