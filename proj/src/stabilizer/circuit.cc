// Copyright 2026 The Graphforge Authors
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

#include "graphforge/stabilizer/circuit.h"

#include <stdexcept>

namespace graphforge::stabilizer {

namespace {

size_t arity(const std::string &gate) {
    if (gate == "CZ") {
        return 2;
    }
    if (gate == "H" || gate == "P" || gate == "MX" || gate == "MY" || gate == "MZ") {
        return 1;
    }
    throw std::invalid_argument("unknown gate '" + gate + "'");
}

}  // namespace

Circuit circuit_from_json(const nlohmann::json &j) {
    if (!j.is_array()) {
        throw std::invalid_argument("circuit must be a JSON array");
    }
    Circuit c;
    for (size_t k = 0; k < j.size(); k++) {
        const auto &e = j[k];
        std::string where = "instruction " + std::to_string(k) + ": ";
        if (!e.is_object() || !e.contains("gate") || !e.contains("targets")) {
            throw std::invalid_argument(where + "expected {\"gate\": ..., \"targets\": [...]}");
        }
        if (!e["gate"].is_string() || !e["targets"].is_array()) {
            throw std::invalid_argument(where + "bad field types");
        }
        Instruction ins;
        ins.gate = e["gate"].get<std::string>();
        size_t want;
        try {
            want = arity(ins.gate);
        } catch (const std::invalid_argument &ex) {
            throw std::invalid_argument(where + ex.what());
        }
        for (const auto &t : e["targets"]) {
            if (!t.is_number_unsigned() && !(t.is_number_integer() && t.get<int64_t>() >= 0)) {
                throw std::invalid_argument(where + "targets must be non-negative integers");
            }
            ins.targets.push_back(t.get<size_t>());
        }
        if (ins.targets.size() != want) {
            throw std::invalid_argument(where + ins.gate + " takes " + std::to_string(want) + " target(s)");
        }
        c.push_back(std::move(ins));
    }
    return c;
}

nlohmann::json circuit_to_json(const Circuit &c) {
    nlohmann::json out = nlohmann::json::array();
    for (const auto &ins : c) {
        out.push_back({{"gate", ins.gate}, {"targets", ins.targets}});
    }
    return out;
}

std::vector<int> run_clifford_circuit(Tableau &t, const Circuit &c, Rng &rng) {
    std::vector<int> outcomes;
    size_t n = t.num_qubits();
    for (const auto &ins : c) {
        const std::string &g = ins.gate;
        if (ins.targets.size() != arity(g)) {
            throw std::invalid_argument(g + " has the wrong number of targets");
        }
        if (g == "H") {
            t.apply_h(ins.targets[0]);
        } else if (g == "P") {
            t.apply_p(ins.targets[0]);
        } else if (g == "CZ") {
            t.apply_cz(ins.targets[0], ins.targets[1]);
        } else {
            size_t q = ins.targets[0];
            if (q >= n) {
                throw std::out_of_range("measurement target out of range");
            }
            PauliString obs = PauliString::single(n, q, g[1]);
            outcomes.push_back(t.measure(obs, rng).outcome);
        }
    }
    return outcomes;
}

nlohmann::json tableau_to_json(const Tableau &t) {
    nlohmann::json gens = nlohmann::json::array();
    for (const auto &g : t.generators()) {
        gens.push_back(g.str());
    }
    return {{"n", t.num_qubits()}, {"generators", gens}};
}

Tableau tableau_from_json(const nlohmann::json &j) {
    if (!j.is_object() || !j.contains("generators") || !j["generators"].is_array()) {
        throw std::invalid_argument("tableau JSON needs a \"generators\" array");
    }
    std::vector<std::string> gens;
    for (const auto &g : j["generators"]) {
        if (!g.is_string()) {
            throw std::invalid_argument("generators must be strings");
        }
        gens.push_back(g.get<std::string>());
    }
    Tableau t = Tableau::from_generators(gens);
    if (j.contains("n") && j["n"].get<size_t>() != t.num_qubits()) {
        throw std::invalid_argument("\"n\" does not match the generator count");
    }
    return t;
}

}  // namespace graphforge::stabilizer
