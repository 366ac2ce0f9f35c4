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

#include "graphforge/mbqc/pattern.h"

#include <algorithm>
#include <cmath>
#include <queue>
#include <stdexcept>

namespace graphforge::mbqc {

namespace {

constexpr size_t kUnmeasured = static_cast<size_t>(-1);

bool is_flow_step(const Step &s) {
    return s.basis == Basis::XY || s.basis == Basis::X || (s.basis == Basis::Y && s.flow);
}

double flow_angle(const Step &s) {
    if (s.basis == Basis::X) {
        return 0;
    }
    if (s.basis == Basis::Y) {
        return M_PI / 2;
    }
    return s.angle;
}

std::vector<size_t> to_list(const std::vector<uint8_t> &bits) {
    std::vector<size_t> out;
    for (size_t k = 0; k < bits.size(); k++) {
        if (bits[k]) {
            out.push_back(k);
        }
    }
    return out;
}

int parity(const std::vector<size_t> &deps, const std::vector<int> &s) {
    int p = 0;
    for (size_t d : deps) {
        p ^= s[d];
    }
    return p;
}

std::string structural_problem(const MeasurementPattern &p) {
    size_t n = p.graph.num_vertices();
    if (p.graph.has_vertex_ops()) {
        return "pattern graphs carry no vertex ops";
    }
    std::vector<int> role(n, 0);  // bit 1 measured, bit 2 output, bit 4 input
    for (size_t v : p.inputs) {
        if (v >= n) {
            return "input vertex out of range";
        }
        if (role[v] & 4) {
            return "input vertex listed twice";
        }
        role[v] |= 4;
    }
    for (size_t v : p.outputs) {
        if (v >= n) {
            return "output vertex out of range";
        }
        if (role[v] & 2) {
            return "output vertex listed twice";
        }
        role[v] |= 2;
    }
    std::vector<int> flow_used(n, 0);
    for (const auto &s : p.steps) {
        if (s.vertex >= n) {
            return "measured vertex out of range";
        }
        if (role[s.vertex] & 1) {
            return "vertex " + std::to_string(s.vertex) + " measured twice";
        }
        if (role[s.vertex] & 2) {
            return "output vertex " + std::to_string(s.vertex) + " is measured";
        }
        role[s.vertex] |= 1;
        if (is_flow_step(s)) {
            if (!s.flow) {
                return "X/XY step on vertex " + std::to_string(s.vertex) + " has no flow successor";
            }
            size_t f = *s.flow;
            if (f >= n || !p.graph.has_edge(s.vertex, f)) {
                return "flow successor of " + std::to_string(s.vertex) + " is not a neighbour";
            }
            if (role[f] & 4) {
                return "flow successor " + std::to_string(f) + " is an input";
            }
            if (flow_used[f]++) {
                return "flow successor " + std::to_string(f) + " used twice";
            }
        } else if (s.flow) {
            return "Z steps take no flow successor";
        }
    }
    for (size_t v = 0; v < n; v++) {
        if (!(role[v] & 3)) {
            return "vertex " + std::to_string(v) + " is neither measured nor an output";
        }
    }
    return "";
}

}  // namespace

void finalize_pattern(MeasurementPattern &p) {
    std::string problem = structural_problem(p);
    if (!problem.empty()) {
        throw std::invalid_argument("malformed pattern: " + problem);
    }
    size_t n = p.graph.num_vertices();
    size_t m = p.steps.size();
    std::vector<size_t> step_of(n, kUnmeasured);
    for (size_t k = 0; k < m; k++) {
        step_of[p.steps[k].vertex] = k;
    }

    // before[i] lists steps that must come after step i.
    std::vector<std::vector<size_t>> after(m);
    std::vector<size_t> indegree(m, 0);
    auto constrain = [&](size_t first, size_t second) {
        after[first].push_back(second);
        indegree[second]++;
    };
    for (size_t k = 0; k < m; k++) {
        const Step &s = p.steps[k];
        if (is_flow_step(s)) {
            size_t f = *s.flow;
            if (step_of[f] != kUnmeasured) {
                constrain(k, step_of[f]);
            }
            for (size_t u : p.graph.neighbors(f)) {
                if (u != s.vertex && step_of[u] != kUnmeasured) {
                    constrain(k, step_of[u]);
                }
            }
        } else {
            for (size_t u : p.graph.neighbors(s.vertex)) {
                if (step_of[u] != kUnmeasured) {
                    constrain(k, step_of[u]);
                }
            }
        }
    }
    std::priority_queue<size_t, std::vector<size_t>, std::greater<>> ready;
    for (size_t k = 0; k < m; k++) {
        if (indegree[k] == 0) {
            ready.push(k);
        }
    }
    std::vector<size_t> order;
    while (!ready.empty()) {
        size_t k = ready.top();
        ready.pop();
        order.push_back(k);
        for (size_t j : after[k]) {
            if (--indegree[j] == 0) {
                ready.push(j);
            }
        }
    }
    if (order.size() != m) {
        throw std::invalid_argument("measurement order constraints are cyclic");
    }
    std::vector<Step> sorted;
    for (size_t k : order) {
        sorted.push_back(p.steps[k]);
    }
    p.steps = std::move(sorted);

    // Symbolic Pauli frame: bit k set means "flipped by effective outcome k".
    std::vector<std::vector<uint8_t>> fx(n, std::vector<uint8_t>(m, 0));
    std::vector<std::vector<uint8_t>> fz(n, std::vector<uint8_t>(m, 0));
    for (size_t k = 0; k < m; k++) {
        Step &s = p.steps[k];
        size_t v = s.vertex;
        s.x_deps = to_list(fx[v]);
        s.z_deps = s.basis == Basis::Z ? std::vector<size_t>{} : to_list(fz[v]);
        if (is_flow_step(s)) {
            size_t f = *s.flow;
            fx[f][k] ^= 1;
            for (size_t u : p.graph.neighbors(f)) {
                if (u != v) {
                    fz[u][k] ^= 1;
                }
            }
        } else {
            for (size_t u : p.graph.neighbors(v)) {
                fz[u][k] ^= 1;
            }
        }
    }
    p.output_x_deps.clear();
    p.output_z_deps.clear();
    for (size_t o : p.outputs) {
        p.output_x_deps.push_back(to_list(fx[o]));
        p.output_z_deps.push_back(to_list(fz[o]));
    }
}

std::string validate_pattern(const MeasurementPattern &p) {
    std::string problem = structural_problem(p);
    if (!problem.empty()) {
        return problem;
    }
    for (size_t k = 0; k < p.steps.size(); k++) {
        for (const auto *deps : {&p.steps[k].x_deps, &p.steps[k].z_deps}) {
            for (size_t d : *deps) {
                if (d >= k) {
                    return "step " + std::to_string(k) + " depends on a later step";
                }
            }
        }
    }
    if (p.output_x_deps.size() != p.outputs.size() || p.output_z_deps.size() != p.outputs.size()) {
        return "output frame dependencies missing";
    }
    return "";
}

double adapted_angle(double alpha, int px, int pz) {
    return (px ? -alpha : alpha) + (pz ? M_PI : 0);
}

RunResult run_pattern(const MeasurementPattern &p, const StateVector &input, Rng &rng,
                      const std::optional<std::vector<int>> &forced) {
    std::string problem = validate_pattern(p);
    if (!problem.empty()) {
        throw std::invalid_argument("malformed pattern: " + problem);
    }
    size_t n = p.graph.num_vertices();
    if (n > oracle::kMaxQubits) {
        throw std::invalid_argument("pattern has more than " + std::to_string(oracle::kMaxQubits) + " vertices");
    }
    if (input.num_sites() != p.inputs.size()) {
        throw std::invalid_argument("input state size does not match the pattern inputs");
    }
    for (size_t d : input.dims()) {
        if (d != 2) {
            throw std::invalid_argument("pattern inputs must be qubits");
        }
    }
    if (forced && forced->size() != p.steps.size()) {
        throw std::invalid_argument("forced outcome list has the wrong length");
    }

    // Input amplitudes on the input vertices, |+> elsewhere, CZ on every edge.
    size_t k_in = p.inputs.size();
    auto edges = p.graph.edges();
    oracle::Vector amps(size_t{1} << n);
    const oracle::Vector in_amps = input.amplitudes() / input.norm();
    double scale = std::pow(2.0, -0.5 * static_cast<double>(n - k_in));
    for (uint64_t i = 0; i < (uint64_t{1} << n); i++) {
        auto bit = [&](size_t v) { return (i >> (n - 1 - v)) & 1; };
        uint64_t in_index = 0;
        for (size_t v : p.inputs) {
            in_index = (in_index << 1) | bit(v);
        }
        int sign = 0;
        for (auto [a, b] : edges) {
            sign ^= bit(a) & bit(b);
        }
        amps[i] = in_amps[in_index] * (sign ? -scale : scale);
    }
    StateVector state = StateVector::from_amplitudes(std::vector<size_t>(n, 2), std::move(amps));

    std::vector<size_t> alive(n);
    for (size_t v = 0; v < n; v++) {
        alive[v] = v;
    }
    RunResult r{StateVector(), StateVector(), {}, {}, {}};
    std::vector<int> &s = r.effective_outcomes;
    for (size_t k = 0; k < p.steps.size(); k++) {
        const Step &st = p.steps[k];
        size_t site = std::find(alive.begin(), alive.end(), st.vertex) - alive.begin();
        int px = parity(st.x_deps, s);
        int pz = parity(st.z_deps, s);
        Matrix basis;
        if (is_flow_step(st)) {
            double a = adapted_angle(flow_angle(st), px, pz);
            basis = Matrix(2, 2);
            double rt = 1 / std::sqrt(2.0);
            basis << rt, rt, std::polar(rt, a), -std::polar(rt, a);
        } else {
            basis = oracle::gates::eigenbasis(st.basis == Basis::Z ? 'Z' : 'Y');
        }
        int raw;
        if (forced) {
            raw = (*forced)[k];
        } else {
            auto probs = state.basis_probabilities(site, basis);
            raw = rng.uniform() < probs[0] ? 0 : 1;
        }
        state.project_out(site, basis, raw);
        alive.erase(alive.begin() + site);
        r.raw_outcomes.push_back(raw);
        int eff = raw;
        if (st.basis == Basis::Z) {
            eff ^= px;
        } else if (!is_flow_step(st)) {
            eff ^= px ^ pz;
        }
        s.push_back(eff);
    }

    std::vector<size_t> order;
    for (size_t o : p.outputs) {
        order.push_back(std::find(alive.begin(), alive.end(), o) - alive.begin());
    }
    r.raw_output = state.permuted(order);
    r.corrected_output = r.raw_output;
    for (size_t j = 0; j < p.outputs.size(); j++) {
        r.frame.x.push_back(static_cast<uint8_t>(parity(p.output_x_deps[j], s)));
        r.frame.z.push_back(static_cast<uint8_t>(parity(p.output_z_deps[j], s)));
        if (r.frame.x[j]) {
            r.corrected_output.apply_unitary(oracle::gates::x(), {j});
        }
        if (r.frame.z[j]) {
            r.corrected_output.apply_unitary(oracle::gates::z(), {j});
        }
    }
    return r;
}

double target_fidelity(const MeasurementPattern &p, const StateVector &input, const RunResult &r) {
    if (!p.target) {
        throw std::invalid_argument("pattern has no target unitary");
    }
    oracle::Vector expect = *p.target * input.amplitudes();
    return oracle::fidelity(r.corrected_output,
                            StateVector::from_amplitudes(std::vector<size_t>(p.outputs.size(), 2), expect));
}

namespace {

const char *basis_name(Basis b) {
    switch (b) {
        case Basis::X:
            return "X";
        case Basis::Y:
            return "Y";
        case Basis::Z:
            return "Z";
        default:
            return "XY";
    }
}

Basis basis_from_name(const std::string &s) {
    if (s == "X") {
        return Basis::X;
    }
    if (s == "Y") {
        return Basis::Y;
    }
    if (s == "Z") {
        return Basis::Z;
    }
    if (s == "XY") {
        return Basis::XY;
    }
    throw std::invalid_argument("pattern: unknown basis '" + s + "'");
}

}  // namespace

nlohmann::json pattern_to_json(const MeasurementPattern &p) {
    nlohmann::json steps = nlohmann::json::array();
    for (const auto &s : p.steps) {
        nlohmann::json js = {{"vertex", s.vertex}, {"basis", basis_name(s.basis)}};
        if (s.basis == Basis::XY) {
            js["angle"] = s.angle;
        }
        if (s.flow) {
            js["flow"] = *s.flow;
        }
        js["x_deps"] = s.x_deps;
        js["z_deps"] = s.z_deps;
        steps.push_back(js);
    }
    nlohmann::json out = {{"graph", graph::graph_to_json(p.graph)},
                          {"inputs", p.inputs},
                          {"outputs", p.outputs},
                          {"steps", steps},
                          {"output_frame", {{"x", p.output_x_deps}, {"z", p.output_z_deps}}}};
    if (p.target) {
        nlohmann::json rows = nlohmann::json::array();
        for (Eigen::Index i = 0; i < p.target->rows(); i++) {
            nlohmann::json row = nlohmann::json::array();
            for (Eigen::Index j = 0; j < p.target->cols(); j++) {
                row.push_back({(*p.target)(i, j).real(), (*p.target)(i, j).imag()});
            }
            rows.push_back(row);
        }
        out["target"] = rows;
    }
    return out;
}

MeasurementPattern pattern_from_json(const nlohmann::json &j) {
    if (!j.is_object() || !j.contains("graph") || !j.contains("inputs") || !j.contains("outputs") ||
        !j.contains("steps")) {
        throw std::invalid_argument("pattern: need graph, inputs, outputs and steps");
    }
    MeasurementPattern p;
    p.graph = graph::graph_from_json(j["graph"]);
    try {
        p.inputs = j["inputs"].get<std::vector<size_t>>();
        p.outputs = j["outputs"].get<std::vector<size_t>>();
    } catch (const nlohmann::json::exception &) {
        throw std::invalid_argument("pattern: inputs and outputs must be vertex lists");
    }
    bool has_deps = true;
    for (size_t k = 0; k < j["steps"].size(); k++) {
        const auto &js = j["steps"][k];
        std::string where = "pattern: steps[" + std::to_string(k) + "]";
        if (!js.contains("vertex") || !js.contains("basis") || !js["basis"].is_string()) {
            throw std::invalid_argument(where + " needs vertex and basis");
        }
        Step s{js["vertex"].get<size_t>(), basis_from_name(js["basis"].get<std::string>())};
        if (s.basis == Basis::XY) {
            if (!js.contains("angle") || !js["angle"].is_number()) {
                throw std::invalid_argument(where + ": XY steps need a numeric angle");
            }
            s.angle = js["angle"].get<double>();
        }
        if (js.contains("flow")) {
            s.flow = js["flow"].get<size_t>();
        }
        if (js.contains("x_deps") && js.contains("z_deps")) {
            s.x_deps = js["x_deps"].get<std::vector<size_t>>();
            s.z_deps = js["z_deps"].get<std::vector<size_t>>();
        } else {
            has_deps = false;
        }
        p.steps.push_back(s);
    }
    if (has_deps && j.contains("output_frame")) {
        p.output_x_deps = j["output_frame"]["x"].get<std::vector<std::vector<size_t>>>();
        p.output_z_deps = j["output_frame"]["z"].get<std::vector<std::vector<size_t>>>();
    } else {
        finalize_pattern(p);
    }
    if (j.contains("target")) {
        const auto &rows = j["target"];
        Matrix t(rows.size(), rows.size());
        for (size_t a = 0; a < rows.size(); a++) {
            if (rows[a].size() != rows.size()) {
                throw std::invalid_argument("pattern: target must be square");
            }
            for (size_t b = 0; b < rows.size(); b++) {
                t(a, b) = oracle::Complex(rows[a][b][0].get<double>(), rows[a][b][1].get<double>());
            }
        }
        p.target = t;
    }
    std::string problem = validate_pattern(p);
    if (!problem.empty()) {
        throw std::invalid_argument("pattern: " + problem);
    }
    return p;
}

}  // namespace graphforge::mbqc
