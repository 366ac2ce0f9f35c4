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

#include "graphforge/mbqc/compile.h"

#include <algorithm>
#include <cmath>
#include <stdexcept>

#include <unsupported/Eigen/KroneckerProduct>

namespace graphforge::mbqc {

using oracle::Complex;

const char *const kBridgeCorrectionWord = "P";

namespace {

constexpr double kPhaseTol = 1e-9;

/// True when a = e^{i phi} b for some phi.
bool equal_up_to_phase(const Matrix &a, const Matrix &b) {
    Complex overlap = (b.adjoint() * a).trace();
    double n = static_cast<double>(a.rows());
    return std::abs(std::abs(overlap) - n) < kPhaseTol * n && (a - b * (overlap / n)).norm() < 1e-7;
}

Matrix embed(const Matrix &u, size_t wire, size_t wires) {
    Matrix out = Matrix::Identity(1, 1);
    for (size_t w = 0; w < wires; w++) {
        out = Eigen::kroneckerProduct(out, w == wire ? u : Matrix::Identity(2, 2)).eval();
    }
    return out;
}

Matrix cz_between(size_t a, size_t b, size_t wires) {
    size_t dim = size_t{1} << wires;
    Matrix out = Matrix::Identity(dim, dim);
    for (size_t i = 0; i < dim; i++) {
        if (((i >> (wires - 1 - a)) & 1) && ((i >> (wires - 1 - b)) & 1)) {
            out(i, i) = -1;
        }
    }
    return out;
}

Step flow_step(size_t v, double alpha, size_t f) {
    Step s{v, Basis::XY};
    s.angle = alpha;
    s.flow = f;
    return s;
}

}  // namespace

Matrix j_gate(double theta) {
    return oracle::gates::h() * oracle::gates::rz(theta);
}

EulerAngles euler_angles(const Matrix &u) {
    if (u.rows() != 2 || u.cols() != 2) {
        throw std::invalid_argument("euler_angles: need a 2x2 matrix");
    }
    if ((u.adjoint() * u - Matrix::Identity(2, 2)).norm() > 1e-8) {
        throw std::invalid_argument("euler_angles: matrix is not unitary");
    }
    double gamma = std::arg(u.determinant()) / 2;
    Matrix v = u * std::polar(1.0, -gamma);
    double c = std::abs(v(0, 0));
    double s = std::abs(v(1, 0));
    EulerAngles e{0, std::atan2(s, c), 0};
    if (c < 1e-12) {
        e.theta = std::arg(v(1, 0)) - M_PI / 2;
    } else if (s < 1e-12) {
        e.theta = std::arg(v(0, 0));
    } else {
        double sum = std::arg(v(0, 0));
        double diff = std::arg(v(1, 0)) - M_PI / 2;
        e.theta = (sum + diff) / 2;
        e.xi = (sum - diff) / 2;
    }
    return e;
}

MeasurementPattern chain_pattern(const std::vector<double> &thetas) {
    size_t m = thetas.size();
    MeasurementPattern p;
    p.graph = graph::Graph::path(m + 1);
    p.inputs = {0};
    p.outputs = {m};
    Matrix target = Matrix::Identity(2, 2);
    for (size_t i = 0; i < m; i++) {
        p.steps.push_back(flow_step(i, 2 * thetas[i], i + 1));
        target = j_gate(thetas[i]) * target;
    }
    p.target = target;
    finalize_pattern(p);
    return p;
}

MeasurementPattern pattern_for_single_qubit_unitary(const Matrix &u) {
    MeasurementPattern p;
    if (equal_up_to_phase(u, oracle::gates::h())) {
        p = chain_pattern({0});
    } else if (equal_up_to_phase(u, Matrix::Identity(2, 2))) {
        p = chain_pattern({0, 0});
    } else {
        EulerAngles e = euler_angles(u);
        p = chain_pattern({e.theta, e.zeta, e.xi, 0});
    }
    p.target = u;
    return p;
}

MeasurementPattern entangling_pattern(EntanglingMode mode) {
    MeasurementPattern p;
    if (mode == EntanglingMode::DirectEdge) {
        p.graph = graph::Graph::from_edges(4, {{0, 1}, {2, 3}, {1, 3}});
        p.inputs = {0, 2};
        p.outputs = {1, 3};
        p.steps = {flow_step(0, 0, 1), flow_step(2, 0, 3)};
        p.target = oracle::gates::cz() * embed(oracle::gates::h(), 0, 2) * embed(oracle::gates::h(), 1, 2);
    } else {
        p.graph = graph::Graph::from_edges(7, {{0, 1}, {1, 2}, {3, 4}, {4, 5}, {6, 2}, {6, 5}});
        p.inputs = {0, 3};
        p.outputs = {2, 5};
        p.steps = {flow_step(0, 0, 1), flow_step(1, 0, 2), flow_step(3, 0, 4), flow_step(4, 0, 5)};
        if (mode == EntanglingMode::IntermediateY) {
            p.steps.push_back(Step{6, Basis::Y});
            Matrix s = oracle::gates::local_clifford(graph::LocalClifford::from_word(kBridgeCorrectionWord));
            p.target = embed(s, 0, 2) * embed(s, 1, 2) * oracle::gates::cz();
        } else {
            p.steps.push_back(Step{6, Basis::Z});
            p.target = Matrix::Identity(4, 4);
        }
    }
    finalize_pattern(p);
    return p;
}

Matrix logical_unitary(const LogicalCircuit &c) {
    size_t dim = size_t{1} << c.wires;
    Matrix u = Matrix::Identity(dim, dim);
    Matrix s = oracle::gates::local_clifford(graph::LocalClifford::from_word(kBridgeCorrectionWord));
    for (const auto &g : c.gates) {
        switch (g.kind) {
            case LogicalGate::Kind::J:
                u = embed(j_gate(g.theta), g.wire, c.wires) * u;
                break;
            case LogicalGate::Kind::CZ:
                u = cz_between(g.wire, g.other, c.wires) * u;
                break;
            case LogicalGate::Kind::BridgeCZ:
                u = embed(s, g.wire, c.wires) * embed(s, g.other, c.wires) * cz_between(g.wire, g.other, c.wires) * u;
                break;
        }
    }
    return u;
}

LogicalCircuit circuit_from_json(const nlohmann::json &j, size_t wires) {
    if (!j.is_array()) {
        throw std::invalid_argument("circuit: expected an array of gates");
    }
    LogicalCircuit c{wires, {}};
    for (size_t k = 0; k < j.size(); k++) {
        const auto &g = j[k];
        std::string where = "circuit[" + std::to_string(k) + "]";
        auto wire_ok = [&](const nlohmann::json &w) {
            if (!w.is_number_unsigned() || w.get<size_t>() >= wires) {
                throw std::invalid_argument(where + ": wire out of range");
            }
            return w.get<size_t>();
        };
        if (g.contains("J")) {
            if (!g["J"].is_number() || !g.contains("wire")) {
                throw std::invalid_argument(where + ": J needs a numeric angle and a wire");
            }
            c.gates.push_back({LogicalGate::Kind::J, wire_ok(g["wire"]), 0, g["J"].get<double>()});
        } else if (g.contains("CZ")) {
            if (!g["CZ"].is_array() || g["CZ"].size() != 2) {
                throw std::invalid_argument(where + ": CZ needs two wires");
            }
            size_t a = wire_ok(g["CZ"][0]);
            size_t b = wire_ok(g["CZ"][1]);
            if (a == b) {
                throw std::invalid_argument(where + ": CZ wires must differ");
            }
            bool bridge = g.value("bridge", false);
            c.gates.push_back({bridge ? LogicalGate::Kind::BridgeCZ : LogicalGate::Kind::CZ, a, b, 0});
        } else {
            throw std::invalid_argument(where + ": unknown gate");
        }
    }
    return c;
}

nlohmann::json circuit_to_json(const LogicalCircuit &c) {
    nlohmann::json out = nlohmann::json::array();
    for (const auto &g : c.gates) {
        if (g.kind == LogicalGate::Kind::J) {
            out.push_back({{"J", g.theta}, {"wire", g.wire}});
        } else {
            nlohmann::json jg = {{"CZ", {g.wire, g.other}}};
            if (g.kind == LogicalGate::Kind::BridgeCZ) {
                jg["bridge"] = true;
            }
            out.push_back(jg);
        }
    }
    return out;
}

MeasurementPattern compile_circuit(const LogicalCircuit &c, CompileOptions options) {
    if (c.wires == 0 || c.wires > 3) {
        throw std::invalid_argument("compile_circuit: supports 1 to 3 wires");
    }
    std::vector<std::pair<size_t, size_t>> edges;
    std::vector<Step> steps;
    std::vector<size_t> head(c.wires);
    size_t n = 0;
    for (size_t w = 0; w < c.wires; w++) {
        head[w] = n++;
    }
    std::vector<size_t> inputs = head;
    // Spacer neighbour pairs, recorded against the heads at the time.
    std::vector<std::pair<size_t, size_t>> spacers;
    auto toggle = [&](size_t a, size_t b) {
        auto e = std::minmax(a, b);
        auto it = std::find(edges.begin(), edges.end(), std::pair<size_t, size_t>(e.first, e.second));
        if (it == edges.end()) {
            edges.emplace_back(e.first, e.second);
        } else {
            edges.erase(it);
        }
    };
    for (const auto &g : c.gates) {
        if (g.wire >= c.wires || (g.kind != LogicalGate::Kind::J && (g.other >= c.wires || g.other == g.wire))) {
            throw std::invalid_argument("compile_circuit: bad wire index");
        }
        switch (g.kind) {
            case LogicalGate::Kind::J: {
                size_t v = n++;
                toggle(head[g.wire], v);
                steps.push_back(flow_step(head[g.wire], 2 * g.theta, v));
                if (options.pad && c.wires > 1) {
                    size_t nb = g.wire + 1 < c.wires ? g.wire + 1 : g.wire - 1;
                    spacers.emplace_back(head[g.wire], head[nb]);
                }
                head[g.wire] = v;
                break;
            }
            case LogicalGate::Kind::CZ:
                toggle(head[g.wire], head[g.other]);
                break;
            case LogicalGate::Kind::BridgeCZ: {
                size_t b = n++;
                toggle(b, head[g.wire]);
                toggle(b, head[g.other]);
                steps.push_back(Step{b, Basis::Y});
                break;
            }
        }
    }
    std::vector<Step> spacer_steps;
    for (auto [a, b] : spacers) {
        size_t s = n++;
        toggle(s, a);
        toggle(s, b);
        spacer_steps.push_back(Step{s, Basis::Z});
    }
    if (n > oracle::kMaxQubits) {
        throw std::invalid_argument("compile_circuit: pattern needs " + std::to_string(n) + " vertices, limit is " +
                                    std::to_string(oracle::kMaxQubits));
    }
    MeasurementPattern p;
    p.graph = graph::Graph::from_edges(n, edges);
    p.inputs = inputs;
    p.outputs = head;
    p.steps = spacer_steps;
    p.steps.insert(p.steps.end(), steps.begin(), steps.end());
    p.target = logical_unitary(c);
    finalize_pattern(p);
    return p;
}

std::vector<size_t> spacer_vertices(const MeasurementPattern &p) {
    std::vector<size_t> out;
    for (const auto &s : p.steps) {
        if (s.basis == Basis::Z) {
            out.push_back(s.vertex);
        }
    }
    std::sort(out.begin(), out.end());
    return out;
}

MeasurementPattern strip_z_sites(const MeasurementPattern &p) {
    std::vector<size_t> zs = spacer_vertices(p);
    std::vector<graph::PauliMeasurementSpec> specs;
    for (size_t v : zs) {
        specs.push_back({v, 'Z', +1});
    }
    size_t n = p.graph.num_vertices();
    std::vector<size_t> remap(n);
    size_t next = 0;
    for (size_t v = 0; v < n; v++) {
        remap[v] = std::binary_search(zs.begin(), zs.end(), v) ? n : next++;
    }
    MeasurementPattern out;
    out.graph = graph::reduce_clifford_part(p.graph, specs);
    for (size_t v : p.inputs) {
        if (remap[v] == n) {
            throw std::invalid_argument("strip_z_sites: an input is Z-measured");
        }
        out.inputs.push_back(remap[v]);
    }
    for (size_t v : p.outputs) {
        out.outputs.push_back(remap[v]);
    }
    for (const auto &s : p.steps) {
        if (s.basis == Basis::Z) {
            continue;
        }
        Step t{remap[s.vertex], s.basis, s.angle};
        if (s.flow) {
            t.flow = remap[*s.flow];
        }
        out.steps.push_back(t);
    }
    out.target = p.target;
    finalize_pattern(out);
    return out;
}

}  // namespace graphforge::mbqc
