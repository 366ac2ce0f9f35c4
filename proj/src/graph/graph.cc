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

#include "graphforge/graph/graph.h"

#include <algorithm>
#include <deque>
#include <set>
#include <unordered_map>

namespace graphforge::graph {

using stabilizer::PauliString;
using stabilizer::Tableau;

Graph::Graph(size_t n) : n_(n), adj_(n * n, 0), ops_(n) {
}

void Graph::check_vertex(size_t v) const {
    if (v >= n_) {
        throw std::out_of_range("vertex " + std::to_string(v) + " out of range for " + std::to_string(n_) + " vertices");
    }
}

size_t Graph::num_edges() const {
    size_t count = 0;
    for (uint8_t e : adj_) {
        count += e;
    }
    return count / 2;
}

bool Graph::has_edge(size_t a, size_t b) const {
    check_vertex(a);
    check_vertex(b);
    return adj_[a * n_ + b];
}

void Graph::add_edge(size_t a, size_t b) {
    check_vertex(a);
    check_vertex(b);
    if (a == b) {
        throw std::invalid_argument("self-loops are not allowed");
    }
    adj_[a * n_ + b] = adj_[b * n_ + a] = 1;
}

void Graph::remove_edge(size_t a, size_t b) {
    check_vertex(a);
    check_vertex(b);
    adj_[a * n_ + b] = adj_[b * n_ + a] = 0;
}

void Graph::toggle_edge(size_t a, size_t b) {
    check_vertex(a);
    check_vertex(b);
    if (a == b) {
        throw std::invalid_argument("self-loops are not allowed");
    }
    adj_[a * n_ + b] ^= 1;
    adj_[b * n_ + a] ^= 1;
}

std::vector<size_t> Graph::neighbors(size_t v) const {
    check_vertex(v);
    std::vector<size_t> out;
    for (size_t u = 0; u < n_; u++) {
        if (adj_[v * n_ + u]) {
            out.push_back(u);
        }
    }
    return out;
}

size_t Graph::degree(size_t v) const {
    check_vertex(v);
    size_t d = 0;
    for (size_t u = 0; u < n_; u++) {
        d += adj_[v * n_ + u];
    }
    return d;
}

std::vector<std::pair<size_t, size_t>> Graph::edges() const {
    std::vector<std::pair<size_t, size_t>> out;
    for (size_t i = 0; i < n_; i++) {
        for (size_t j = i + 1; j < n_; j++) {
            if (adj_[i * n_ + j]) {
                out.emplace_back(i, j);
            }
        }
    }
    return out;
}

LocalClifford Graph::vertex_op(size_t v) const {
    check_vertex(v);
    return ops_[v];
}

void Graph::set_vertex_op(size_t v, LocalClifford c) {
    check_vertex(v);
    ops_[v] = c;
}

void Graph::push_vertex_op(size_t v, LocalClifford c) {
    check_vertex(v);
    ops_[v] = ops_[v].then(c);
}

bool Graph::has_vertex_ops() const {
    return std::any_of(ops_.begin(), ops_.end(), [](LocalClifford c) { return !c.is_identity(); });
}

Graph Graph::bare() const {
    Graph g = *this;
    std::fill(g.ops_.begin(), g.ops_.end(), LocalClifford());
    return g;
}

void Graph::remove_vertex(size_t v) {
    check_vertex(v);
    std::vector<uint8_t> adj((n_ - 1) * (n_ - 1));
    for (size_t i = 0, ni = 0; i < n_; i++) {
        if (i == v) {
            continue;
        }
        for (size_t j = 0, nj = 0; j < n_; j++) {
            if (j == v) {
                continue;
            }
            adj[ni * (n_ - 1) + nj] = adj_[i * n_ + j];
            nj++;
        }
        ni++;
    }
    adj_ = std::move(adj);
    ops_.erase(ops_.begin() + v);
    n_--;
}

size_t Graph::add_vertex() {
    std::vector<uint8_t> adj((n_ + 1) * (n_ + 1), 0);
    for (size_t i = 0; i < n_; i++) {
        for (size_t j = 0; j < n_; j++) {
            adj[i * (n_ + 1) + j] = adj_[i * n_ + j];
        }
    }
    adj_ = std::move(adj);
    ops_.emplace_back();
    return n_++;
}

std::string Graph::adjacency_key() const {
    std::string key((n_ * n_ + 7) / 8, '\0');
    for (size_t k = 0; k < adj_.size(); k++) {
        if (adj_[k]) {
            key[k >> 3] = static_cast<char>(key[k >> 3] | (1 << (k & 7)));
        }
    }
    return key;
}

Graph Graph::path(size_t n) {
    Graph g(n);
    for (size_t i = 0; i + 1 < n; i++) {
        g.add_edge(i, i + 1);
    }
    return g;
}

Graph Graph::complete(size_t n) {
    Graph g(n);
    for (size_t i = 0; i < n; i++) {
        for (size_t j = i + 1; j < n; j++) {
            g.add_edge(i, j);
        }
    }
    return g;
}

Graph Graph::from_edges(size_t n, const std::vector<std::pair<size_t, size_t>> &edges) {
    Graph g(n);
    for (auto [a, b] : edges) {
        g.add_edge(a, b);
    }
    return g;
}

nlohmann::json graph_to_json(const Graph &g) {
    nlohmann::json edges = nlohmann::json::array();
    for (auto [a, b] : g.edges()) {
        edges.push_back({a, b});
    }
    nlohmann::json ops = nlohmann::json::object();
    for (size_t v = 0; v < g.num_vertices(); v++) {
        if (!g.vertex_op(v).is_identity()) {
            ops[std::to_string(v)] = g.vertex_op(v).word();
        }
    }
    return {{"n", g.num_vertices()}, {"edges", edges}, {"vertex_ops", ops}};
}

Graph graph_from_json(const nlohmann::json &j) {
    if (!j.is_object()) {
        throw std::invalid_argument("graph: expected a JSON object");
    }
    if (!j.contains("n") || !j["n"].is_number_integer() || j["n"].get<int64_t>() < 0) {
        throw std::invalid_argument("graph: field \"n\" must be a non-negative integer");
    }
    size_t n = j["n"].get<size_t>();
    Graph g(n);
    if (j.contains("edges")) {
        const auto &edges = j["edges"];
        if (!edges.is_array()) {
            throw std::invalid_argument("graph: field \"edges\" must be an array");
        }
        for (size_t k = 0; k < edges.size(); k++) {
            const auto &e = edges[k];
            std::string where = "graph: edges[" + std::to_string(k) + "]";
            if (!e.is_array() || e.size() != 2 || !e[0].is_number_integer() || !e[1].is_number_integer()) {
                throw std::invalid_argument(where + " must be a pair of integers");
            }
            int64_t a = e[0].get<int64_t>();
            int64_t b = e[1].get<int64_t>();
            if (a < 0 || b < 0 || static_cast<size_t>(a) >= n || static_cast<size_t>(b) >= n) {
                throw std::invalid_argument(where + " references a vertex outside 0..n-1");
            }
            if (a == b) {
                throw std::invalid_argument(where + " is a self-loop");
            }
            g.add_edge(a, b);
        }
    }
    if (j.contains("vertex_ops")) {
        const auto &ops = j["vertex_ops"];
        if (!ops.is_object()) {
            throw std::invalid_argument("graph: field \"vertex_ops\" must be an object");
        }
        for (const auto &[key, word] : ops.items()) {
            std::string where = "graph: vertex_ops[\"" + key + "\"]";
            size_t v;
            try {
                size_t used = 0;
                v = std::stoul(key, &used);
                if (used != key.size()) {
                    throw std::invalid_argument("");
                }
            } catch (const std::exception &) {
                throw std::invalid_argument(where + ": key is not a vertex index");
            }
            if (v >= n) {
                throw std::invalid_argument(where + ": vertex out of range");
            }
            if (!word.is_string()) {
                throw std::invalid_argument(where + " must be a string");
            }
            try {
                g.set_vertex_op(v, LocalClifford::from_word(word.get<std::string>()));
            } catch (const std::invalid_argument &ex) {
                throw std::invalid_argument(where + ": " + ex.what());
            }
        }
    }
    return g;
}

Tableau graph_to_tableau(const Graph &g) {
    size_t n = g.num_vertices();
    Tableau t(n);
    for (size_t v = 0; v < n; v++) {
        t.apply_h(v);
    }
    for (auto [a, b] : g.edges()) {
        t.apply_cz(a, b);
    }
    for (size_t v = 0; v < n; v++) {
        apply_local_clifford(t, v, g.vertex_op(v));
    }
    return t;
}

namespace {

// Reduced row echelon form of the X block; returns pivot columns by row.
std::vector<size_t> x_block_rref(std::vector<PauliString> &rows) {
    size_t n = rows.size();
    std::vector<size_t> pivots;
    size_t rank = 0;
    for (size_t c = 0; c < n && rank < n; c++) {
        size_t p = rank;
        while (p < n && !rows[p].x(c)) {
            p++;
        }
        if (p == n) {
            continue;
        }
        std::swap(rows[p], rows[rank]);
        for (size_t r = 0; r < n; r++) {
            if (r != rank && rows[r].x(c)) {
                rows[r] *= rows[rank];
            }
        }
        pivots.push_back(c);
        rank++;
    }
    return pivots;
}

void conjugate_all(std::vector<PauliString> &rows, size_t q, LocalClifford c, std::vector<LocalClifford> &applied) {
    for (auto &r : rows) {
        conjugate_qubit(r, q, c);
    }
    applied[q] = applied[q].then(c);
}

const LocalClifford kH = LocalClifford::from_word("H");
const LocalClifford kP = LocalClifford::from_word("P");
const LocalClifford kPdag = LocalClifford::from_word("PZ");
const LocalClifford kZ = LocalClifford::from_word("Z");
// e^{+i pi/4 X}, the vertex-a factor undone by local complementation.
const LocalClifford kSqrtX = LocalClifford::from_word("HPZH");
// e^{+i pi/4 Y} and e^{-i pi/4 Y}.
const LocalClifford kSqrtPlusY = LocalClifford::from_word("HZ");
const LocalClifford kSqrtMinusY = LocalClifford::from_word("ZH");

// new op = u applied first, then the existing op.
void prepend_op(Graph &g, size_t v, LocalClifford u) {
    g.set_vertex_op(v, u.then(g.vertex_op(v)));
}

std::set<std::pair<size_t, size_t>> pair_set(const std::vector<size_t> &a, const std::vector<size_t> &b) {
    std::set<std::pair<size_t, size_t>> out;
    for (size_t x : a) {
        for (size_t y : b) {
            if (x != y) {
                out.emplace(std::min(x, y), std::max(x, y));
            }
        }
    }
    return out;
}

void toggle_pairs(Graph &g, const std::set<std::pair<size_t, size_t>> &pairs) {
    for (auto [x, y] : pairs) {
        g.toggle_edge(x, y);
    }
}

std::vector<size_t> set_minus(const std::vector<size_t> &a, const std::vector<size_t> &b) {
    std::vector<size_t> out;
    std::set_difference(a.begin(), a.end(), b.begin(), b.end(), std::back_inserter(out));
    return out;
}

}  // namespace

Graph tableau_to_graph(const Tableau &t) {
    std::string problem = t.validate();
    if (!problem.empty()) {
        throw std::invalid_argument("malformed tableau: " + problem);
    }
    size_t n = t.num_qubits();
    std::vector<PauliString> rows = t.generators();
    std::vector<LocalClifford> applied(n);

    std::vector<size_t> pivots = x_block_rref(rows);
    std::vector<bool> is_pivot(n, false);
    for (size_t c : pivots) {
        is_pivot[c] = true;
    }
    for (size_t q = 0; q < n; q++) {
        if (!is_pivot[q]) {
            conjugate_all(rows, q, kH, applied);
        }
    }
    pivots = x_block_rref(rows);
    if (pivots.size() != n) {
        throw std::logic_error("X block still rank deficient after Hadamards");
    }
    // Row i now has X part e_i.
    for (size_t i = 0; i < n; i++) {
        if (rows[i].z(i)) {
            conjugate_all(rows, i, kPdag, applied);
        }
    }
    for (size_t i = 0; i < n; i++) {
        if (rows[i].sign() < 0) {
            conjugate_all(rows, i, kZ, applied);
        }
    }
    Graph g(n);
    for (size_t i = 0; i < n; i++) {
        for (size_t j = i + 1; j < n; j++) {
            if (rows[i].z(j) != rows[j].z(i)) {
                throw std::logic_error("reduced Z block is not symmetric");
            }
            if (rows[i].z(j)) {
                g.add_edge(i, j);
            }
        }
    }
    for (size_t v = 0; v < n; v++) {
        g.set_vertex_op(v, applied[v].inverse());
    }
    return g;
}

Graph local_complement(const Graph &g, size_t a) {
    std::vector<size_t> nb = g.neighbors(a);
    Graph out = g;
    for (size_t i = 0; i < nb.size(); i++) {
        for (size_t j = i + 1; j < nb.size(); j++) {
            out.toggle_edge(nb[i], nb[j]);
        }
    }
    prepend_op(out, a, kSqrtX);
    for (size_t b : nb) {
        prepend_op(out, b, kP);
    }
    return out;
}

Graph x_rule_edges(const Graph &g, size_t a, size_t b) {
    std::vector<size_t> na = g.neighbors(a);
    std::vector<size_t> nb = g.neighbors(b);
    std::vector<size_t> both;
    std::set_intersection(na.begin(), na.end(), nb.begin(), nb.end(), std::back_inserter(both));
    Graph out = g;
    toggle_pairs(out, pair_set(nb, na));
    toggle_pairs(out, pair_set(both, both));
    toggle_pairs(out, pair_set({b}, set_minus(na, {b})));
    return out;
}

GraphMeasurement measure_vertex(const Graph &g, size_t a, char basis, int outcome, std::optional<size_t> b) {
    if (a >= g.num_vertices()) {
        throw std::out_of_range("measured vertex out of range");
    }
    if (basis != 'X' && basis != 'Y' && basis != 'Z') {
        throw std::invalid_argument(std::string("unknown measurement basis '") + basis + "'");
    }
    if (outcome != 1 && outcome != -1) {
        throw std::invalid_argument("outcome must be +1 or -1");
    }
    // Rewrite the observable into the frame of the bare graph state.
    auto [sign, q] = g.vertex_op(a).inverse().conjugate(basis);
    int m = sign * outcome;
    std::vector<size_t> na = g.neighbors(a);

    if (b && std::find(na.begin(), na.end(), *b) == na.end()) {
        throw std::invalid_argument("special vertex b must be a neighbour of a");
    }

    GraphMeasurement result{g, outcome, false};
    Graph &out = result.graph;
    if (na.empty()) {
        // |+> on an isolated vertex: X is deterministic, Y and Z are not.
        if (q == 'X') {
            result.outcome = sign;
            result.deterministic = true;
        }
        out.remove_vertex(a);
        return result;
    }

    if (q == 'Z') {
        for (size_t v : na) {
            out.remove_edge(a, v);
            if (m < 0) {
                prepend_op(out, v, kZ);
            }
        }
    } else if (q == 'Y') {
        for (size_t i = 0; i < na.size(); i++) {
            for (size_t j = i + 1; j < na.size(); j++) {
                out.toggle_edge(na[i], na[j]);
            }
        }
        for (size_t v : na) {
            prepend_op(out, v, m > 0 ? kP : kPdag);
        }
    } else {
        size_t b0 = b ? *b : na.front();
        std::vector<size_t> nb0 = g.neighbors(b0);
        out = x_rule_edges(g, a, b0);
        if (m > 0) {
            prepend_op(out, b0, kSqrtPlusY);
            for (size_t v : set_minus(set_minus(na, nb0), {b0})) {
                prepend_op(out, v, kZ);
            }
        } else {
            prepend_op(out, b0, kSqrtMinusY);
            for (size_t v : set_minus(set_minus(nb0, na), {a})) {
                prepend_op(out, v, kZ);
            }
        }
    }
    out.remove_vertex(a);
    return result;
}

Graph measure_graph_z(const Graph &g, size_t a, int outcome) {
    return measure_vertex(g, a, 'Z', outcome).graph;
}

Graph measure_graph_y(const Graph &g, size_t a, int outcome) {
    return measure_vertex(g, a, 'Y', outcome).graph;
}

Graph measure_graph_x(const Graph &g, size_t a, std::optional<size_t> b, int outcome) {
    return measure_vertex(g, a, 'X', outcome, b).graph;
}

namespace {

struct OrbitNode {
    std::string parent;
    size_t vertex;
};

template <typename Visit>
void orbit_bfs(const Graph &start, size_t budget, Visit visit) {
    Graph root = start.bare();
    std::unordered_map<std::string, OrbitNode> seen;
    std::deque<Graph> queue;
    std::string root_key = root.adjacency_key();
    seen.emplace(root_key, OrbitNode{"", 0});
    queue.push_back(root);
    while (!queue.empty()) {
        Graph cur = std::move(queue.front());
        queue.pop_front();
        std::string key = cur.adjacency_key();
        if (visit(cur, key, seen)) {
            return;
        }
        for (size_t v = 0; v < cur.num_vertices(); v++) {
            if (cur.degree(v) < 2) {
                continue;
            }
            Graph next = local_complement(cur, v).bare();
            std::string nk = next.adjacency_key();
            if (seen.count(nk)) {
                continue;
            }
            if (seen.size() >= budget) {
                throw ResourceExhausted("local-complementation orbit exceeds budget of " + std::to_string(budget));
            }
            seen.emplace(nk, OrbitNode{key, v});
            queue.push_back(std::move(next));
        }
    }
}

}  // namespace

LcSearchResult lc_equivalent(const Graph &g1, const Graph &g2, size_t budget) {
    if (g1.num_vertices() != g2.num_vertices()) {
        throw std::invalid_argument("lc_equivalent needs graphs with equal vertex counts");
    }
    std::string target = g2.bare().adjacency_key();
    LcSearchResult result{false, {}, 0};
    orbit_bfs(g1, budget, [&](const Graph &, const std::string &key,
                              const std::unordered_map<std::string, OrbitNode> &seen) {
        result.orbit_size++;
        if (key != target) {
            return false;
        }
        result.equivalent = true;
        std::string k = key;
        while (!seen.at(k).parent.empty()) {
            result.witness.push_back(seen.at(k).vertex);
            k = seen.at(k).parent;
        }
        std::reverse(result.witness.begin(), result.witness.end());
        return true;
    });
    return result;
}

std::vector<Graph> lc_orbit(const Graph &g, size_t budget) {
    std::vector<Graph> out;
    orbit_bfs(g, budget, [&](const Graph &cur, const std::string &, const auto &) {
        out.push_back(cur);
        return false;
    });
    return out;
}

Graph parity_project(const Graph &g, size_t a, size_t b, bool odd) {
    if (a >= g.num_vertices() || b >= g.num_vertices()) {
        throw std::out_of_range("parity projection vertex out of range");
    }
    if (a == b) {
        throw std::invalid_argument("parity projection needs two distinct vertices");
    }
    if (!g.vertex_op(a).is_identity() || !g.vertex_op(b).is_identity()) {
        throw std::invalid_argument("parity projection needs unannotated vertices a and b");
    }
    std::vector<size_t> na = set_minus(g.neighbors(a), {b});
    std::vector<size_t> nb = set_minus(g.neighbors(b), {a});
    bool had_edge = g.has_edge(a, b);
    Graph out = g;
    for (size_t v : g.neighbors(a)) {
        out.remove_edge(a, v);
    }
    for (size_t v : g.neighbors(b)) {
        out.remove_edge(b, v);
    }
    std::vector<size_t> merged;
    std::set_symmetric_difference(na.begin(), na.end(), nb.begin(), nb.end(), std::back_inserter(merged));
    for (size_t v : merged) {
        out.add_edge(a, v);
    }
    out.add_edge(a, b);
    if (odd) {
        out.set_vertex_op(b, LocalClifford::from_word("HX"));
        for (size_t v : nb) {
            prepend_op(out, v, kZ);
        }
    } else {
        out.set_vertex_op(b, kH);
        if (had_edge) {
            out.set_vertex_op(a, kZ);
        }
    }
    return out;
}

Graph reduce_clifford_part(const Graph &g, const std::vector<PauliMeasurementSpec> &measurements) {
    std::vector<std::optional<size_t>> where(g.num_vertices());
    for (size_t v = 0; v < g.num_vertices(); v++) {
        where[v] = v;
    }
    Graph cur = g;
    for (const auto &m : measurements) {
        if (m.vertex >= g.num_vertices()) {
            throw std::out_of_range("measured vertex out of range");
        }
        if (!where[m.vertex]) {
            throw std::invalid_argument("vertex " + std::to_string(m.vertex) + " measured twice");
        }
        size_t idx = *where[m.vertex];
        cur = measure_vertex(cur, idx, m.basis, m.outcome).graph;
        where[m.vertex].reset();
        for (auto &w : where) {
            if (w && *w > idx) {
                --*w;
            }
        }
    }
    return cur;
}

}  // namespace graphforge::graph
