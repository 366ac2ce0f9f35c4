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

#ifndef GRAPHFORGE_GRAPH_GRAPH_H
#define GRAPHFORGE_GRAPH_GRAPH_H

#include <cstdint>
#include <optional>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "graphforge/graph/local_clifford.h"
#include "graphforge/stabilizer/tableau.h"
#include "json.hpp"

namespace graphforge::graph {

/// Thrown when a search exceeds its configured node budget. This is not a
/// negative answer.
class ResourceExhausted : public std::runtime_error {
   public:
    using std::runtime_error::runtime_error;
};

/// A graph state with per-vertex local Clifford annotations: the described
/// state is (prod_v C_v) |G>. Vertices are 0-based. Graphs are plain values;
/// all free functions below return new graphs.
class Graph {
   public:
    explicit Graph(size_t n = 0);

    size_t num_vertices() const {
        return n_;
    }
    size_t num_edges() const;

    bool has_edge(size_t a, size_t b) const;
    void add_edge(size_t a, size_t b);
    void remove_edge(size_t a, size_t b);
    void toggle_edge(size_t a, size_t b);

    /// Sorted neighbour list.
    std::vector<size_t> neighbors(size_t v) const;
    size_t degree(size_t v) const;
    /// Sorted (i < j) edge list.
    std::vector<std::pair<size_t, size_t>> edges() const;

    LocalClifford vertex_op(size_t v) const;
    void set_vertex_op(size_t v, LocalClifford c);
    /// Appends `c` after the current op of v (c is applied last).
    void push_vertex_op(size_t v, LocalClifford c);
    bool has_vertex_ops() const;
    /// Same edges, no annotations.
    Graph bare() const;

    /// Deletes vertex v and its edges; higher indices shift down by one.
    void remove_vertex(size_t v);
    /// Appends an isolated vertex and returns its index.
    size_t add_vertex();

    /// Row-major adjacency bits, used as an orbit-search key.
    std::string adjacency_key() const;

    bool operator==(const Graph &) const = default;

    static Graph path(size_t n);
    static Graph complete(size_t n);
    static Graph from_edges(size_t n, const std::vector<std::pair<size_t, size_t>> &edges);

   private:
    size_t n_;
    std::vector<uint8_t> adj_;
    std::vector<LocalClifford> ops_;

    void check_vertex(size_t v) const;
};

/// {"n": 3, "edges": [[0,1],[1,2]], "vertex_ops": {"1": "H"}}; edges sorted,
/// identity ops omitted.
nlohmann::json graph_to_json(const Graph &g);
/// Throws std::invalid_argument naming the offending field.
Graph graph_from_json(const nlohmann::json &j);

/// Generators X_i prod_{j in N(i)} Z_j, conjugated by the vertex ops.
stabilizer::Tableau graph_to_tableau(const Graph &g);

/// A graph whose annotated state generates the same group as `t`.
Graph tableau_to_graph(const stabilizer::Tableau &t);

/// Local complementation at a. Vertex ops are updated so the annotated state
/// is unchanged.
Graph local_complement(const Graph &g, size_t a);

struct GraphMeasurement {
    Graph graph;
    /// Outcome of the requested observable, +1 or -1.
    int outcome;
    bool deterministic;
};

/// Measures Pauli `basis` ('X','Y','Z') on vertex a of the annotated state
/// and removes a; later vertices shift down by one. `outcome` selects the
/// branch for random outcomes and is ignored when the outcome is
/// deterministic (isolated vertex measured along its own stabilizer).
/// `b` chooses the special neighbour for X-type measurements and defaults to
/// the smallest neighbour.
GraphMeasurement measure_vertex(
    const Graph &g, size_t a, char basis, int outcome = +1, std::optional<size_t> b = std::nullopt);

Graph measure_graph_z(const Graph &g, size_t a, int outcome = +1);
Graph measure_graph_y(const Graph &g, size_t a, int outcome = +1);
Graph measure_graph_x(const Graph &g, size_t a, std::optional<size_t> b = std::nullopt, int outcome = +1);

/// Edge set of the X-measurement rule written as symmetric differences of
/// complete pair sets, before vertex a is deleted.
Graph x_rule_edges(const Graph &g, size_t a, size_t b);

struct LcSearchResult {
    bool equivalent;
    /// Vertices to complement, in order, taking g1's edge set to g2's.
    std::vector<size_t> witness;
    size_t orbit_size;
};

/// Breadth-first search over the local-complementation orbit of g1's edges.
/// Throws ResourceExhausted past `budget` visited graphs.
LcSearchResult lc_equivalent(const Graph &g1, const Graph &g2, size_t budget = 1000000);

/// Every edge set reachable from g by local complementations.
std::vector<Graph> lc_orbit(const Graph &g, size_t budget = 1000000);

/// Projects onto Z_a Z_b = -1 (odd) or +1 (even). Vertex a inherits b's
/// neighbours, b is left as a leaf on a.
Graph parity_project(const Graph &g, size_t a, size_t b, bool odd);

struct PauliMeasurementSpec {
    size_t vertex;
    char basis;
    int outcome = +1;
};

/// Applies the measurement rules in order. Vertex indices refer to the input
/// graph; the result keeps the unmeasured vertices in their original order.
Graph reduce_clifford_part(const Graph &g, const std::vector<PauliMeasurementSpec> &measurements);

}  // namespace graphforge::graph

#endif
