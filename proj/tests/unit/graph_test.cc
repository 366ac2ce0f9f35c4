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

#include <gtest/gtest.h>

#include <set>

#include "graphforge/graph/graph.h"
#include "graphforge/graph/local_clifford.h"

using namespace graphforge;
using namespace graphforge::graph;
using stabilizer::PauliString;
using stabilizer::Tableau;

namespace {

// Every labelled graph on n vertices.
std::vector<Graph> all_graphs(size_t n) {
    std::vector<std::pair<size_t, size_t>> pairs;
    for (size_t i = 0; i < n; i++) {
        for (size_t j = i + 1; j < n; j++) {
            pairs.emplace_back(i, j);
        }
    }
    std::vector<Graph> out;
    for (uint64_t mask = 0; mask < (uint64_t{1} << pairs.size()); mask++) {
        Graph g(n);
        for (size_t k = 0; k < pairs.size(); k++) {
            if (mask >> k & 1) {
                g.add_edge(pairs[k].first, pairs[k].second);
            }
        }
        out.push_back(g);
    }
    return out;
}

Graph with_random_ops(Graph g, Rng &rng) {
    for (size_t v = 0; v < g.num_vertices(); v++) {
        g.set_vertex_op(v, LocalClifford::all()[rng.below(24)]);
    }
    return g;
}

// Tableau of `rest` on n-1 qubits with qubit a re-inserted in the
// eigenstate of sign * P_a.
Tableau embed(const Tableau &rest, size_t a, char p, int sign) {
    size_t n = rest.num_qubits() + 1;
    std::vector<PauliString> gens;
    for (const auto &g : rest.generators()) {
        PauliString w(n);
        for (size_t q = 0, src = 0; q < n; q++) {
            if (q == a) {
                continue;
            }
            w.set_pauli(q, g.pauli(src++));
        }
        w.set_log_i(g.log_i());
        gens.push_back(w);
    }
    PauliString m = PauliString::single(n, a, p);
    m.set_sign(sign);
    gens.push_back(m);
    return Tableau::from_generators(gens);
}

// Checks one rule application against a forced tableau measurement.
void check_rule(const Graph &g, size_t a, char basis, int outcome, std::optional<size_t> b = std::nullopt) {
    Rng rng(0);
    Tableau t = graph_to_tableau(g);
    PauliString obs = PauliString::single(g.num_vertices(), a, basis);
    int forced = t.is_deterministic(obs) ? t.measure(obs, rng).outcome : outcome;
    t.measure(obs, rng, forced);
    GraphMeasurement r = measure_vertex(g, a, basis, outcome, b);
    ASSERT_EQ(r.outcome, forced);
    ASSERT_EQ(r.deterministic, forced != outcome || graph_to_tableau(g).is_deterministic(obs));
    Tableau expect = embed(graph_to_tableau(r.graph), a, basis, forced);
    ASSERT_TRUE(expect.same_group(t)) << graph_to_json(g).dump() << " a=" << a << " basis=" << basis
                                      << " outcome=" << outcome << " got " << graph_to_json(r.graph).dump();
}

}  // namespace

TEST(local_clifford, group_structure) {
    std::set<std::string> words;
    for (const auto &c : LocalClifford::all()) {
        words.insert(c.word());
        EXPECT_TRUE(c.then(c.inverse()).is_identity());
        EXPECT_EQ(LocalClifford::from_word(c.word()), c);
    }
    EXPECT_EQ(words.size(), 24u);
    EXPECT_TRUE(LocalClifford::from_word("HH").is_identity());
    EXPECT_TRUE(LocalClifford::from_word("PPPP").is_identity());
    EXPECT_EQ(LocalClifford::from_word("PP"), LocalClifford::from_word("Z"));
    EXPECT_EQ(LocalClifford::from_word("HZH"), LocalClifford::from_word("X"));
    EXPECT_EQ(LocalClifford::from_word("H").conjugate('X'), std::make_pair(1, 'Z'));
    EXPECT_EQ(LocalClifford::from_word("P").conjugate('Y'), std::make_pair(-1, 'X'));
    EXPECT_THROW(LocalClifford::from_word("T"), std::invalid_argument);
}

TEST(local_clifford, conjugation_matches_tableau) {
    for (const auto &c : LocalClifford::all()) {
        for (char p : {'X', 'Y', 'Z'}) {
            Tableau t = Tableau::from_generators({std::string("+") + p});
            apply_local_clifford(t, 0, c);
            auto [sign, img] = c.conjugate(p);
            PauliString expect = PauliString::single(1, 0, img);
            expect.set_sign(sign);
            EXPECT_EQ(t.generator(0), expect) << c.word() << " " << p;
        }
    }
    for (const auto &a : LocalClifford::all()) {
        for (const auto &b : LocalClifford::all()) {
            Tableau t = Tableau::from_generators({"+X"});
            apply_local_clifford(t, 0, a);
            apply_local_clifford(t, 0, b);
            Tableau u = Tableau::from_generators({"+X"});
            apply_local_clifford(u, 0, a.then(b));
            EXPECT_EQ(t, u);
        }
    }
}

TEST(graph, basic_edits) {
    Graph g = Graph::path(4);
    EXPECT_EQ(g.num_edges(), 3u);
    EXPECT_EQ(g.neighbors(1), (std::vector<size_t>{0, 2}));
    EXPECT_THROW(g.add_edge(1, 1), std::invalid_argument);
    EXPECT_THROW(g.neighbors(4), std::out_of_range);
    g.remove_vertex(1);
    EXPECT_EQ(g.edges(), (std::vector<std::pair<size_t, size_t>>{{1, 2}}));
    size_t v = g.add_vertex();
    EXPECT_EQ(v, 3u);
    EXPECT_EQ(g.degree(v), 0u);
}

TEST(graph, to_tableau_examples) {
    EXPECT_EQ(graph_to_tableau(Graph::path(2)).str(), "+XZ\n+ZX\n");
    Graph g = Graph::from_edges(5, {{0, 1}, {1, 2}, {2, 3}, {1, 4}});
    EXPECT_TRUE(graph_to_tableau(g).same_group(
        Tableau::from_generators({"XZIII", "ZXZIZ", "IZXZI", "IIZXI", "IZIIX"})));
    Graph single(1);
    single.set_vertex_op(0, LocalClifford::from_word("H"));
    EXPECT_EQ(graph_to_tableau(single).str(), "+Z\n");
}

TEST(graph, tableau_to_graph_examples) {
    Graph g = tableau_to_graph(Tableau::from_generators({"+XX", "+ZZ"}));
    EXPECT_EQ(g.num_edges(), 1u);
    size_t tagged = 0;
    for (size_t v = 0; v < 2; v++) {
        tagged += !g.vertex_op(v).is_identity();
    }
    EXPECT_EQ(tagged, 1u);
    EXPECT_TRUE(graph_to_tableau(g).same_group(Tableau::from_generators({"+XX", "+ZZ"})));
    Graph z = tableau_to_graph(Tableau(1));
    EXPECT_EQ(z.vertex_op(0).word(), "H");
}

TEST(graph, tableau_round_trip_exhaustive) {
    Rng rng(11);
    for (size_t n = 1; n <= 5; n++) {
        for (const Graph &g : all_graphs(n)) {
            Graph annotated = with_random_ops(g, rng);
            Tableau t = graph_to_tableau(annotated);
            EXPECT_TRUE(graph_to_tableau(tableau_to_graph(t)).same_group(t));
        }
    }
}

TEST(graph, tableau_round_trip_random_circuits) {
    Rng rng(12);
    for (int trial = 0; trial < 300; trial++) {
        size_t n = 1 + rng.below(8);
        Tableau t(n);
        for (int k = 0; k < 40; k++) {
            size_t a = rng.below(n), b = rng.below(n);
            switch (rng.below(3)) {
                case 0:
                    t.apply_h(a);
                    break;
                case 1:
                    t.apply_p(a);
                    break;
                default:
                    if (a != b) {
                        t.apply_cz(a, b);
                    }
            }
        }
        EXPECT_TRUE(graph_to_tableau(tableau_to_graph(t)).same_group(t));
    }
}

TEST(graph, local_complement) {
    Graph tri = local_complement(Graph::path(3), 1);
    EXPECT_EQ(tri.bare(), Graph::complete(3));
    Graph chain = Graph::path(4);
    EXPECT_EQ(local_complement(chain, 0).bare(), chain);
    Rng rng(5);
    for (size_t n = 1; n <= 5; n++) {
        for (const Graph &g : all_graphs(n)) {
            Graph annotated = with_random_ops(g, rng);
            for (size_t a = 0; a < n; a++) {
                Graph h = local_complement(annotated, a);
                EXPECT_TRUE(graph_to_tableau(h).same_group(graph_to_tableau(annotated)));
                EXPECT_EQ(local_complement(h, a).bare(), g);
            }
        }
    }
}

TEST(graph, measurement_rule_examples) {
    EXPECT_EQ(measure_graph_z(Graph::path(3), 1).num_edges(), 0u);
    Graph y = measure_graph_y(Graph::path(3), 1);
    EXPECT_EQ(y.edges(), (std::vector<std::pair<size_t, size_t>>{{0, 1}}));
    Graph x = measure_graph_x(Graph::path(4), 1, 2);
    EXPECT_EQ(x.num_vertices(), 3u);
    EXPECT_TRUE(lc_equivalent(x, Graph::path(3)).equivalent);
    EXPECT_THROW(measure_graph_x(Graph::path(4), 1, 3), std::invalid_argument);
    EXPECT_THROW(measure_graph_z(Graph::path(4), 7), std::out_of_range);
}

TEST(graph, x_rule_matches_complementation_identity) {
    for (size_t n = 2; n <= 6; n++) {
        for (const Graph &g : all_graphs(n)) {
            for (size_t a = 0; a < n; a++) {
                for (size_t b : g.neighbors(a)) {
                    Graph inner = local_complement(local_complement(g, b), a);
                    inner.remove_vertex(a);
                    Graph hein = local_complement(inner, b > a ? b - 1 : b).bare();
                    Graph rule = x_rule_edges(g, a, b).bare();
                    rule.remove_vertex(a);
                    ASSERT_EQ(rule, hein);
                }
            }
        }
    }
}

TEST(graph, measurement_rules_are_exact) {
    Rng rng(21);
    for (size_t n = 1; n <= 5; n++) {
        for (const Graph &g : all_graphs(n)) {
            for (bool annotate : {false, true}) {
                Graph h = annotate ? with_random_ops(g, rng) : g;
                for (size_t a = 0; a < n; a++) {
                    for (int outcome : {1, -1}) {
                        check_rule(h, a, 'Z', outcome);
                        check_rule(h, a, 'Y', outcome);
                        check_rule(h, a, 'X', outcome);
                        for (size_t b : h.neighbors(a)) {
                            check_rule(h, a, 'X', outcome, b);
                        }
                    }
                }
            }
        }
    }
}

TEST(graph, lc_equivalence) {
    auto r = lc_equivalent(Graph::path(3), Graph::complete(3));
    EXPECT_TRUE(r.equivalent);
    EXPECT_EQ(r.witness, std::vector<size_t>{1});
    EXPECT_FALSE(lc_equivalent(Graph(2), Graph::path(2)).equivalent);
    EXPECT_THROW(lc_equivalent(Graph::path(5), Graph(5), 2), ResourceExhausted);
    EXPECT_THROW(lc_equivalent(Graph::path(2), Graph(3)), std::invalid_argument);
    EXPECT_FALSE(lc_equivalent(Graph::path(5), Graph::complete(5)).equivalent);
    Graph target = local_complement(local_complement(local_complement(Graph::path(5), 3), 1), 2).bare();
    auto found = lc_equivalent(Graph::path(5), target);
    ASSERT_TRUE(found.equivalent);
    Graph cur = Graph::path(5);
    for (size_t v : found.witness) {
        cur = local_complement(cur, v);
    }
    EXPECT_EQ(cur.bare(), target);
}

TEST(graph, parity_projection_examples) {
    Graph two = parity_project(Graph(2), 0, 1, true);
    EXPECT_EQ(two.num_edges(), 1u);
    Graph g = Graph::from_edges(4, {{0, 2}, {1, 3}});
    Graph p = parity_project(g, 0, 1, true);
    EXPECT_EQ(p.neighbors(0), (std::vector<size_t>{1, 2, 3}));
    EXPECT_EQ(p.neighbors(1), (std::vector<size_t>{0}));
    EXPECT_EQ(LocalClifford::from_word("H").then(LocalClifford::from_word("X")), p.vertex_op(1));
    EXPECT_THROW(parity_project(g, 1, 1, true), std::invalid_argument);
}

TEST(graph, parity_projection_is_exact) {
    Rng rng(3);
    for (size_t n = 2; n <= 5; n++) {
        for (const Graph &g : all_graphs(n)) {
            for (size_t a = 0; a < n; a++) {
                for (size_t b = 0; b < n; b++) {
                    if (a == b) {
                        continue;
                    }
                    Graph h = with_random_ops(g, rng);
                    h.set_vertex_op(a, LocalClifford());
                    h.set_vertex_op(b, LocalClifford());
                    for (bool odd : {true, false}) {
                        Tableau t = graph_to_tableau(h);
                        PauliString zz(n);
                        zz.set_pauli(a, 'Z');
                        zz.set_pauli(b, 'Z');
                        int want = odd ? -1 : 1;
                        if (t.is_deterministic(zz) && t.measure(zz, rng).outcome != want) {
                            continue;
                        }
                        t.measure(zz, rng, want);
                        ASSERT_TRUE(graph_to_tableau(parity_project(h, a, b, odd)).same_group(t))
                            << graph_to_json(h).dump() << " a=" << a << " b=" << b << " odd=" << odd;
                    }
                }
            }
        }
    }
}

TEST(graph, reduce_clifford_part) {
    Graph z = reduce_clifford_part(Graph::path(4), {{1, 'Z'}, {2, 'Z'}});
    EXPECT_EQ(z.num_vertices(), 2u);
    EXPECT_EQ(z.num_edges(), 0u);
    Graph y = reduce_clifford_part(Graph::path(4), {{1, 'Y'}, {2, 'Y'}});
    EXPECT_TRUE(lc_equivalent(y, Graph::path(2)).equivalent);
    EXPECT_EQ(reduce_clifford_part(Graph::path(3), {}), Graph::path(3));
    EXPECT_THROW(reduce_clifford_part(Graph::path(3), {{1, 'Z'}, {1, 'X'}}), std::invalid_argument);
}

TEST(graph, json) {
    Graph g = Graph::path(3);
    g.set_vertex_op(1, LocalClifford::from_word("HP"));
    auto j = graph_to_json(g);
    EXPECT_EQ(j.dump(), R"({"edges":[[0,1],[1,2]],"n":3,"vertex_ops":{"1":"HP"}})");
    EXPECT_EQ(graph_from_json(j), g);
    EXPECT_THROW(graph_from_json(nlohmann::json::parse(R"({"n":2,"edges":[[0,2]]})")), std::invalid_argument);
    EXPECT_THROW(graph_from_json(nlohmann::json::parse(R"({"n":2,"edges":[[1,1]]})")), std::invalid_argument);
    EXPECT_THROW(graph_from_json(nlohmann::json::parse(R"({"n":2,"vertex_ops":{"x":"H"}})")), std::invalid_argument);
    EXPECT_THROW(graph_from_json(nlohmann::json::parse(R"({"edges":[]})")), std::invalid_argument);
}
