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

#include <cmath>
#include <deque>

#include "graphforge/growth/growth.h"
#include "graphforge/oracle/state_vector.h"

using namespace graphforge;
using namespace graphforge::growth;
using graph::Graph;

namespace {

Graph random_graph(size_t n, Rng &rng, bool ops) {
    Graph g(n);
    for (size_t a = 0; a < n; a++) {
        for (size_t b = a + 1; b < n; b++) {
            if (rng.coin()) {
                g.add_edge(a, b);
            }
        }
        if (ops) {
            g.set_vertex_op(a, graph::LocalClifford::all()[rng.below(24)]);
        }
    }
    return g;
}

bool is_path(const Graph &g) {
    size_t n = g.num_vertices();
    if (n == 0 || g.num_edges() != n - 1) {
        return false;
    }
    for (size_t v = 0; v < n; v++) {
        if (g.degree(v) > 2) {
            return false;
        }
    }
    // n - 1 edges plus connectivity.
    std::vector<bool> seen(n, false);
    std::deque<size_t> q{0};
    seen[0] = true;
    size_t count = 1;
    while (!q.empty()) {
        size_t v = q.front();
        q.pop_front();
        for (size_t w : g.neighbors(v)) {
            if (!seen[w]) {
                seen[w] = true;
                count++;
                q.push_back(w);
            }
        }
    }
    return count == n;
}

// Left-right crossing by breadth-first search over open bonds.
bool spans_bfs(size_t L, const std::vector<double> &u, double p) {
    size_t h = L * (L - 1);
    auto open = [&](size_t a, size_t b) {
        size_t lo = std::min(a, b), hi = std::max(a, b);
        if (hi == lo + 1) {
            return u[(lo / L) * (L - 1) + lo % L] < p;
        }
        return u[h + lo] < p;
    };
    std::vector<bool> seen(L * L, false);
    std::deque<size_t> q;
    for (size_t r = 0; r < L; r++) {
        seen[r * L] = true;
        q.push_back(r * L);
    }
    while (!q.empty()) {
        size_t s = q.front();
        q.pop_front();
        if (s % L == L - 1) {
            return true;
        }
        size_t r = s / L, c = s % L;
        std::vector<size_t> nb;
        if (c > 0) nb.push_back(s - 1);
        if (c + 1 < L) nb.push_back(s + 1);
        if (r > 0) nb.push_back(s - L);
        if (r + 1 < L) nb.push_back(s + L);
        for (size_t t : nb) {
            if (!seen[t] && open(s, t)) {
                seen[t] = true;
                q.push_back(t);
            }
        }
    }
    return false;
}

}  // namespace

TEST(entangle, success_matches_oracle_cz) {
    Rng rng(1);
    ArchitectureModel arch{1.0};
    for (int trial = 0; trial < 40; trial++) {
        Graph g = random_graph(5, rng, trial % 2 == 1);
        size_t a = rng.below(5), b = (a + 1 + rng.below(4)) % 5;
        auto expect = oracle::build_constructive_graph_state(g);
        expect.apply_unitary(oracle::gates::cz(), {a, b});
        Graph h = g;
        EXPECT_TRUE(attempt_entangle(h, a, b, arch, rng).success);
        EXPECT_NEAR(oracle::fidelity(expect, oracle::build_constructive_graph_state(h)), 1.0, 1e-9);
    }
}

TEST(entangle, parity_effect_matches_parity_projection) {
    Rng rng(2);
    ArchitectureModel arch{1.0, SuccessEffect::ParityProjection};
    Graph g = random_graph(6, rng, false);
    Graph h = g;
    attempt_entangle(h, 1, 4, arch, rng);
    EXPECT_EQ(h, graph::parity_project(g, 1, 4, true));
}

TEST(entangle, failure_is_z_damage_with_local_effect) {
    Rng rng(3);
    ArchitectureModel arch{0.0};
    for (int trial = 0; trial < 40; trial++) {
        Graph g = random_graph(6, rng, trial % 2 == 1);
        size_t a = rng.below(6), b = (a + 1 + rng.below(5)) % 6;
        Graph h = g;
        EntangleOutcome r = attempt_entangle(h, a, b, arch, rng);
        ASSERT_FALSE(r.success);
        ASSERT_EQ(h.num_vertices(), 4u);

        auto s = oracle::build_constructive_graph_state(g);
        auto z = oracle::gates::eigenbasis('Z');
        EXPECT_GT(s.project_out(a, z, r.outcome_a > 0 ? 0 : 1), 0.0);
        EXPECT_GT(s.project_out(b > a ? b - 1 : b, z, r.outcome_b > 0 ? 0 : 1), 0.0);
        EXPECT_NEAR(oracle::fidelity(s, oracle::build_constructive_graph_state(h)), 1.0, 1e-9);

        // Vertices outside N(a) and N(b) keep their ops and mutual edges.
        if (trial % 2 == 0) {
            std::vector<size_t> far, map;
            for (size_t v = 0, k = 0; v < 6; v++) {
                if (v == a || v == b) {
                    continue;
                }
                if (!g.has_edge(v, a) && !g.has_edge(v, b)) {
                    far.push_back(v);
                    map.push_back(k);
                }
                k++;
            }
            for (size_t i = 0; i < far.size(); i++) {
                EXPECT_EQ(h.vertex_op(map[i]), g.vertex_op(far[i]));
                for (size_t j = 0; j < far.size(); j++) {
                    if (i != j) {
                        EXPECT_EQ(h.has_edge(map[i], map[j]), g.has_edge(far[i], far[j]));
                    }
                }
            }
        }
    }
}

TEST(entangle, connectivity_is_enforced) {
    Rng rng(4);
    ArchitectureModel arch{1.0, SuccessEffect::CZ, Graph::path(4)};
    Graph g(4);
    EXPECT_THROW(attempt_entangle(g, 0, 2, arch, rng), std::invalid_argument);
    EXPECT_THROW(attempt_entangle(g, 1, 1, arch, rng), std::invalid_argument);
    EXPECT_THROW(attempt_entangle(g, 0, 7, arch, rng), std::invalid_argument);
    EXPECT_TRUE(attempt_entangle(g, 1, 2, arch, rng).success);
    EXPECT_TRUE(g.has_edge(1, 2));
}

TEST(chain, deterministic_joins_double_each_round) {
    Rng rng(5);
    for (size_t target = 2; target <= 40; target++) {
        ChainResult r = run_chain_strategy({1.0, target}, rng);
        EXPECT_EQ(r.stats.status, Status::Completed);
        EXPECT_EQ(r.stats.elapsed_steps, static_cast<uint64_t>(std::ceil(std::log2(target)))) << target;
        EXPECT_EQ(r.stats.final_size, static_cast<double>(target));
    }
}

TEST(chain, backends_agree_for_equal_seeds) {
    for (BankPolicy policy : {BankPolicy::LongestPair, BankPolicy::RandomPair, BankPolicy::ShortestPair}) {
        for (uint64_t seed = 0; seed < 30; seed++) {
            ChainConfig c{0.6, 24};
            c.initial_chains = 40;
            c.policy = policy;
            Rng r1(seed), r2(seed);
            ChainResult lengths = run_chain_strategy(c, r1);
            c.track_graph = true;
            ChainResult graphs = run_chain_strategy(c, r2);
            EXPECT_EQ(lengths.longest, graphs.longest);
            EXPECT_EQ(lengths.final_lengths, graphs.final_lengths);
            EXPECT_EQ(lengths.stats.attempts, graphs.stats.attempts);
            EXPECT_EQ(r1.next_u64(), r2.next_u64());
        }
    }
}

TEST(chain, tracked_chains_stay_paths) {
    // Damage at a chain end leaves a shorter path with diagonal corrections.
    Rng rng(6);
    ArchitectureModel arch{0.5};
    Graph g = Graph::path(8);
    for (int step = 0; step < 20 && g.num_vertices() >= 2; step++) {
        size_t n = g.num_vertices();
        Graph extra = Graph::path(3);
        Graph u(n + 3);
        for (auto [x, y] : g.edges()) u.add_edge(x, y);
        for (size_t v = 0; v < n; v++) u.set_vertex_op(v, g.vertex_op(v));
        u.add_edge(n, n + 1);
        u.add_edge(n + 1, n + 2);
        auto r = attempt_entangle(u, n - 1, n, arch, rng);
        if (r.success) {
            EXPECT_TRUE(is_path(u));
            EXPECT_EQ(u.num_vertices(), n + 3);
            g = u;
        } else {
            ASSERT_EQ(u.num_vertices(), n + 1);
            Graph left(n - 1);
            for (auto [x, y] : u.edges()) {
                if (y < n - 1) left.add_edge(x, y);
                EXPECT_FALSE(x < n - 1 && y >= n - 1);
            }
            if (n > 1) EXPECT_TRUE(n == 2 || is_path(left));
            for (size_t v = 0; v + 1 < n; v++) {
                left.set_vertex_op(v, u.vertex_op(v));
                EXPECT_EQ(u.vertex_op(v).conjugate('Z'), (std::pair<int, char>{1, 'Z'}));
            }
            g = left;
        }
    }
}

TEST(chain, single_join_expectation) {
    const double p = 1.0 / 3;
    const size_t L = 5;
    const uint64_t n = 100000;
    auto v = run_trials<double>(n, 9, 4, [&](Rng &rng) { return static_cast<double>(single_join(L, p, rng)); });
    double sum = 0, sum2 = 0;
    for (double x : v) {
        sum += x;
        sum2 += x * x;
    }
    double mean = sum / n;
    double sd = std::sqrt((sum2 / n - mean * mean) / n);
    // 2pL + (1-p)(L-1) = 10/3 + 8/3.
    EXPECT_NEAR(mean, 6.0, 4 * sd);
    Rng rng(1);
    EXPECT_EQ(single_join(0, 0.5, rng), 0u);
}

TEST(chain, dichotomy_around_critical_length) {
    for (double p : {0.25, 1.0 / 3, 0.5}) {
        double lc = critical_length(p);
        for (double L : {lc - 1, lc + 1}) {
            if (L < 1) {
                continue;  // no chain of length zero to grow
            }
            size_t Li = static_cast<size_t>(std::lround(L));
            auto v = run_trials<double>(100000, 17, 4, [&](Rng &rng) {
                return static_cast<double>(single_join(Li, p, rng));
            });
            double mean = 0;
            for (double x : v) mean += x / static_cast<double>(v.size());
            if (L > lc) {
                EXPECT_GT(mean, L) << p;
            } else {
                EXPECT_LT(mean, L) << p;
            }
        }
    }
    EXPECT_THROW(critical_length(0), std::invalid_argument);
}

TEST(chain, bank_exhaustion_and_errors) {
    Rng rng(7);
    ChainResult r = run_chain_strategy({0.0, 8}, rng);
    EXPECT_EQ(r.stats.status, Status::BankExhausted);
    EXPECT_EQ(r.stats.qubits_damaged, 8u);
    EXPECT_THROW(run_chain_strategy({1.5, 8}, rng), std::invalid_argument);
    EXPECT_THROW(run_chain_strategy({0.5, 0}, rng), std::invalid_argument);
}

TEST(cross, link_failure_law) {
    const double p = 1.0 / 3;
    for (size_t k : {2, 4, 8}) {
        const uint64_t n = 100000;
        auto v = run_trials<int>(n, 100 + k, 4, [&](Rng &rng) { return attempt_link(k, k, p, rng).success ? 0 : 1; });
        double fails = 0;
        for (int x : v) fails += x;
        double expect = std::pow(1 - p, static_cast<double>(k));
        double sigma = std::sqrt(expect * (1 - expect) / n);
        EXPECT_NEAR(fails / n, expect, 3 * sigma) << k;
    }
}

TEST(cross, default_buffer_meets_budget) {
    for (double p : {0.1, 0.25, 0.5, 0.9}) {
        size_t k = default_arm_buffer(p, 1e-3);
        EXPECT_LE(std::pow(1 - p, static_cast<double>(k)), 1e-3);
        EXPECT_GT(std::pow(1 - p, static_cast<double>(k - 1)), 1e-3);
    }
    EXPECT_EQ(default_arm_buffer(1.0, 1e-3), 1u);
    EXPECT_THROW(default_arm_buffer(0.0, 1e-3), std::invalid_argument);
}

TEST(cross, deterministic_links_burn_nothing) {
    Rng rng(8);
    GrowthTrialStats s = run_cross_strategy({1.0, 3}, rng);
    EXPECT_EQ(s.status, Status::Completed);
    EXPECT_EQ(s.qubits_damaged, 0u);
    EXPECT_EQ(s.successes, 12u);
    EXPECT_EQ(s.qubits_consumed, 9u * 5);
}

TEST(cross, cost_grows_as_p_falls) {
    uint64_t prev = 0;
    for (double p : {0.9, 0.7, 0.5, 0.3, 0.1}) {
        auto v = run_trials<GrowthTrialStats>(200, 3, 2, [&](Rng &rng) { return run_cross_strategy({p, 3}, rng); });
        uint64_t cost = 0;
        for (const auto &s : v) cost += s.qubits_consumed;
        EXPECT_GT(cost, prev) << p;
        prev = cost;
    }
}

TEST(microcluster, deterministic_lattice_cost) {
    Rng rng(9);
    for (size_t star : {2, 3, 5, 9}) {
        GrowthTrialStats s = run_microcluster_strategy({1.0, star, 2}, rng);
        if (star == 2) {
            // One leaf cannot serve two links.
            EXPECT_EQ(s.status, Status::LinkFailed);
            continue;
        }
        EXPECT_EQ(s.status, Status::Completed);
        EXPECT_EQ(s.qubits_consumed, 4 * star);
        EXPECT_EQ(s.attempts, 4u);
    }
}

TEST(microcluster, leaves_are_accounted_for) {
    auto v = run_trials<GrowthTrialStats>(2000, 4, 2,
                                          [](Rng &rng) { return run_microcluster_strategy({0.4, 7, 3}, rng); });
    for (const auto &s : v) {
        EXPECT_EQ(s.qubits_damaged, 2 * (s.attempts - s.successes));
        if (s.status == Status::Completed) {
            EXPECT_EQ(s.qubits_damaged + s.qubits_trimmed, 9u * 6);
        }
    }
}

TEST(percolation, extremes) {
    Rng rng(10);
    for (size_t L : {2, 5, 16}) {
        EXPECT_FALSE(run_percolation({L, 4, 0.0}, rng).success);
        EXPECT_TRUE(run_percolation({L, 4, 1.0}, rng).success);
    }
    PercolationConfig blocks{12, 4, 1.0, 5, 1};
    auto r = run_percolation(blocks, rng);
    EXPECT_TRUE(r.success);
    EXPECT_EQ(r.blocks_per_side, 2u);
    EXPECT_EQ(r.representatives.size(), 4u);
    // Blocks cover rows and columns 0..8; the rest is Z-removed.
    EXPECT_EQ(r.z_removals, 144u - 81u);
    EXPECT_EQ(r.z_removals + r.xy_removals + 4, 144u);
}

TEST(percolation, monotone_under_shared_uniforms) {
    Rng rng(11);
    for (int t = 0; t < 300; t++) {
        PercolationConfig c{10, 4, 0.0, 4, 1};
        auto u = sample_bond_uniforms(c.L, rng);
        bool before = false;
        for (int k = 0; k <= 20; k++) {
            c.p = k / 20.0;
            bool now = percolation_trial(c, u).success;
            EXPECT_TRUE(!before || now);
            before = now;
        }
    }
}

TEST(percolation, crossing_threshold_matches_search) {
    Rng rng(12);
    for (int t = 0; t < 200; t++) {
        size_t L = 2 + rng.below(10);
        auto u = sample_bond_uniforms(L, rng);
        double pc = crossing_threshold(L, u);
        EXPECT_FALSE(spans_bfs(L, u, pc));
        EXPECT_TRUE(spans_bfs(L, u, std::nextafter(pc, 2.0)));
    }
}

TEST(percolation, self_dual_point) {
    auto pts = spanning_sweep(64, {0.5}, 4000, 13, 4);
    EXPECT_NEAR(pts[0].probability, 0.5, 0.05);
}

TEST(percolation, sweep_and_config_errors) {
    auto rep = run_growth_config({{"strategy", "percolation_sweep"}, {"L", 16}}, 200, 1, 2);
    ASSERT_TRUE(rep.csv);
    size_t lines = std::count(rep.csv->begin(), rep.csv->end(), '\n');
    EXPECT_EQ(lines, 12u);
    EXPECT_EQ(rep.json["points"].size(), 11u);
    EXPECT_THROW(run_percolation({1, 4, 0.5}, *std::make_unique<Rng>(0)), std::invalid_argument);
    EXPECT_THROW(validate({8, 4, 0.5, 4, 4}), std::invalid_argument);
    EXPECT_THROW(estimate_threshold({16}, p_grid(0.4, 0.6, 0.01), 10, 1), std::invalid_argument);
    EXPECT_THROW(estimate_threshold({8, 16}, p_grid(0.9, 1.0, 0.05), 50, 1), std::invalid_argument);
    EXPECT_THROW(run_growth_config({{"strategy", "nope"}}, 10, 1, 1), std::invalid_argument);
    EXPECT_THROW(run_growth_config({{"strategy", "chain"}, {"p", 2}, {"target", 4}}, 10, 1, 1),
                 std::invalid_argument);
}

TEST(percolation, threshold_estimate) {
    auto est = estimate_threshold({16, 32, 64}, p_grid(0.4, 0.6, 0.005), 1000, 21, 4);
    EXPECT_NEAR(est.estimate, 0.5, 0.02);
    EXPECT_GT(est.error, 0.0);
    EXPECT_LT(est.error, 0.02);
}

TEST(growth_config, thread_count_does_not_change_results) {
    nlohmann::json cfgs[] = {{{"strategy", "chain"}, {"p", 0.5}, {"target", 16}, {"policy", "random"}},
                             {{"strategy", "cross"}, {"p", 0.3}, {"lattice", 3}},
                             {{"strategy", "microcluster"}, {"p", 0.5}, {"star_size", 9}},
                             {{"strategy", "percolation"}, {"L", 12}, {"p", 0.6}, {"block", 5}},
                             {{"strategy", "single_join"}, {"p", 0.25}, {"L", 4}}};
    for (const auto &c : cfgs) {
        EXPECT_EQ(run_growth_config(c, 500, 7, 1).json.dump(), run_growth_config(c, 500, 7, 5).json.dump());
    }
}
