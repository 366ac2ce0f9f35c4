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

#include <algorithm>
#include <cmath>
#include <numeric>
#include <stdexcept>

#include "graphforge/growth/growth.h"

namespace graphforge::growth {

using graph::Graph;

namespace {

bool diagonal(graph::LocalClifford c) {
    return c.conjugate('Z') == std::pair<int, char>{1, 'Z'};
}

void apply_cz(Graph &g, size_t a, size_t b) {
    if (diagonal(g.vertex_op(a)) && diagonal(g.vertex_op(b))) {
        // CZ commutes with diagonal vertex ops, so it only toggles the edge.
        g.toggle_edge(a, b);
        return;
    }
    auto t = graph::graph_to_tableau(g);
    t.apply_cz(a, b);
    g = graph::tableau_to_graph(t);
}

// Disjoint union; vertices of h follow those of g.
Graph join_graphs(const Graph &g, const Graph &h) {
    size_t n = g.num_vertices();
    Graph out(n + h.num_vertices());
    for (auto [a, b] : g.edges()) {
        out.add_edge(a, b);
    }
    for (auto [a, b] : h.edges()) {
        out.add_edge(n + a, n + b);
    }
    for (size_t v = 0; v < n; v++) {
        out.set_vertex_op(v, g.vertex_op(v));
    }
    for (size_t v = 0; v < h.num_vertices(); v++) {
        out.set_vertex_op(n + v, h.vertex_op(v));
    }
    return out;
}

// Vertices of g reachable from the vertices in [lo, hi), as a new graph.
Graph component_slice(const Graph &g, size_t lo, size_t hi) {
    Graph out(hi - lo);
    for (auto [a, b] : g.edges()) {
        if (a >= lo && b < hi) {
            out.add_edge(a - lo, b - lo);
        }
    }
    for (size_t v = lo; v < hi; v++) {
        out.set_vertex_op(v - lo, g.vertex_op(v));
    }
    return out;
}

size_t first_end(const Graph &g) {
    for (size_t v = 0; v < g.num_vertices(); v++) {
        if (g.degree(v) <= 1) {
            return v;
        }
    }
    throw std::logic_error("chain has no end vertex");
}

size_t last_end(const Graph &g) {
    for (size_t v = g.num_vertices(); v-- > 0;) {
        if (g.degree(v) <= 1) {
            return v;
        }
    }
    throw std::logic_error("chain has no end vertex");
}

struct Chain {
    size_t length;
    std::optional<Graph> g;
};

// Joins chains x and y end to end; appends one or two survivors to out.
void join(Chain &x, Chain &y, const ArchitectureModel &arch, Rng &rng, GrowthTrialStats &s, std::vector<Chain> &out) {
    s.attempts++;
    if (x.g) {
        size_t n = x.g->num_vertices();
        size_t a = last_end(*x.g);
        size_t b = n + first_end(*y.g);
        Graph u = join_graphs(*x.g, *y.g);
        EntangleOutcome r = attempt_entangle(u, a, b, arch, rng);
        if (r.success) {
            s.successes++;
            out.push_back({x.length + y.length, std::move(u)});
            return;
        }
        s.qubits_damaged += 2;
        // a came from x and b from y, so x keeps n - 1 vertices at the front.
        if (n > 1) {
            out.push_back({n - 1, component_slice(u, 0, n - 1)});
        }
        if (u.num_vertices() > n - 1) {
            out.push_back({u.num_vertices() - (n - 1), component_slice(u, n - 1, u.num_vertices())});
        }
        return;
    }
    // Same draws as attempt_entangle so both backends share one stream.
    if (rng.bernoulli(arch.p)) {
        s.successes++;
        out.push_back({x.length + y.length, std::nullopt});
        return;
    }
    rng.coin();
    rng.coin();
    s.qubits_damaged += 2;
    if (x.length > 1) {
        out.push_back({x.length - 1, std::nullopt});
    }
    if (y.length > 1) {
        out.push_back({y.length - 1, std::nullopt});
    }
}

size_t longest_of(const std::vector<Chain> &bank) {
    size_t m = 0;
    for (const Chain &c : bank) {
        m = std::max(m, c.length);
    }
    return m;
}

}  // namespace

EntangleOutcome attempt_entangle(Graph &g, size_t a, size_t b, const ArchitectureModel &arch, Rng &rng) {
    size_t n = g.num_vertices();
    if (a >= n || b >= n) {
        throw std::invalid_argument("entangling attempt on a vertex out of range");
    }
    if (a == b) {
        throw std::invalid_argument("entangling attempt needs two distinct qubits");
    }
    if (arch.connectivity &&
        (std::max(a, b) >= arch.connectivity->num_vertices() || !arch.connectivity->has_edge(a, b))) {
        throw std::invalid_argument("pair is not adjacent in the architecture's connectivity graph");
    }
    if (rng.bernoulli(arch.p)) {
        if (arch.success == SuccessEffect::CZ) {
            apply_cz(g, a, b);
        } else {
            g = graph::parity_project(g, a, b, true);
        }
        return {true};
    }
    EntangleOutcome r{false};
    r.outcome_a = rng.coin() ? -1 : +1;
    r.outcome_b = rng.coin() ? -1 : +1;
    auto ma = graph::measure_vertex(g, a, 'Z', r.outcome_a);
    r.outcome_a = ma.outcome;
    size_t b2 = b > a ? b - 1 : b;
    auto mb = graph::measure_vertex(ma.graph, b2, 'Z', r.outcome_b);
    r.outcome_b = mb.outcome;
    g = std::move(mb.graph);
    return r;
}

const char *status_name(Status s) {
    switch (s) {
        case Status::Completed:
            return "completed";
        case Status::BankExhausted:
            return "bank_exhausted";
        case Status::BudgetExhausted:
            return "budget_exhausted";
        case Status::LinkFailed:
            return "link_failed";
    }
    return "unknown";
}

double critical_length(double p) {
    if (!(p > 0 && p <= 1)) {
        throw std::invalid_argument("success probability must be in (0, 1]");
    }
    return 1 / p - 1;
}

ChainResult run_chain_strategy(const ChainConfig &c, Rng &rng) {
    if (!(c.p >= 0 && c.p <= 1)) {
        throw std::invalid_argument("success probability must be in [0, 1]");
    }
    if (c.target_length == 0 || c.initial_length == 0) {
        throw std::invalid_argument("chain lengths must be positive");
    }
    size_t count = c.initial_chains == 0 ? c.target_length : c.initial_chains;
    ArchitectureModel arch{c.p, SuccessEffect::CZ, std::nullopt};

    std::vector<Chain> bank;
    for (size_t i = 0; i < count; i++) {
        bank.push_back({c.initial_length, std::nullopt});
        if (c.track_graph) {
            bank.back().g = Graph::path(c.initial_length);
        }
    }
    ChainResult res;
    res.stats.qubits_consumed = count * c.initial_length;
    res.longest.push_back(longest_of(bank));

    while (true) {
        if (longest_of(bank) >= c.target_length) {
            res.stats.status = Status::Completed;
            break;
        }
        if (bank.size() < 2) {
            res.stats.status = Status::BankExhausted;
            break;
        }
        if (res.stats.elapsed_steps >= c.max_rounds) {
            res.stats.status = Status::BudgetExhausted;
            break;
        }
        switch (c.policy) {
            case BankPolicy::LongestPair:
                std::stable_sort(bank.begin(), bank.end(),
                                 [](const Chain &x, const Chain &y) { return x.length > y.length; });
                break;
            case BankPolicy::ShortestPair:
                std::stable_sort(bank.begin(), bank.end(),
                                 [](const Chain &x, const Chain &y) { return x.length < y.length; });
                break;
            case BankPolicy::RandomPair:
                for (size_t i = bank.size(); i > 1; i--) {
                    std::swap(bank[i - 1], bank[rng.below(i)]);
                }
                break;
        }
        std::vector<Chain> next;
        for (size_t i = 0; i + 1 < bank.size(); i += 2) {
            join(bank[i], bank[i + 1], arch, rng, res.stats, next);
        }
        if (bank.size() % 2 == 1) {
            next.push_back(std::move(bank.back()));
        }
        bank = std::move(next);
        res.stats.elapsed_steps++;
        res.longest.push_back(longest_of(bank));
    }
    res.stats.final_size = static_cast<double>(longest_of(bank));
    for (const Chain &ch : bank) {
        res.final_lengths.push_back(ch.length);
        if (ch.g && ch.g->num_vertices() != ch.length) {
            throw std::logic_error("graph-tracked chain length out of sync");
        }
    }
    return res;
}

size_t single_join(size_t L, double p, Rng &rng, bool track_graph) {
    if (L == 0) {
        return 0;
    }
    ChainConfig c{p, 2 * L + 1};
    c.initial_chains = 2;
    c.initial_length = L;
    c.max_rounds = 1;
    c.track_graph = track_graph;
    return run_chain_strategy(c, rng).longest.back();
}

}  // namespace graphforge::growth
