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

#include <cmath>
#include <sstream>
#include <stdexcept>

#include "graphforge/growth/growth.h"

namespace graphforge::growth {

namespace {

using nlohmann::json;

double number(const json &c, const char *key, std::optional<double> fallback = std::nullopt) {
    if (!c.contains(key)) {
        if (fallback) {
            return *fallback;
        }
        throw std::invalid_argument(std::string("growth config: missing \"") + key + "\"");
    }
    if (!c[key].is_number()) {
        throw std::invalid_argument(std::string("growth config: \"") + key + "\" must be a number");
    }
    return c[key].get<double>();
}

size_t count(const json &c, const char *key, std::optional<size_t> fallback = std::nullopt) {
    if (!c.contains(key) && fallback) {
        return *fallback;
    }
    double x = number(c, key);
    if (x < 0 || x != std::floor(x)) {
        throw std::invalid_argument(std::string("growth config: \"") + key + "\" must be a non-negative integer");
    }
    return static_cast<size_t>(x);
}

BankPolicy policy(const json &c) {
    std::string s = c.value("policy", std::string("longest"));
    if (s == "longest") {
        return BankPolicy::LongestPair;
    }
    if (s == "random") {
        return BankPolicy::RandomPair;
    }
    if (s == "shortest") {
        return BankPolicy::ShortestPair;
    }
    throw std::invalid_argument("growth config: unknown policy \"" + s + "\"");
}

json summarize(const std::vector<GrowthTrialStats> &v) {
    uint64_t completed = 0;
    double attempts = 0, qubits = 0, size = 0, steps = 0, damaged = 0, trimmed = 0;
    json statuses = json::object();
    for (const auto &s : v) {
        completed += s.status == Status::Completed;
        attempts += static_cast<double>(s.attempts);
        qubits += static_cast<double>(s.qubits_consumed);
        damaged += static_cast<double>(s.qubits_damaged);
        trimmed += static_cast<double>(s.qubits_trimmed);
        size += s.final_size;
        steps += static_cast<double>(s.elapsed_steps);
        std::string name = status_name(s.status);
        statuses[name] = statuses.value(name, 0) + 1;
    }
    double n = static_cast<double>(v.size());
    Interval ci = binomial_ci(completed, v.size());
    return {{"trials", v.size()},
            {"completed", completed},
            {"success_rate", static_cast<double>(completed) / n},
            {"ci_95", {ci.lo, ci.hi}},
            {"mean_attempts", attempts / n},
            {"mean_qubits_consumed", qubits / n},
            {"mean_qubits_damaged", damaged / n},
            {"mean_qubits_trimmed", trimmed / n},
            {"mean_final_size", size / n},
            {"mean_elapsed_steps", steps / n},
            {"status_counts", statuses}};
}

// Checked up front so worker threads never throw.
double probability(const json &c) {
    double p = number(c, "p");
    if (!(p >= 0 && p <= 1)) {
        throw std::invalid_argument("growth config: \"p\" must be in [0, 1]");
    }
    return p;
}

size_t positive(const json &c, const char *key, size_t fallback, size_t minimum = 1) {
    size_t x = count(c, key, fallback);
    if (x < minimum) {
        throw std::invalid_argument(std::string("growth config: \"") + key + "\" is too small");
    }
    return x;
}

std::vector<double> sweep_grid(const json &c) {
    if (c.contains("ps")) {
        if (!c["ps"].is_array() || c["ps"].empty()) {
            throw std::invalid_argument("growth config: \"ps\" must be a non-empty array");
        }
        return c["ps"].get<std::vector<double>>();
    }
    return p_grid(number(c, "p_min", 0.4), number(c, "p_max", 0.6), number(c, "p_step", 0.02));
}

}  // namespace

GrowthReport run_growth_config(const json &config, uint64_t trials, uint64_t seed, unsigned threads) {
    if (!config.is_object() || !config.contains("strategy") || !config["strategy"].is_string()) {
        throw std::invalid_argument("growth config: need a \"strategy\" string");
    }
    if (trials == 0) {
        throw std::invalid_argument("growth config: trials must be positive");
    }
    std::string kind = config["strategy"].get<std::string>();
    GrowthReport rep;
    json &out = rep.json;
    out["strategy"] = kind;
    if (kind == "chain") {
        ChainConfig c{probability(config), count(config, "target")};
        c.initial_chains = count(config, "initial_chains", 0);
        c.initial_length = count(config, "initial_length", 1);
        c.max_rounds = count(config, "max_rounds", 100000);
        c.policy = policy(config);
        c.track_graph = config.value("track_graph", false);
        if (c.target_length == 0 || c.initial_length == 0) {
            throw std::invalid_argument("growth config: chain lengths must be positive");
        }
        auto v = run_trials<GrowthTrialStats>(trials, seed, threads,
                                              [&](Rng &rng) { return run_chain_strategy(c, rng).stats; });
        out.update(summarize(v));
    } else if (kind == "single_join") {
        double p = probability(config);
        size_t L = count(config, "L");
        bool tracked = config.value("track_graph", false);
        critical_length(p);
        auto v = run_trials<double>(trials, seed, threads, [&](Rng &rng) {
            return static_cast<double>(single_join(L, p, rng, tracked));
        });
        double sum = 0, sum2 = 0;
        for (double x : v) {
            sum += x;
            sum2 += x * x;
        }
        double n = static_cast<double>(v.size());
        double mean = sum / n;
        double var = n > 1 ? (sum2 - sum * mean) / (n - 1) : 0;
        double L_d = static_cast<double>(L);
        out["trials"] = v.size();
        out["mean_final_length"] = mean;
        out["stderr"] = std::sqrt(std::max(0.0, var) / n);
        out["expected"] = L == 0 ? 0.0 : 2 * p * L_d + (1 - p) * (L_d - 1);
        out["critical_length"] = critical_length(p);
    } else if (kind == "cross") {
        CrossConfig c{probability(config)};
        c.lattice = positive(config, "lattice", 2);
        c.failure_budget = number(config, "failure_budget", 1e-3);
        c.arm_buffer = count(config, "arm_buffer", 0);
        if (c.arm_buffer == 0) {
            c.arm_buffer = default_arm_buffer(c.p, c.failure_budget);
        }
        auto v = run_trials<GrowthTrialStats>(trials, seed, threads,
                                              [&](Rng &rng) { return run_cross_strategy(c, rng); });
        out["arm_buffer"] = c.arm_buffer;
        out["link_failure_probability"] = std::pow(1 - c.p, static_cast<double>(c.arm_buffer));
        out.update(summarize(v));
    } else if (kind == "microcluster") {
        MicroclusterConfig c{probability(config)};
        c.star_size = positive(config, "star_size", 5, 2);
        c.lattice = positive(config, "lattice", 2);
        auto v = run_trials<GrowthTrialStats>(trials, seed, threads,
                                              [&](Rng &rng) { return run_microcluster_strategy(c, rng); });
        out.update(summarize(v));
    } else if (kind == "percolation") {
        PercolationConfig c{count(config, "L")};
        c.arms = count(config, "arms", 4);
        c.p = probability(config);
        c.block = count(config, "block", 0);
        c.overlap = count(config, "overlap", 1);
        validate(c);
        auto v = run_trials<PercolationResult>(trials, seed, threads, [&](Rng &rng) { return run_percolation(c, rng); });
        uint64_t ok = 0;
        double cost = 0;
        for (const auto &r : v) {
            ok += r.success;
            cost += r.qubits_per_final_vertex;
        }
        Interval ci = binomial_ci(ok, v.size());
        out["trials"] = v.size();
        out["blocks_per_side"] = v.front().blocks_per_side;
        out["success_rate"] = static_cast<double>(ok) / static_cast<double>(v.size());
        out["ci_95"] = {ci.lo, ci.hi};
        out["qubits_per_final_vertex"] = ok == 0 ? 0.0 : cost / static_cast<double>(ok);
    } else if (kind == "percolation_sweep") {
        size_t L = count(config, "L");
        auto points = spanning_sweep(L, sweep_grid(config), trials, seed, threads);
        std::ostringstream csv;
        csv << "p,spanning_probability,stderr\n";
        csv.precision(17);
        json rows = json::array();
        for (const auto &pt : points) {
            csv << pt.p << ',' << pt.probability << ',' << pt.stderr << '\n';
            rows.push_back({{"p", pt.p}, {"spanning_probability", pt.probability}, {"stderr", pt.stderr}});
        }
        out["L"] = L;
        out["trials"] = trials;
        out["points"] = rows;
        rep.csv = csv.str();
    } else if (kind == "threshold") {
        std::vector<size_t> sizes = config.value("sizes", std::vector<size_t>{16, 32, 64});
        auto est = estimate_threshold(sizes, sweep_grid(config), trials, seed, threads,
                                      count(config, "bootstrap", 200));
        out["sizes"] = sizes;
        out["trials"] = trials;
        out["threshold"] = est.estimate;
        out["error"] = est.error;
        out["pair_crossings"] = est.pair_crossings;
    } else {
        throw std::invalid_argument("growth config: unknown strategy \"" + kind + "\"");
    }
    return rep;
}

}  // namespace graphforge::growth
