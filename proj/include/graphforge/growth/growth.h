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

#ifndef GRAPHFORGE_GROWTH_GROWTH_H
#define GRAPHFORGE_GROWTH_GROWTH_H

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "graphforge/graph/graph.h"
#include "graphforge/rng.h"
#include "graphforge/stats.h"
#include "json.hpp"

namespace graphforge::growth {

enum class SuccessEffect { CZ, ParityProjection };

/// A failed attempt always Z-measures both qubits out (graph Z rule).
struct ArchitectureModel {
    double p;
    SuccessEffect success = SuccessEffect::CZ;
    /// Allowed pairs when the hardware is a fixed lattice; any pair when unset.
    std::optional<graph::Graph> connectivity;
};

struct EntangleOutcome {
    bool success;
    /// Z outcomes (+1 / -1) of the damaged qubits on failure.
    int outcome_a = 0;
    int outcome_b = 0;
};

/// One entangling attempt between vertices a and b of g. On failure a and b
/// are removed (later indices shift down) and neighbours get the Z-rule
/// corrections. Throws std::invalid_argument for a == b, out-of-range
/// vertices or a pair the connectivity forbids.
EntangleOutcome attempt_entangle(graph::Graph &g, size_t a, size_t b, const ArchitectureModel &arch, Rng &rng);

enum class Status { Completed, BankExhausted, BudgetExhausted, LinkFailed };
const char *status_name(Status s);

struct GrowthTrialStats {
    uint64_t attempts = 0;
    uint64_t successes = 0;
    /// Qubits prepared for the trial (chain bank, crosses or stars).
    uint64_t qubits_consumed = 0;
    /// Qubits Z-measured out by failed attempts.
    uint64_t qubits_damaged = 0;
    /// Leftover buffer qubits removed by X or Y measurements.
    uint64_t qubits_trimmed = 0;
    /// Longest chain, or completed lattice links.
    double final_size = 0;
    uint64_t elapsed_steps = 0;
    Status status = Status::Completed;
};

// Chains ---------------------------------------------------------------

enum class BankPolicy { LongestPair, RandomPair, ShortestPair };

struct ChainConfig {
    double p;
    size_t target_length;
    /// Chains in the starting bank; 0 means target_length.
    size_t initial_chains = 0;
    size_t initial_length = 1;
    size_t max_rounds = 100000;
    BankPolicy policy = BankPolicy::LongestPair;
    /// Keep an explicit graph per chain instead of lengths only.
    bool track_graph = false;
};

struct ChainResult {
    GrowthTrialStats stats;
    /// Longest chain after each round, starting with the initial bank.
    std::vector<size_t> longest;
    std::vector<size_t> final_lengths;
};

/// Each round pairs the bank per the policy and joins every pair end to
/// end: success gives L1 + L2, failure leaves L1 - 1 and L2 - 1. Stops when
/// a chain reaches the target, fewer than two chains remain, or the round
/// budget runs out.
ChainResult run_chain_strategy(const ChainConfig &c, Rng &rng);

/// Longest chain after joining two chains of length L once.
size_t single_join(size_t L, double p, Rng &rng, bool track_graph = false);

/// p^-1 - 1.
double critical_length(double p);

// Crosses and micro-clusters ------------------------------------------

/// Smallest buffer with (1-p)^k <= budget; 1 when p = 1.
size_t default_arm_buffer(double p, double failure_budget);

struct LinkResult {
    bool success;
    uint64_t attempts;
};

/// Retries a link between buffers of size k_a and k_b; each failure burns
/// one qubit per side.
LinkResult attempt_link(size_t k_a, size_t k_b, double p, Rng &rng);

struct CrossConfig {
    double p;
    /// N for an N x N target lattice.
    size_t lattice = 2;
    /// Qubits per arm; 0 selects default_arm_buffer(p, failure_budget).
    size_t arm_buffer = 0;
    double failure_budget = 1e-3;
};

GrowthTrialStats run_cross_strategy(const CrossConfig &c, Rng &rng);

struct MicroclusterConfig {
    double p;
    /// Qubits per star, centre included.
    size_t star_size = 5;
    size_t lattice = 2;
};

/// Stars share their leaves among up to four links, processed row-major.
GrowthTrialStats run_microcluster_strategy(const MicroclusterConfig &c, Rng &rng);

// Percolation -----------------------------------------------------------

struct PercolationConfig {
    /// Sites per side.
    size_t L;
    /// Leaves per micro-cluster (bond attempts per site).
    size_t arms = 4;
    double p = 0.5;
    /// Block side; 0 means one block covering the lattice.
    size_t block = 0;
    size_t overlap = 1;
};

/// Throws std::invalid_argument unless 2 <= L, block <= L, 1 <= overlap < block.
void validate(const PercolationConfig &c);

/// One uniform per bond: horizontal bonds r*(L-1)+c first, then vertical
/// bonds L*(L-1) + r*L + c. A bond is open when its uniform is below p.
std::vector<double> sample_bond_uniforms(size_t L, Rng &rng);

struct PercolationResult {
    bool success;
    size_t blocks_per_side;
    std::vector<bool> block_success;
    /// Site index per block in the renormalized lattice (row-major), when
    /// successful.
    std::vector<size_t> representatives;
    size_t open_bonds;
    /// Pauli cleanup, counted not executed.
    size_t z_removals = 0;
    size_t xy_removals = 0;
    double qubits_per_final_vertex = 0;
};

/// A block succeeds when one of its clusters touches all four sides; the
/// strategy succeeds when every block does and the clusters of adjacent
/// blocks share a site in their overlap.
PercolationResult percolation_trial(const PercolationConfig &c, const std::vector<double> &uniforms);
PercolationResult run_percolation(const PercolationConfig &c, Rng &rng);

/// Smallest p at which the whole lattice has an open left-right crossing,
/// found by adding bonds in uniform order.
double crossing_threshold(size_t L, const std::vector<double> &uniforms);

struct SweepPoint {
    double p;
    double probability;
    double stderr;
};

/// Left-right spanning probability at each p, sharing bond uniforms across
/// all p for a given trial.
std::vector<SweepPoint> spanning_sweep(size_t L, const std::vector<double> &ps, uint64_t trials, uint64_t seed,
                                       unsigned threads = 1);

struct ThresholdEstimate {
    double estimate;
    double error;
    /// Crossing of each consecutive size pair.
    std::vector<double> pair_crossings;
    std::vector<std::vector<SweepPoint>> curves;
};

/// Crossing point of the spanning curves of consecutive sizes, averaged,
/// with a bootstrap error. Throws std::invalid_argument with fewer than two
/// sizes or when the curves do not cross inside the sweep.
ThresholdEstimate estimate_threshold(const std::vector<size_t> &sizes, const std::vector<double> &ps, uint64_t trials,
                                     uint64_t seed, unsigned threads = 1, size_t bootstrap = 200);

/// p_min, p_min + step, ..., p_max (inclusive up to rounding).
std::vector<double> p_grid(double p_min, double p_max, double step);

// Trials and configs --------------------------------------------------------

/// Runs body(rng) for each trial with Rng(trial_seed(seed, i)); results are
/// in trial order whatever the thread count.
template <class Result, class Body>
std::vector<Result> run_trials(uint64_t trials, uint64_t seed, unsigned threads, Body body) {
    std::vector<Result> out(trials);
    parallel_chunks(trials, threads, [&](uint64_t begin, uint64_t end, unsigned) {
        for (uint64_t i = begin; i < end; i++) {
            Rng rng(trial_seed(seed, i));
            out[i] = body(rng);
        }
    });
    return out;
}

struct GrowthReport {
    nlohmann::json json;
    /// Present for sweeps: "p,spanning_probability,stderr" rows.
    std::optional<std::string> csv;
};

/// {"strategy": "chain" | "single_join" | "cross" | "microcluster" |
/// "percolation" | "percolation_sweep" | "threshold", ...}.
GrowthReport run_growth_config(const nlohmann::json &config, uint64_t trials, uint64_t seed, unsigned threads);

}  // namespace graphforge::growth

#endif
