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

#ifndef GRAPHFORGE_PHOTONIC_PROTOCOLS_H
#define GRAPHFORGE_PHOTONIC_PROTOCOLS_H

#include <map>
#include <optional>
#include <string>
#include <vector>

#include "graphforge/photonic/fock.h"
#include "graphforge/stats.h"
#include "json.hpp"

namespace graphforge::photonic {

/// Level labels of the emitting nodes. Duan-Kimble reuses them with |0> and
/// |1> reached by h and v emission.
constexpr uint8_t kLevel0 = 0;
constexpr uint8_t kLevel1 = 1;
constexpr uint8_t kLevelE = 2;

/// One pure leaf of a protocol's outcome tree, photons traced out.
struct ProtocolBranch {
    /// Clicks per heralding round, one entry per detector.
    std::vector<std::vector<int>> clicks;
    double probability;
    bool success;
    /// For successes, phi in (|01> + e^{i phi}|10>)/sqrt2 as read off the
    /// state; in context mode the phase that was corrected.
    double phase = 0;
    /// Matter qubits (levels 0 and 1 only), normalized.
    StateVector state;
    /// Success branch whose state is the heralded target.
    bool ideal = false;
};

struct CabrilloParams {
    double theta;
    double T;
    /// Extra phase on node B's path to the beam splitter.
    double path_phase = 0;
};

/// Weak excitation cos|0> + sin|e> on both nodes, |e> -> |1> emission,
/// loss, 50/50 beam splitter, two detectors. Success is exactly one click.
std::vector<ProtocolBranch> cabrillo_branches(const CabrilloParams &p);

struct DoubleHeraldParams {
    double T;
    double path_phase = 0;
    /// Qubit register to act on instead of |+>|+>; nodes a and b emit.
    std::optional<StateVector> context = std::nullopt;
    size_t a = 0;
    size_t b = 1;
};

/// Round-one branches only: pi pulse |1> -> |e>, emission, one heralding.
std::vector<ProtocolBranch> double_heralding_round1(const DoubleHeraldParams &p);

/// Full protocol. On success X x X is undone; in context mode the known
/// Z on qubit a is also applied when the two rounds disagree in sign, so
/// the result is the odd parity projection of the context.
std::vector<ProtocolBranch> double_heralding_branches(const DoubleHeraldParams &p);

struct DuanKimbleParams {
    double g0;
    double g1;
    double T;
};

/// Both nodes start in |e> and emit g0|0>h + g1|1>v; waveplate on b, PBS,
/// then 45 degree waveplate and PBS on each output. Success is one left and
/// one right click.
std::vector<ProtocolBranch> duan_kimble_branches(const DuanKimbleParams &p);

enum class Analytic { CabrilloP1, CabrilloP2, CabrilloEta };

/// Closed forms for weak-excitation single-photon heralding.
double analytic(Analytic kind, double theta, double T);

/// Weights (Psi, |11>) of the state after the first double-heralding round.
std::pair<double, double> double_heralding_weights(double T);

struct ProtocolRun {
    size_t branch;
    bool success;
    std::vector<std::vector<int>> clicks;
    double phase;
    /// Matter state conditioned on the observed clicks.
    Ensemble state;
};

/// Samples one outcome from an exhaustive branch list.
ProtocolRun sample_branch(const std::vector<ProtocolBranch> &branches, Rng &rng);

ProtocolRun run_cabrillo(const CabrilloParams &p, Rng &rng);
ProtocolRun run_double_heralding(const DoubleHeraldParams &p, Rng &rng);
ProtocolRun run_duan_kimble(const DuanKimbleParams &p, Rng &rng);

struct ProtocolStats {
    uint64_t trials = 0;
    uint64_t successes = 0;
    /// Successes landing on a non-ideal branch.
    uint64_t impure_successes = 0;
    double success_rate = 0;
    Interval success_ci{0, 1};
    double eta_estimate = 0;
    Interval eta_ci{0, 1};
    /// Keyed by click record, rounds separated by '|'.
    std::map<std::string, uint64_t> branch_counts;
};

/// Monte Carlo over `trials` independent runs with seeds trial_seed(seed, i).
/// The result does not depend on `threads`.
ProtocolStats simulate(const std::vector<ProtocolBranch> &branches, uint64_t trials, uint64_t seed,
                       unsigned threads = 1);

/// Exact success probability of a branch list.
double success_probability(const std::vector<ProtocolBranch> &branches);

std::string click_key(const std::vector<std::vector<int>> &clicks);

/// Runs a protocol config {"protocol", "theta", "T", "g0", "g1",
/// "path_phase"} for `trials` trials and returns the stats JSON, including
/// the exact enumeration and closed forms where they exist.
nlohmann::json run_protocol_config(const nlohmann::json &config, uint64_t trials, uint64_t seed, unsigned threads);

}  // namespace graphforge::photonic

#endif
