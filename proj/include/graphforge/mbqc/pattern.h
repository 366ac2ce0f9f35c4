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

#ifndef GRAPHFORGE_MBQC_PATTERN_H
#define GRAPHFORGE_MBQC_PATTERN_H

#include <optional>
#include <vector>

#include "graphforge/graph/graph.h"
#include "graphforge/oracle/state_vector.h"
#include "graphforge/rng.h"
#include "json.hpp"

namespace graphforge::mbqc {

using oracle::Matrix;
using oracle::StateVector;

enum class Basis { X, Y, Z, XY };

/// One measurement. XY(angle) projects onto (|0> +- e^{i angle}|1>)/sqrt2; X
/// is XY(0). Y with a flow successor is XY(pi/2); Y without one is a bridge
/// measurement handled by the graph Y-rule.
struct Step {
    size_t vertex;
    Basis basis;
    double angle = 0;
    std::optional<size_t> flow = std::nullopt;
    /// Earlier step indices whose effective outcomes flip this step: for
    /// XY steps the angle becomes (-1)^x angle + z pi; for Z and bridge Y
    /// steps they reinterpret the raw outcome.
    std::vector<size_t> x_deps = {};
    std::vector<size_t> z_deps = {};
};

/// Outcome bits use 0 for eigenvalue +1.
struct MeasurementPattern {
    graph::Graph graph;
    std::vector<size_t> inputs;
    std::vector<size_t> outputs;
    std::vector<Step> steps;
    /// Per output, the steps whose effective outcomes set its X / Z byproduct.
    std::vector<std::vector<size_t>> output_x_deps;
    std::vector<std::vector<size_t>> output_z_deps;
    /// Logical map from the inputs to the outputs (all outcomes zero), when
    /// known. Site order follows `inputs` / `outputs`.
    std::optional<Matrix> target;
};

/// Orders the steps consistently with the flow and Z/bridge constraints
/// (stable with respect to the given order) and fills in all dependency
/// sets. Throws std::invalid_argument for malformed patterns or cyclic
/// constraints.
void finalize_pattern(MeasurementPattern &p);

/// Empty string when the pattern invariants hold.
std::string validate_pattern(const MeasurementPattern &p);

/// Angle actually measured for XY(alpha) given the parities of its X and Z
/// dependencies: (-1)^px alpha + pz pi.
double adapted_angle(double alpha, int px, int pz);

struct PauliFrame {
    std::vector<uint8_t> x;
    std::vector<uint8_t> z;
};

struct RunResult {
    /// Output sites in `outputs` order, before correction.
    StateVector raw_output;
    /// X^x Z^z removed from raw_output.
    StateVector corrected_output;
    PauliFrame frame;
    std::vector<int> raw_outcomes;
    std::vector<int> effective_outcomes;
};

/// Entangles the input into the graph state, runs the steps with adaptive
/// angles and returns the outputs. `forced`, when given, fixes every raw
/// outcome. Throws std::invalid_argument above oracle::kMaxQubits vertices.
RunResult run_pattern(const MeasurementPattern &p, const StateVector &input, Rng &rng,
                      const std::optional<std::vector<int>> &forced = std::nullopt);

/// Fidelity of the corrected output with target * input.
double target_fidelity(const MeasurementPattern &p, const StateVector &input, const RunResult &r);

nlohmann::json pattern_to_json(const MeasurementPattern &p);
MeasurementPattern pattern_from_json(const nlohmann::json &j);

}  // namespace graphforge::mbqc

#endif
