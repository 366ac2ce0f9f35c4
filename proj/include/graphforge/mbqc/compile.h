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

#ifndef GRAPHFORGE_MBQC_COMPILE_H
#define GRAPHFORGE_MBQC_COMPILE_H

#include <vector>

#include "graphforge/mbqc/pattern.h"
#include "json.hpp"

namespace graphforge::mbqc {

/// J(theta) = H e^{i theta Z}.
Matrix j_gate(double theta);

/// u = e^{i g} e^{i xi Z} e^{i zeta X} e^{i theta Z}.
struct EulerAngles {
    double theta;
    double zeta;
    double xi;
};
EulerAngles euler_angles(const Matrix &u);

/// Chain implementing J(thetas.back()) ... J(thetas.front()).
MeasurementPattern chain_pattern(const std::vector<double> &thetas);

/// Chain implementing u up to global phase: H alone uses 2 sites, the
/// identity 3 sites, anything else the 5-site Euler chain (three angles and
/// a trailing X measurement that cancels the leading H).
MeasurementPattern pattern_for_single_qubit_unitary(const Matrix &u);

enum class EntanglingMode { DirectEdge, IntermediateY, IntermediateZ };

/// Local Clifford on each wire that follows CZ after a Y-measured bridge
/// vertex (outcome 0). Found by oracle search; see the unit tests.
extern const char *const kBridgeCorrectionWord;

/// DirectEdge: (H x H) followed by CZ on two 2-site wires.
/// IntermediateY / IntermediateZ: two 3-site wires joined through a bridge
/// vertex measured last; Y gives (S x S) CZ, Z gives the identity.
MeasurementPattern entangling_pattern(EntanglingMode mode);

struct LogicalGate {
    enum class Kind { J, CZ, BridgeCZ };
    Kind kind;
    size_t wire;
    size_t other = 0;
    double theta = 0;
};

struct LogicalCircuit {
    size_t wires;
    std::vector<LogicalGate> gates;
};

/// Unitary of the circuit on its wires (wire 0 most significant). A
/// BridgeCZ contributes (S x S) CZ.
Matrix logical_unitary(const LogicalCircuit &c);

/// [{"J": 0.7, "wire": 0}, {"CZ": [0, 1]}, {"CZ": [0, 1], "bridge": true}].
LogicalCircuit circuit_from_json(const nlohmann::json &j, size_t wires);
nlohmann::json circuit_to_json(const LogicalCircuit &c);

struct CompileOptions {
    /// Adds a Z-measured spacer vertex beside every J site that has a
    /// neighbouring wire, as on a regular lattice. Spacers get the highest
    /// vertex indices so removing them leaves the minimal pattern's graph.
    bool pad = false;
};

/// Superimposes chain segments (one site per J) and CZ edges or bridges.
/// Throws std::invalid_argument for more than 3 wires or more than
/// oracle::kMaxQubits vertices.
MeasurementPattern compile_circuit(const LogicalCircuit &c, CompileOptions options = {});

/// Vertices of a padded pattern that are Z-measured spacers.
std::vector<size_t> spacer_vertices(const MeasurementPattern &p);

/// Removes every Z-measured vertex via the graph Z-rule (outcome +1) and
/// drops the corresponding steps; the result runs without them.
MeasurementPattern strip_z_sites(const MeasurementPattern &p);

}  // namespace graphforge::mbqc

#endif
