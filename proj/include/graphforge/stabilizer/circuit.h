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

#ifndef GRAPHFORGE_STABILIZER_CIRCUIT_H
#define GRAPHFORGE_STABILIZER_CIRCUIT_H

#include <string>
#include <vector>

#include "graphforge/rng.h"
#include "graphforge/stabilizer/tableau.h"
#include "json.hpp"

namespace graphforge::stabilizer {

/// One circuit instruction. Gate names: H, P, CZ, MX, MY, MZ.
struct Instruction {
    std::string gate;
    std::vector<size_t> targets;

    bool operator==(const Instruction &) const = default;
};

using Circuit = std::vector<Instruction>;

/// Parses [{"gate": "H", "targets": [0]}, ...]. Throws std::invalid_argument
/// with the offending instruction index on malformed input.
Circuit circuit_from_json(const nlohmann::json &j);
nlohmann::json circuit_to_json(const Circuit &c);

/// Applies the circuit in order and returns the outcome (+1/-1) of every
/// measurement instruction.
std::vector<int> run_clifford_circuit(Tableau &t, const Circuit &c, Rng &rng);

/// {"n": n, "generators": ["+XZ", ...]}.
nlohmann::json tableau_to_json(const Tableau &t);
Tableau tableau_from_json(const nlohmann::json &j);

}  // namespace graphforge::stabilizer

#endif
