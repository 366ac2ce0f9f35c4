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

#ifndef GRAPHFORGE_GRAPH_LOCAL_CLIFFORD_H
#define GRAPHFORGE_GRAPH_LOCAL_CLIFFORD_H

#include <array>
#include <cstdint>
#include <string>
#include <string_view>
#include <utility>

#include "graphforge/stabilizer/pauli_string.h"
#include "graphforge/stabilizer/tableau.h"

namespace graphforge::graph {

/// An element of the 24-element single-qubit Clifford group modulo phase.
///
/// Words are written in application order: "HP" means apply H, then P, so
/// the unitary is P*H. Letters are H, P, X, Y, Z.
class LocalClifford {
   public:
    LocalClifford() = default;

    static LocalClifford identity() {
        return {};
    }
    /// Throws std::invalid_argument on letters outside {H,P,X,Y,Z}.
    static LocalClifford from_word(std::string_view word);
    static const std::array<LocalClifford, 24> &all();

    /// Shortest word for this element; ties broken by letter order H,P,X,Y,Z.
    const std::string &word() const;

    /// Apply this element, then `next`.
    LocalClifford then(LocalClifford next) const;
    LocalClifford inverse() const;

    /// C P C^dagger for P in {X,Y,Z}: returns (sign, pauli).
    std::pair<int, char> conjugate(char pauli) const;

    bool is_identity() const {
        return index_ == 0;
    }
    uint8_t index() const {
        return index_;
    }
    bool operator==(const LocalClifford &) const = default;

   private:
    explicit LocalClifford(uint8_t index) : index_(index) {
    }
    uint8_t index_ = 0;
};

/// Conjugates qubit `q` of `p` by `c` in place.
void conjugate_qubit(stabilizer::PauliString &p, size_t q, LocalClifford c);

/// Applies the gates of `c`'s word to qubit q of the tableau.
void apply_local_clifford(stabilizer::Tableau &t, size_t q, LocalClifford c);

}  // namespace graphforge::graph

#endif
