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

#ifndef GRAPHFORGE_STABILIZER_TABLEAU_H
#define GRAPHFORGE_STABILIZER_TABLEAU_H

#include <cstdint>
#include <initializer_list>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "graphforge/rng.h"
#include "graphforge/stabilizer/pauli_string.h"

namespace graphforge::stabilizer {

struct MeasurementResult {
    /// +1 or -1.
    int outcome;
    bool deterministic;
};

/// Stabilizer state on n qubits, stored as n stabilizer generators plus n
/// destabilizer rows (the destabilizers make Pauli measurements O(n^2)).
///
/// Generator i is `generator(i)`; phases of generators are always +-1.
/// Tableaux are plain values and every operation mutates in place.
class Tableau {
   public:
    /// The all-zeros basis state: generator i is +Z_i.
    explicit Tableau(size_t num_qubits = 0);

    /// Generator i is (-1)^bits[i] Z_i. `bits` holds '0'/'1' characters.
    static Tableau from_basis_state(std::string_view bits);

    /// Builds a tableau from an explicit generator list. Throws
    /// std::invalid_argument unless the list has n Hermitian, pairwise
    /// commuting, independent n-qubit Paulis.
    static Tableau from_generators(const std::vector<PauliString> &generators);
    static Tableau from_generators(const std::vector<std::string> &generators);
    static Tableau from_generators(std::initializer_list<std::string_view> generators);

    size_t num_qubits() const {
        return n_;
    }

    PauliString generator(size_t i) const;
    std::vector<PauliString> generators() const;
    PauliString destabilizer(size_t i) const;

    void apply_h(size_t q);
    void apply_p(size_t q);
    void apply_p_dag(size_t q);
    void apply_x(size_t q);
    void apply_y(size_t q);
    void apply_z(size_t q);
    void apply_cz(size_t a, size_t b);

    /// True iff the outcome of measuring `observable` is already determined.
    bool is_deterministic(const PauliString &observable) const;

    /// Measures a Hermitian Pauli observable.
    ///
    /// Random case: the lowest-index anticommuting generator is replaced by
    /// outcome * observable and every other anticommuting row is multiplied by
    /// it. `forced`, when set, selects the outcome instead of the coin flip;
    /// forcing an impossible deterministic outcome throws std::invalid_argument.
    MeasurementResult measure(const PauliString &observable, Rng &rng, std::optional<int> forced = std::nullopt);

    /// Sign s such that s * (unsigned p) is in the stabilizer group, or
    /// nullopt when neither sign is.
    std::optional<int> group_sign(const PauliString &p) const;
    bool stabilizes(const PauliString &p) const;

    /// Generators in reduced row-echelon form (pivot order X_0, Z_0, X_1, ...).
    /// Two tableaux generate the same group iff their canonical forms match.
    std::vector<PauliString> canonical_generators() const;
    bool same_group(const Tableau &other) const;

    /// Empty string when all invariants hold, otherwise a description of the
    /// first violation: generators commute, are independent over GF(2) and
    /// carry +-1 phases.
    std::string validate() const;

    /// One generator per line, "+XZII" style.
    std::string str() const;

    bool operator==(const Tableau &other) const;

   private:
    size_t n_;
    size_t words_;
    // Rows 0..n-1 are destabilizers, rows n..2n-1 are stabilizers.
    std::vector<uint64_t> xs_;
    std::vector<uint64_t> zs_;
    std::vector<uint8_t> log_i_;

    uint64_t *row_x(size_t r) {
        return xs_.data() + r * words_;
    }
    uint64_t *row_z(size_t r) {
        return zs_.data() + r * words_;
    }
    const uint64_t *row_x(size_t r) const {
        return xs_.data() + r * words_;
    }
    const uint64_t *row_z(size_t r) const {
        return zs_.data() + r * words_;
    }
    PauliString row(size_t r) const;
    void set_row(size_t r, const PauliString &p);
    /// row[target] = row[target] * row[source].
    void row_mul(size_t target, size_t source);
    bool row_anticommutes(size_t r, const PauliString &p) const;
    void check_qubit(size_t q) const;
};

}  // namespace graphforge::stabilizer

#endif
