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

#ifndef GRAPHFORGE_ORACLE_STATE_VECTOR_H
#define GRAPHFORGE_ORACLE_STATE_VECTOR_H

#include <Eigen/Dense>
#include <complex>
#include <optional>
#include <vector>

#include "graphforge/graph/graph.h"
#include "graphforge/rng.h"
#include "graphforge/stabilizer/pauli_string.h"
#include "graphforge/stabilizer/tableau.h"

namespace graphforge::oracle {

using Complex = std::complex<double>;
using Matrix = Eigen::MatrixXcd;
using Vector = Eigen::VectorXcd;

/// Largest qubit count accepted by the graph-state builders.
inline constexpr size_t kMaxQubits = 12;

/// Dense pure state over sites of dimension 2 or 3. Site 0 is the most
/// significant digit of the amplitude index.
class StateVector {
   public:
    /// |0...0> on the given site dimensions.
    explicit StateVector(std::vector<size_t> dims = {});
    static StateVector qubits(size_t n);
    static StateVector from_amplitudes(std::vector<size_t> dims, Vector amplitudes);

    size_t num_sites() const {
        return dims_.size();
    }
    const std::vector<size_t> &dims() const {
        return dims_;
    }
    const Vector &amplitudes() const {
        return amps_;
    }
    Complex amplitude(size_t index) const {
        return amps_[index];
    }

    double norm() const {
        return amps_.norm();
    }
    void normalize();

    /// Applies a unitary to the listed sites (first listed site is the most
    /// significant in `u`). Throws std::invalid_argument on dimension
    /// mismatch, repeated sites, or a matrix that is not unitary within 1e-10.
    void apply_unitary(const Matrix &u, const std::vector<size_t> &sites);
    /// Same, without the unitarity check (projectors, bras).
    void apply_operator(const Matrix &op, const std::vector<size_t> &sites);

    /// Applies the Pauli operator including its i^k phase. Qubit sites only.
    void apply_pauli(const stabilizer::PauliString &p);
    /// <psi|P|psi> for a normalized state.
    Complex expectation(const stabilizer::PauliString &p) const;

    struct Outcome {
        int outcome;
        double probability;
    };
    /// Projective measurement of a Hermitian Pauli. `forced` selects the
    /// branch; forcing a branch of probability below 1e-12 throws.
    Outcome measure_pauli(const stabilizer::PauliString &p, Rng &rng, std::optional<int> forced = std::nullopt);

    /// Probability of each basis vector (columns of `basis`, orthonormal) on
    /// one site.
    std::vector<double> basis_probabilities(size_t site, const Matrix &basis) const;

    /// Projects `site` onto basis vector `column` of `basis` and removes the
    /// site. Returns the branch probability; the result is renormalized.
    double project_out(size_t site, const Matrix &basis, size_t column);

    /// Reorders sites: new site k is old site order[k].
    StateVector permuted(const std::vector<size_t> &order) const;

    /// Tensor product, this first.
    StateVector tensor(const StateVector &other) const;

   private:
    std::vector<size_t> dims_;
    Vector amps_;

    void check_sites(const std::vector<size_t> &sites, const Matrix &op) const;
    size_t stride(size_t site) const;
};

/// |<a|b>|^2 / (|a|^2 |b|^2).
double fidelity(const StateVector &a, const StateVector &b);

namespace gates {
Matrix h();
Matrix p();
Matrix x();
Matrix y();
Matrix z();
Matrix cz();
/// Pauli letter I, X, Y or Z.
Matrix pauli(char p);
/// diag(1, e^{i phi}).
Matrix phase(double phi);
/// e^{i theta Z}.
Matrix rz(double theta);
/// e^{i theta X}.
Matrix rx(double theta);
/// Unitary of a local Clifford word (application order).
Matrix local_clifford(graph::LocalClifford c);
/// Columns |0>, |1> of the X, Y or Z eigenbasis ordered (+1, -1).
Matrix eigenbasis(char pauli);
}  // namespace gates

/// CZ on every edge of |+>^n, then the vertex ops. Throws
/// std::invalid_argument above kMaxQubits.
StateVector build_constructive_graph_state(const graph::Graph &g);

/// <s|P|s> >= 1 - 1e-10.
bool stabilized_by(const StateVector &s, const stabilizer::PauliString &p);

/// Per-site local Cliffords C with |<s1| C |s2>| >= 1 - 1e-8, or nullopt.
/// Exhaustive over 24^n; throws std::invalid_argument for n > 5.
std::optional<std::vector<graph::LocalClifford>> lc_equivalent_states(const StateVector &s1, const StateVector &s2);

/// Stabilizer generators of a qubit state, found by scanning all 4^n Paulis
/// for expectation +-1. Throws std::invalid_argument if the state is not a
/// stabilizer state or n > 8.
stabilizer::Tableau stabilizer_tableau_of(const StateVector &s);

}  // namespace graphforge::oracle

#endif
