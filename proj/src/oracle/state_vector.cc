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

#include "graphforge/oracle/state_vector.h"

#include <algorithm>
#include <bit>
#include <cmath>
#include <numeric>
#include <stdexcept>

#include "graphforge/stabilizer/gf2.h"

namespace graphforge::oracle {

using stabilizer::PauliString;

namespace {

constexpr double kUnitaryTol = 1e-10;
constexpr double kZeroBranch = 1e-12;

size_t product(const std::vector<size_t> &dims) {
    return std::accumulate(dims.begin(), dims.end(), size_t{1}, std::multiplies<>());
}

void check_qubits_only(const std::vector<size_t> &dims, size_t n) {
    if (dims.size() != n) {
        throw std::invalid_argument("Pauli size does not match the number of sites");
    }
    for (size_t d : dims) {
        if (d != 2) {
            throw std::invalid_argument("Pauli operators need qubit sites");
        }
    }
}

// P|psi> including the i^k phase; qubit q is bit (n-1-q) of the index.
Vector apply_pauli_vector(const Vector &amps, const PauliString &p) {
    size_t n = p.num_qubits();
    uint64_t xmask = 0, zmask = 0;
    int ny = 0;
    for (size_t q = 0; q < n; q++) {
        uint64_t bit = uint64_t{1} << (n - 1 - q);
        if (p.x(q)) {
            xmask |= bit;
        }
        if (p.z(q)) {
            zmask |= bit;
        }
        ny += p.x(q) && p.z(q);
    }
    static const Complex powers[] = {1, Complex(0, 1), -1, Complex(0, -1)};
    Complex phase = powers[(p.log_i() + ny) & 3];
    Vector out(amps.size());
    for (uint64_t i = 0; i < static_cast<uint64_t>(amps.size()); i++) {
        double s = (std::popcount(i & zmask) & 1) ? -1.0 : 1.0;
        out[i ^ xmask] = phase * s * amps[i];
    }
    return out;
}

}  // namespace

StateVector::StateVector(std::vector<size_t> dims) : dims_(std::move(dims)) {
    for (size_t d : dims_) {
        if (d != 2 && d != 3) {
            throw std::invalid_argument("site dimensions must be 2 or 3");
        }
    }
    amps_ = Vector::Zero(product(dims_));
    amps_[0] = 1;
}

StateVector StateVector::qubits(size_t n) {
    return StateVector(std::vector<size_t>(n, 2));
}

StateVector StateVector::from_amplitudes(std::vector<size_t> dims, Vector amplitudes) {
    StateVector s(std::move(dims));
    if (static_cast<size_t>(amplitudes.size()) != product(s.dims_)) {
        throw std::invalid_argument("amplitude count does not match the site dimensions");
    }
    s.amps_ = std::move(amplitudes);
    return s;
}

void StateVector::normalize() {
    double nrm = norm();
    if (nrm == 0) {
        throw std::domain_error("cannot normalize the zero vector");
    }
    amps_ /= nrm;
}

size_t StateVector::stride(size_t site) const {
    size_t s = 1;
    for (size_t k = site + 1; k < dims_.size(); k++) {
        s *= dims_[k];
    }
    return s;
}

void StateVector::check_sites(const std::vector<size_t> &sites, const Matrix &op) const {
    size_t d = 1;
    for (size_t i = 0; i < sites.size(); i++) {
        if (sites[i] >= dims_.size()) {
            throw std::out_of_range("site index out of range");
        }
        for (size_t j = 0; j < i; j++) {
            if (sites[i] == sites[j]) {
                throw std::invalid_argument("sites must be distinct");
            }
        }
        d *= dims_[sites[i]];
    }
    if (static_cast<size_t>(op.rows()) != d || static_cast<size_t>(op.cols()) != d) {
        throw std::invalid_argument("operator dimension does not match the sites");
    }
}

void StateVector::apply_unitary(const Matrix &u, const std::vector<size_t> &sites) {
    check_sites(sites, u);
    Matrix defect = u.adjoint() * u - Matrix::Identity(u.rows(), u.cols());
    if (defect.cwiseAbs().maxCoeff() > kUnitaryTol) {
        throw std::invalid_argument("matrix is not unitary");
    }
    apply_operator(u, sites);
}

void StateVector::apply_operator(const Matrix &op, const std::vector<size_t> &sites) {
    check_sites(sites, op);
    size_t d = op.rows();
    std::vector<size_t> strides, local_dims;
    for (size_t s : sites) {
        strides.push_back(stride(s));
        local_dims.push_back(dims_[s]);
    }
    std::vector<size_t> offsets(d);
    for (size_t k = 0; k < d; k++) {
        size_t rem = k, off = 0;
        for (size_t i = sites.size(); i-- > 0;) {
            off += (rem % local_dims[i]) * strides[i];
            rem /= local_dims[i];
        }
        offsets[k] = off;
    }
    Vector buf(d);
    for (size_t base = 0; base < static_cast<size_t>(amps_.size()); base++) {
        bool zero_digits = true;
        for (size_t i = 0; i < sites.size() && zero_digits; i++) {
            zero_digits = (base / strides[i]) % local_dims[i] == 0;
        }
        if (!zero_digits) {
            continue;
        }
        for (size_t k = 0; k < d; k++) {
            buf[k] = amps_[base + offsets[k]];
        }
        Vector out = op * buf;
        for (size_t k = 0; k < d; k++) {
            amps_[base + offsets[k]] = out[k];
        }
    }
}

void StateVector::apply_pauli(const PauliString &p) {
    check_qubits_only(dims_, p.num_qubits());
    amps_ = apply_pauli_vector(amps_, p);
}

Complex StateVector::expectation(const PauliString &p) const {
    check_qubits_only(dims_, p.num_qubits());
    return amps_.dot(apply_pauli_vector(amps_, p));
}

StateVector::Outcome StateVector::measure_pauli(const PauliString &p, Rng &rng, std::optional<int> forced) {
    check_qubits_only(dims_, p.num_qubits());
    if (!p.is_hermitian()) {
        throw std::invalid_argument("observable is not Hermitian");
    }
    if (forced && *forced != 1 && *forced != -1) {
        throw std::invalid_argument("forced outcome must be +1 or -1");
    }
    Vector pp = apply_pauli_vector(amps_, p);
    Vector plus = (amps_ + pp) / 2.0;
    double norm2 = amps_.squaredNorm();
    double p_plus = plus.squaredNorm() / norm2;
    int outcome;
    if (forced) {
        outcome = *forced;
    } else {
        outcome = rng.uniform() < p_plus ? 1 : -1;
    }
    double prob = outcome == 1 ? p_plus : 1 - p_plus;
    if (prob < kZeroBranch) {
        throw std::invalid_argument("measurement branch has zero probability");
    }
    amps_ = outcome == 1 ? plus : Vector((amps_ - pp) / 2.0);
    normalize();
    return {outcome, prob};
}

std::vector<double> StateVector::basis_probabilities(size_t site, const Matrix &basis) const {
    if (site >= dims_.size()) {
        throw std::out_of_range("site index out of range");
    }
    std::vector<double> out;
    for (Eigen::Index c = 0; c < basis.cols(); c++) {
        Matrix bra = basis.col(c).adjoint();
        double total = 0;
        size_t st = stride(site), d = dims_[site];
        for (size_t base = 0; base < static_cast<size_t>(amps_.size()); base++) {
            if ((base / st) % d != 0) {
                continue;
            }
            Complex acc = 0;
            for (size_t k = 0; k < d; k++) {
                acc += bra(0, k) * amps_[base + k * st];
            }
            total += std::norm(acc);
        }
        out.push_back(total / amps_.squaredNorm());
    }
    return out;
}

double StateVector::project_out(size_t site, const Matrix &basis, size_t column) {
    if (site >= dims_.size()) {
        throw std::out_of_range("site index out of range");
    }
    if (static_cast<size_t>(basis.rows()) != dims_[site] || column >= static_cast<size_t>(basis.cols())) {
        throw std::invalid_argument("basis does not match the site dimension");
    }
    size_t st = stride(site), d = dims_[site];
    std::vector<size_t> new_dims = dims_;
    new_dims.erase(new_dims.begin() + site);
    Vector out(product(new_dims));
    size_t w = 0;
    double norm2 = amps_.squaredNorm();
    for (size_t base = 0; base < static_cast<size_t>(amps_.size()); base++) {
        if ((base / st) % d != 0) {
            continue;
        }
        Complex acc = 0;
        for (size_t k = 0; k < d; k++) {
            acc += std::conj(basis(k, column)) * amps_[base + k * st];
        }
        out[w++] = acc;
    }
    double prob = out.squaredNorm() / norm2;
    if (prob < kZeroBranch) {
        throw std::invalid_argument("projection branch has zero probability");
    }
    dims_ = std::move(new_dims);
    amps_ = std::move(out);
    normalize();
    return prob;
}

StateVector StateVector::permuted(const std::vector<size_t> &order) const {
    size_t n = dims_.size();
    if (order.size() != n) {
        throw std::invalid_argument("permutation has the wrong length");
    }
    std::vector<bool> seen(n, false);
    std::vector<size_t> new_dims(n);
    for (size_t k = 0; k < n; k++) {
        if (order[k] >= n || seen[order[k]]) {
            throw std::invalid_argument("not a permutation");
        }
        seen[order[k]] = true;
        new_dims[k] = dims_[order[k]];
    }
    StateVector out(new_dims);
    std::vector<size_t> old_strides(n);
    for (size_t s = 0; s < n; s++) {
        old_strides[s] = stride(s);
    }
    for (size_t idx = 0; idx < static_cast<size_t>(amps_.size()); idx++) {
        size_t rem = idx, old = 0;
        for (size_t k = n; k-- > 0;) {
            old += (rem % new_dims[k]) * old_strides[order[k]];
            rem /= new_dims[k];
        }
        out.amps_[idx] = amps_[old];
    }
    return out;
}

StateVector StateVector::tensor(const StateVector &other) const {
    std::vector<size_t> dims = dims_;
    dims.insert(dims.end(), other.dims_.begin(), other.dims_.end());
    Vector amps(amps_.size() * other.amps_.size());
    for (Eigen::Index i = 0; i < amps_.size(); i++) {
        amps.segment(i * other.amps_.size(), other.amps_.size()) = amps_[i] * other.amps_;
    }
    return from_amplitudes(std::move(dims), std::move(amps));
}

double fidelity(const StateVector &a, const StateVector &b) {
    if (a.dims() != b.dims()) {
        throw std::invalid_argument("fidelity needs states with equal site dimensions");
    }
    double na = a.amplitudes().squaredNorm();
    double nb = b.amplitudes().squaredNorm();
    return std::norm(a.amplitudes().dot(b.amplitudes())) / (na * nb);
}

namespace gates {

Matrix h() {
    Matrix m(2, 2);
    m << 1, 1, 1, -1;
    return m / std::sqrt(2.0);
}

Matrix p() {
    Matrix m = Matrix::Zero(2, 2);
    m(0, 0) = 1;
    m(1, 1) = Complex(0, 1);
    return m;
}

Matrix x() {
    Matrix m(2, 2);
    m << 0, 1, 1, 0;
    return m;
}

Matrix y() {
    Matrix m(2, 2);
    m << 0, Complex(0, -1), Complex(0, 1), 0;
    return m;
}

Matrix z() {
    Matrix m(2, 2);
    m << 1, 0, 0, -1;
    return m;
}

Matrix cz() {
    Matrix m = Matrix::Identity(4, 4);
    m(3, 3) = -1;
    return m;
}

Matrix pauli(char p) {
    switch (p) {
        case 'I':
            return Matrix::Identity(2, 2);
        case 'X':
            return x();
        case 'Y':
            return y();
        case 'Z':
            return z();
        default:
            throw std::invalid_argument(std::string("not a Pauli letter: ") + p);
    }
}

Matrix phase(double phi) {
    Matrix m = Matrix::Zero(2, 2);
    m(0, 0) = 1;
    m(1, 1) = std::polar(1.0, phi);
    return m;
}

Matrix rz(double theta) {
    Matrix m = Matrix::Zero(2, 2);
    m(0, 0) = std::polar(1.0, theta);
    m(1, 1) = std::polar(1.0, -theta);
    return m;
}

Matrix rx(double theta) {
    return std::cos(theta) * Matrix::Identity(2, 2) + Complex(0, std::sin(theta)) * x();
}

Matrix local_clifford(graph::LocalClifford c) {
    Matrix m = Matrix::Identity(2, 2);
    for (char letter : c.word()) {
        m = (letter == 'H' ? h() : letter == 'P' ? p() : pauli(letter)) * m;
    }
    return m;
}

Matrix eigenbasis(char pauli) {
    Matrix m(2, 2);
    double r = 1 / std::sqrt(2.0);
    switch (pauli) {
        case 'X':
            m << r, r, r, -r;
            break;
        case 'Y':
            m << r, r, Complex(0, r), Complex(0, -r);
            break;
        case 'Z':
            m << 1, 0, 0, 1;
            break;
        default:
            throw std::invalid_argument(std::string("not a Pauli letter: ") + pauli);
    }
    return m;
}

}  // namespace gates

StateVector build_constructive_graph_state(const graph::Graph &g) {
    size_t n = g.num_vertices();
    if (n > kMaxQubits) {
        throw std::invalid_argument("graph has more than " + std::to_string(kMaxQubits) + " vertices");
    }
    auto edges = g.edges();
    Vector amps(size_t{1} << n);
    double scale = std::pow(2.0, -0.5 * static_cast<double>(n));
    for (uint64_t i = 0; i < (uint64_t{1} << n); i++) {
        int parity = 0;
        for (auto [a, b] : edges) {
            parity ^= ((i >> (n - 1 - a)) & 1) & ((i >> (n - 1 - b)) & 1);
        }
        amps[i] = parity ? -scale : scale;
    }
    StateVector s = StateVector::from_amplitudes(std::vector<size_t>(n, 2), std::move(amps));
    for (size_t v = 0; v < n; v++) {
        if (!g.vertex_op(v).is_identity()) {
            s.apply_unitary(gates::local_clifford(g.vertex_op(v)), {v});
        }
    }
    return s;
}

bool stabilized_by(const StateVector &s, const PauliString &p) {
    return s.expectation(p).real() / s.amplitudes().squaredNorm() >= 1 - 1e-10;
}

namespace {

struct LcSearch {
    size_t n;
    Vector target;
    std::vector<Matrix> cliffords;
    std::vector<size_t> choice;

    // Applies a 2x2 matrix to qubit q of a 2^n vector.
    Vector apply(const Vector &v, const Matrix &m, size_t q) const {
        Vector out = v;
        size_t bit = size_t{1} << (n - 1 - q);
        for (size_t i = 0; i < static_cast<size_t>(v.size()); i++) {
            if (i & bit) {
                continue;
            }
            out[i] = m(0, 0) * v[i] + m(0, 1) * v[i | bit];
            out[i | bit] = m(1, 0) * v[i] + m(1, 1) * v[i | bit];
        }
        return out;
    }

    bool dfs(const Vector &cur, size_t q) {
        if (q == n) {
            return std::abs(target.dot(cur)) >= 1 - 1e-8;
        }
        for (size_t k = 0; k < cliffords.size(); k++) {
            choice[q] = k;
            if (dfs(apply(cur, cliffords[k], q), q + 1)) {
                return true;
            }
        }
        return false;
    }
};

}  // namespace

std::optional<std::vector<graph::LocalClifford>> lc_equivalent_states(const StateVector &s1, const StateVector &s2) {
    size_t n = s1.num_sites();
    if (n > 5) {
        throw std::invalid_argument("state-level LC search is limited to 5 qubits");
    }
    check_qubits_only(s1.dims(), n);
    check_qubits_only(s2.dims(), n);
    LcSearch search{n, s1.amplitudes().normalized(), {}, std::vector<size_t>(n)};
    for (const auto &c : graph::LocalClifford::all()) {
        search.cliffords.push_back(gates::local_clifford(c));
    }
    if (!search.dfs(s2.amplitudes().normalized(), 0)) {
        return std::nullopt;
    }
    std::vector<graph::LocalClifford> out;
    for (size_t k : search.choice) {
        out.push_back(graph::LocalClifford::all()[k]);
    }
    return out;
}

stabilizer::Tableau stabilizer_tableau_of(const StateVector &s) {
    size_t n = s.num_sites();
    if (n > 8) {
        throw std::invalid_argument("Pauli scan is limited to 8 qubits");
    }
    check_qubits_only(s.dims(), n);
    StateVector unit = s;
    unit.normalize();
    std::vector<PauliString> gens;
    std::vector<stabilizer::BitVector> basis;
    std::vector<size_t> pivots;
    for (uint64_t code = 1; code < (uint64_t{1} << (2 * n)) && gens.size() < n; code++) {
        PauliString p(n);
        stabilizer::BitVector bits(2 * n);
        for (size_t q = 0; q < n; q++) {
            bool xb = (code >> (2 * q)) & 1;
            bool zb = (code >> (2 * q + 1)) & 1;
            p.set_x(q, xb);
            p.set_z(q, zb);
            bits.set(q, xb);
            bits.set(n + q, zb);
        }
        double e = unit.expectation(p).real();
        if (std::abs(std::abs(e) - 1) > 1e-8) {
            continue;
        }
        for (size_t k = 0; k < basis.size(); k++) {
            if (bits.get(pivots[k])) {
                bits ^= basis[k];
            }
        }
        if (!bits.any()) {
            continue;
        }
        size_t piv = 0;
        while (!bits.get(piv)) {
            piv++;
        }
        for (size_t k = 0; k < basis.size(); k++) {
            if (basis[k].get(piv)) {
                basis[k] ^= bits;
            }
        }
        basis.push_back(bits);
        pivots.push_back(piv);
        p.set_sign(e > 0 ? 1 : -1);
        gens.push_back(p);
    }
    if (gens.size() < n) {
        throw std::invalid_argument("state is not a stabilizer state");
    }
    return stabilizer::Tableau::from_generators(gens);
}

}  // namespace graphforge::oracle
