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

#include "graphforge/stabilizer/tableau.h"

#include <bit>
#include <stdexcept>

#include "graphforge/stabilizer/gf2.h"

namespace graphforge::stabilizer {

namespace {

bool words_anticommute(const uint64_t *x1, const uint64_t *z1, const uint64_t *x2, const uint64_t *z2, size_t w) {
    uint64_t acc = 0;
    for (size_t k = 0; k < w; k++) {
        acc ^= (x1[k] & z2[k]) ^ (z1[k] & x2[k]);
    }
    return std::popcount(acc) & 1;
}

}  // namespace

Tableau::Tableau(size_t num_qubits)
    : n_(num_qubits),
      words_(words_for(num_qubits)),
      xs_(2 * num_qubits * words_for(num_qubits), 0),
      zs_(2 * num_qubits * words_for(num_qubits), 0),
      log_i_(2 * num_qubits, 0) {
    for (size_t q = 0; q < n_; q++) {
        row_x(q)[q >> 6] |= uint64_t{1} << (q & 63);
        row_z(n_ + q)[q >> 6] |= uint64_t{1} << (q & 63);
    }
}

Tableau Tableau::from_basis_state(std::string_view bits) {
    Tableau t(bits.size());
    for (size_t q = 0; q < bits.size(); q++) {
        if (bits[q] == '1') {
            t.log_i_[t.n_ + q] = 2;
        } else if (bits[q] != '0') {
            throw std::invalid_argument("basis state must contain only '0' and '1'");
        }
    }
    return t;
}

Tableau Tableau::from_generators(const std::vector<std::string> &generators) {
    std::vector<PauliString> parsed;
    parsed.reserve(generators.size());
    for (const auto &g : generators) {
        parsed.push_back(PauliString::from_str(g));
    }
    return from_generators(parsed);
}

Tableau Tableau::from_generators(std::initializer_list<std::string_view> generators) {
    std::vector<PauliString> parsed;
    for (auto g : generators) {
        parsed.push_back(PauliString::from_str(g));
    }
    return from_generators(parsed);
}

Tableau Tableau::from_generators(const std::vector<PauliString> &generators) {
    size_t n = generators.size();
    for (const auto &g : generators) {
        if (g.num_qubits() != n) {
            throw std::invalid_argument("need exactly n generators on n qubits, got generator " + g.str());
        }
        if (!g.is_hermitian()) {
            throw std::invalid_argument("generator has an imaginary phase: " + g.str());
        }
    }
    for (size_t i = 0; i < n; i++) {
        for (size_t j = i + 1; j < n; j++) {
            if (!generators[i].commutes(generators[j])) {
                throw std::invalid_argument(
                    "generators anticommute: " + generators[i].str() + " and " + generators[j].str());
            }
        }
    }

    // Destabilizers: solve <S_j, D_i> = delta_ij. Row j of the system is
    // (S_j.z | S_j.x) so that its dot product with (D.x | D.z) is the
    // symplectic form. The trailing n columns track the row operations.
    std::vector<BitVector> rows(n, BitVector(3 * n));
    for (size_t j = 0; j < n; j++) {
        for (size_t q = 0; q < n; q++) {
            rows[j].set(q, generators[j].z(q));
            rows[j].set(n + q, generators[j].x(q));
        }
        rows[j].set(2 * n + j, true);
    }
    std::vector<size_t> pivot_col(n);
    size_t rank = 0;
    for (size_t c = 0; c < 2 * n && rank < n; c++) {
        size_t p = rank;
        while (p < n && !rows[p].get(c)) {
            p++;
        }
        if (p == n) {
            continue;
        }
        std::swap(rows[p], rows[rank]);
        for (size_t r = 0; r < n; r++) {
            if (r != rank && rows[r].get(c)) {
                rows[r] ^= rows[rank];
            }
        }
        pivot_col[rank] = c;
        rank++;
    }
    if (rank < n) {
        throw std::invalid_argument("generators are not independent");
    }

    std::vector<PauliString> destab(n, PauliString(n));
    for (size_t i = 0; i < n; i++) {
        for (size_t k = 0; k < n; k++) {
            if (rows[k].get(2 * n + i)) {
                size_t c = pivot_col[k];
                if (c < n) {
                    destab[i].set_x(c, true);
                } else {
                    destab[i].set_z(c - n, true);
                }
            }
        }
    }
    // Make destabilizers mutually commuting; adding S_j to D_i only changes
    // its commutation with D_j.
    for (size_t i = 0; i < n; i++) {
        for (size_t j = 0; j < i; j++) {
            if (!destab[i].commutes(destab[j])) {
                uint8_t keep = destab[i].log_i();
                destab[i] *= generators[j];
                destab[i].set_log_i(keep);
            }
        }
        destab[i].set_log_i(0);
    }

    Tableau t(n);
    for (size_t i = 0; i < n; i++) {
        t.set_row(i, destab[i]);
        t.set_row(n + i, generators[i]);
    }
    return t;
}

PauliString Tableau::row(size_t r) const {
    PauliString p(n_);
    for (size_t w = 0; w < words_; w++) {
        p.x_words()[w] = row_x(r)[w];
        p.z_words()[w] = row_z(r)[w];
    }
    p.set_log_i(log_i_[r]);
    return p;
}

void Tableau::set_row(size_t r, const PauliString &p) {
    for (size_t w = 0; w < words_; w++) {
        row_x(r)[w] = p.x_words()[w];
        row_z(r)[w] = p.z_words()[w];
    }
    log_i_[r] = p.log_i();
}

void Tableau::row_mul(size_t target, size_t source) {
    uint64_t *tx = row_x(target);
    uint64_t *tz = row_z(target);
    const uint64_t *sx = row_x(source);
    const uint64_t *sz = row_z(source);
    uint8_t k = product_log_i(tx, tz, sx, sz, words_);
    for (size_t w = 0; w < words_; w++) {
        tx[w] ^= sx[w];
        tz[w] ^= sz[w];
    }
    log_i_[target] = (log_i_[target] + log_i_[source] + k) & 3;
}

bool Tableau::row_anticommutes(size_t r, const PauliString &p) const {
    return words_anticommute(row_x(r), row_z(r), p.x_words(), p.z_words(), words_);
}

void Tableau::check_qubit(size_t q) const {
    if (q >= n_) {
        throw std::out_of_range("qubit " + std::to_string(q) + " out of range for " + std::to_string(n_) + " qubits");
    }
}

PauliString Tableau::generator(size_t i) const {
    if (i >= n_) {
        throw std::out_of_range("generator index out of range");
    }
    return row(n_ + i);
}

std::vector<PauliString> Tableau::generators() const {
    std::vector<PauliString> out;
    out.reserve(n_);
    for (size_t i = 0; i < n_; i++) {
        out.push_back(row(n_ + i));
    }
    return out;
}

PauliString Tableau::destabilizer(size_t i) const {
    if (i >= n_) {
        throw std::out_of_range("destabilizer index out of range");
    }
    return row(i);
}

void Tableau::apply_h(size_t q) {
    check_qubit(q);
    size_t w = q >> 6;
    uint64_t m = uint64_t{1} << (q & 63);
    for (size_t r = 0; r < 2 * n_; r++) {
        uint64_t &x = xs_[r * words_ + w];
        uint64_t &z = zs_[r * words_ + w];
        bool xb = x & m;
        bool zb = z & m;
        if (xb && zb) {
            log_i_[r] ^= 2;
        }
        if (xb != zb) {
            x ^= m;
            z ^= m;
        }
    }
}

void Tableau::apply_p(size_t q) {
    check_qubit(q);
    size_t w = q >> 6;
    uint64_t m = uint64_t{1} << (q & 63);
    for (size_t r = 0; r < 2 * n_; r++) {
        uint64_t x = xs_[r * words_ + w];
        uint64_t &z = zs_[r * words_ + w];
        if ((x & m) && (z & m)) {
            log_i_[r] ^= 2;
        }
        z ^= x & m;
    }
}

void Tableau::apply_p_dag(size_t q) {
    check_qubit(q);
    size_t w = q >> 6;
    uint64_t m = uint64_t{1} << (q & 63);
    for (size_t r = 0; r < 2 * n_; r++) {
        uint64_t x = xs_[r * words_ + w];
        uint64_t &z = zs_[r * words_ + w];
        if ((x & m) && !(z & m)) {
            log_i_[r] ^= 2;
        }
        z ^= x & m;
    }
}

void Tableau::apply_x(size_t q) {
    check_qubit(q);
    size_t w = q >> 6;
    uint64_t m = uint64_t{1} << (q & 63);
    for (size_t r = 0; r < 2 * n_; r++) {
        if (zs_[r * words_ + w] & m) {
            log_i_[r] ^= 2;
        }
    }
}

void Tableau::apply_z(size_t q) {
    check_qubit(q);
    size_t w = q >> 6;
    uint64_t m = uint64_t{1} << (q & 63);
    for (size_t r = 0; r < 2 * n_; r++) {
        if (xs_[r * words_ + w] & m) {
            log_i_[r] ^= 2;
        }
    }
}

void Tableau::apply_y(size_t q) {
    check_qubit(q);
    size_t w = q >> 6;
    uint64_t m = uint64_t{1} << (q & 63);
    for (size_t r = 0; r < 2 * n_; r++) {
        if ((xs_[r * words_ + w] ^ zs_[r * words_ + w]) & m) {
            log_i_[r] ^= 2;
        }
    }
}

void Tableau::apply_cz(size_t a, size_t b) {
    check_qubit(a);
    check_qubit(b);
    if (a == b) {
        throw std::invalid_argument("CZ needs two distinct qubits");
    }
    size_t wa = a >> 6;
    size_t wb = b >> 6;
    uint64_t ma = uint64_t{1} << (a & 63);
    uint64_t mb = uint64_t{1} << (b & 63);
    for (size_t r = 0; r < 2 * n_; r++) {
        uint64_t *x = xs_.data() + r * words_;
        uint64_t *z = zs_.data() + r * words_;
        bool xa = x[wa] & ma;
        bool xb = x[wb] & mb;
        bool za = z[wa] & ma;
        bool zb = z[wb] & mb;
        if (xa && xb && (za != zb)) {
            log_i_[r] ^= 2;
        }
        if (xb) {
            z[wa] ^= ma;
        }
        if (xa) {
            z[wb] ^= mb;
        }
    }
}

bool Tableau::is_deterministic(const PauliString &observable) const {
    if (observable.num_qubits() != n_) {
        throw std::invalid_argument("observable has the wrong qubit count");
    }
    for (size_t i = 0; i < n_; i++) {
        if (row_anticommutes(n_ + i, observable)) {
            return false;
        }
    }
    return true;
}

std::optional<int> Tableau::group_sign(const PauliString &p) const {
    if (!is_deterministic(p)) {
        return std::nullopt;
    }
    // p commutes with the whole group, so +-p is a product of the generators
    // whose destabilizer partners anticommute with p.
    PauliString scratch(n_);
    for (size_t i = 0; i < n_; i++) {
        if (row_anticommutes(i, p)) {
            uint8_t k = product_log_i(
                scratch.x_words(), scratch.z_words(), row_x(n_ + i), row_z(n_ + i), words_);
            for (size_t w = 0; w < words_; w++) {
                scratch.x_words()[w] ^= row_x(n_ + i)[w];
                scratch.z_words()[w] ^= row_z(n_ + i)[w];
            }
            scratch.set_log_i(scratch.log_i() + log_i_[n_ + i] + k);
        }
    }
    if (!scratch.same_support(p)) {
        throw std::logic_error("tableau is inconsistent: commuting observable not generated");
    }
    return scratch.sign();
}

bool Tableau::stabilizes(const PauliString &p) const {
    if (!p.is_hermitian()) {
        return false;
    }
    auto s = group_sign(p);
    return s.has_value() && *s == p.sign();
}

MeasurementResult Tableau::measure(const PauliString &observable, Rng &rng, std::optional<int> forced) {
    if (observable.num_qubits() != n_) {
        throw std::invalid_argument("observable has the wrong qubit count");
    }
    if (!observable.is_hermitian()) {
        throw std::invalid_argument("observable is not Hermitian: " + observable.str());
    }
    if (forced && *forced != 1 && *forced != -1) {
        throw std::invalid_argument("forced outcome must be +1 or -1");
    }

    size_t pivot = 2 * n_;
    for (size_t i = n_; i < 2 * n_; i++) {
        if (row_anticommutes(i, observable)) {
            pivot = i;
            break;
        }
    }

    if (pivot == 2 * n_) {
        int outcome = *group_sign(observable) * observable.sign();
        if (forced && *forced != outcome) {
            throw std::invalid_argument("forced outcome has zero probability");
        }
        return {outcome, true};
    }

    int outcome = forced ? *forced : (rng.coin() ? -1 : +1);
    for (size_t r = 0; r < 2 * n_; r++) {
        if (r != pivot && r != pivot - n_ && row_anticommutes(r, observable)) {
            row_mul(r, pivot);
        }
    }
    for (size_t w = 0; w < words_; w++) {
        row_x(pivot - n_)[w] = row_x(pivot)[w];
        row_z(pivot - n_)[w] = row_z(pivot)[w];
    }
    log_i_[pivot - n_] = log_i_[pivot];
    set_row(pivot, observable);
    if (outcome < 0) {
        log_i_[pivot] ^= 2;
    }
    return {outcome, false};
}

std::vector<PauliString> Tableau::canonical_generators() const {
    std::vector<PauliString> rows = generators();
    size_t k = 0;
    for (size_t q = 0; q < n_ && k < n_; q++) {
        for (int pass = 0; pass < 2 && k < n_; pass++) {
            auto has = [&](const PauliString &p) {
                return pass == 0 ? p.x(q) : p.z(q);
            };
            size_t p = k;
            while (p < n_ && !has(rows[p])) {
                p++;
            }
            if (p == n_) {
                continue;
            }
            std::swap(rows[p], rows[k]);
            for (size_t r = 0; r < n_; r++) {
                if (r != k && has(rows[r])) {
                    rows[r] *= rows[k];
                }
            }
            k++;
        }
    }
    return rows;
}

bool Tableau::same_group(const Tableau &other) const {
    return n_ == other.n_ && canonical_generators() == other.canonical_generators();
}

std::string Tableau::validate() const {
    std::vector<PauliString> gens = generators();
    for (size_t i = 0; i < n_; i++) {
        if (!gens[i].is_hermitian()) {
            return "generator " + std::to_string(i) + " has an imaginary phase";
        }
    }
    for (size_t i = 0; i < n_; i++) {
        for (size_t j = i + 1; j < n_; j++) {
            if (!gens[i].commutes(gens[j])) {
                return "generators " + std::to_string(i) + " and " + std::to_string(j) + " anticommute";
            }
        }
    }
    std::vector<BitVector> bits(n_, BitVector(2 * n_));
    for (size_t i = 0; i < n_; i++) {
        for (size_t q = 0; q < n_; q++) {
            bits[i].set(q, gens[i].x(q));
            bits[i].set(n_ + q, gens[i].z(q));
        }
    }
    if (gf2_rank(std::move(bits)) != n_) {
        return "generators are not independent";
    }
    return "";
}

std::string Tableau::str() const {
    std::string out;
    for (size_t i = 0; i < n_; i++) {
        out += row(n_ + i).str();
        out += '\n';
    }
    return out;
}

bool Tableau::operator==(const Tableau &other) const {
    return n_ == other.n_ && generators() == other.generators();
}

}  // namespace graphforge::stabilizer
