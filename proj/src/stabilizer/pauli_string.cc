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

#include "graphforge/stabilizer/pauli_string.h"

#include <bit>
#include <stdexcept>

namespace graphforge::stabilizer {

uint8_t product_log_i(
    const uint64_t *x1, const uint64_t *z1, const uint64_t *x2, const uint64_t *z2, size_t num_words) {
    // Each anticommuting qubit contributes +i (cyclic X->Y->Z order) or -i.
    // -1 == 1 + 2 (mod 4), so count all anticommuting positions once and the
    // negative ones a second time, doubled.
    unsigned total = 0;
    for (size_t w = 0; w < num_words; w++) {
        uint64_t x1z2 = x1[w] & z2[w];
        uint64_t anti = x1z2 ^ (z1[w] & x2[w]);
        uint64_t nx = x1[w] ^ x2[w];
        uint64_t nz = z1[w] ^ z2[w];
        uint64_t neg = anti & (nx ^ nz ^ x1z2);
        total += std::popcount(anti) + 2 * std::popcount(neg);
    }
    return static_cast<uint8_t>(total & 3);
}

PauliString::PauliString(size_t num_qubits)
    : num_qubits_(num_qubits), xs_(words_for(num_qubits), 0), zs_(words_for(num_qubits), 0) {
}

PauliString PauliString::from_str(std::string_view text) {
    uint8_t log_i = 0;
    size_t pos = 0;
    if (pos < text.size() && (text[pos] == '+' || text[pos] == '-')) {
        if (text[pos] == '-') {
            log_i = 2;
        }
        pos++;
    }
    if (pos < text.size() && text[pos] == 'i') {
        log_i = (log_i + 1) & 3;
        pos++;
    }
    PauliString result(text.size() - pos);
    result.log_i_ = log_i;
    for (size_t q = 0; pos < text.size(); pos++, q++) {
        result.set_pauli(q, text[pos]);
    }
    return result;
}

PauliString PauliString::single(size_t num_qubits, size_t qubit, char p) {
    PauliString result(num_qubits);
    result.set_pauli(qubit, p);
    return result;
}

int PauliString::sign() const {
    if (!is_hermitian()) {
        throw std::logic_error("sign() of a non-Hermitian Pauli string " + str());
    }
    return log_i_ == 0 ? +1 : -1;
}

void PauliString::set_sign(int sign) {
    log_i_ = sign < 0 ? 2 : 0;
}

bool PauliString::x(size_t q) const {
    return (xs_[q >> 6] >> (q & 63)) & 1;
}

bool PauliString::z(size_t q) const {
    return (zs_[q >> 6] >> (q & 63)) & 1;
}

void PauliString::set_x(size_t q, bool v) {
    uint64_t mask = uint64_t{1} << (q & 63);
    xs_[q >> 6] = v ? (xs_[q >> 6] | mask) : (xs_[q >> 6] & ~mask);
}

void PauliString::set_z(size_t q, bool v) {
    uint64_t mask = uint64_t{1} << (q & 63);
    zs_[q >> 6] = v ? (zs_[q >> 6] | mask) : (zs_[q >> 6] & ~mask);
}

char PauliString::pauli(size_t q) const {
    static constexpr char table[4] = {'I', 'X', 'Z', 'Y'};
    return table[x(q) | (z(q) << 1)];
}

void PauliString::set_pauli(size_t q, char p) {
    if (q >= num_qubits_) {
        throw std::out_of_range("qubit index out of range");
    }
    switch (p) {
        case 'I':
        case '_':
            set_x(q, false);
            set_z(q, false);
            break;
        case 'X':
            set_x(q, true);
            set_z(q, false);
            break;
        case 'Y':
            set_x(q, true);
            set_z(q, true);
            break;
        case 'Z':
            set_x(q, false);
            set_z(q, true);
            break;
        default:
            throw std::invalid_argument(std::string("not a Pauli character: '") + p + "'");
    }
}

size_t PauliString::weight() const {
    size_t total = 0;
    for (size_t w = 0; w < xs_.size(); w++) {
        total += std::popcount(xs_[w] | zs_[w]);
    }
    return total;
}

bool PauliString::commutes(const PauliString &other) const {
    if (other.num_qubits_ != num_qubits_) {
        throw std::invalid_argument("qubit count mismatch");
    }
    uint64_t acc = 0;
    for (size_t w = 0; w < xs_.size(); w++) {
        acc ^= (xs_[w] & other.zs_[w]) ^ (zs_[w] & other.xs_[w]);
    }
    return (std::popcount(acc) & 1) == 0;
}

PauliString &PauliString::operator*=(const PauliString &rhs) {
    if (rhs.num_qubits_ != num_qubits_) {
        throw std::invalid_argument("qubit count mismatch");
    }
    uint8_t k = product_log_i(xs_.data(), zs_.data(), rhs.xs_.data(), rhs.zs_.data(), xs_.size());
    for (size_t w = 0; w < xs_.size(); w++) {
        xs_[w] ^= rhs.xs_[w];
        zs_[w] ^= rhs.zs_[w];
    }
    log_i_ = (log_i_ + rhs.log_i_ + k) & 3;
    return *this;
}

PauliString PauliString::operator*(const PauliString &rhs) const {
    PauliString result = *this;
    result *= rhs;
    return result;
}

bool PauliString::same_support(const PauliString &other) const {
    return xs_ == other.xs_ && zs_ == other.zs_;
}

std::string PauliString::str() const {
    std::string out;
    out += (log_i_ & 2) ? '-' : '+';
    if (log_i_ & 1) {
        out += 'i';
    }
    for (size_t q = 0; q < num_qubits_; q++) {
        out += pauli(q);
    }
    return out;
}

}  // namespace graphforge::stabilizer
