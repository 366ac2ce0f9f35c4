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

#ifndef GRAPHFORGE_STABILIZER_PAULI_STRING_H
#define GRAPHFORGE_STABILIZER_PAULI_STRING_H

#include <cstddef>
#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

namespace graphforge::stabilizer {

/// Number of 64-bit words needed to hold `n` bits.
inline size_t words_for(size_t n) {
    return (n + 63) / 64;
}

/// Exponent k such that P1 * P2 = i^k * (P1 xor P2) for the unsigned Paulis
/// encoded by the given words. Y is encoded as (x=1, z=1).
uint8_t product_log_i(
    const uint64_t *x1, const uint64_t *z1, const uint64_t *x2, const uint64_t *z2, size_t num_words);

/// An n-qubit Pauli operator i^k * P_0 (x) ... (x) P_{n-1}.
///
/// Per-qubit encoding: (x=0,z=0) I, (x=1,z=0) X, (x=1,z=1) Y, (x=0,z=1) Z.
class PauliString {
   public:
    explicit PauliString(size_t num_qubits = 0);

    /// Parses strings like "+XZ_I", "-iYY", "XZ". '_' and 'I' both denote identity.
    static PauliString from_str(std::string_view text);

    /// Single-qubit Pauli `p` ('X','Y','Z') on `qubit`, identity elsewhere.
    static PauliString single(size_t num_qubits, size_t qubit, char p);

    size_t num_qubits() const {
        return num_qubits_;
    }

    /// Phase exponent k in i^k (0..3).
    uint8_t log_i() const {
        return log_i_;
    }
    void set_log_i(uint8_t k) {
        log_i_ = k & 3;
    }

    bool is_hermitian() const {
        return (log_i_ & 1) == 0;
    }
    /// +1 or -1 for a Hermitian Pauli.
    int sign() const;
    void set_sign(int sign);

    bool x(size_t q) const;
    bool z(size_t q) const;
    void set_x(size_t q, bool v);
    void set_z(size_t q, bool v);

    /// 'I', 'X', 'Y' or 'Z'.
    char pauli(size_t q) const;
    void set_pauli(size_t q, char p);

    /// Number of non-identity qubits.
    size_t weight() const;

    bool commutes(const PauliString &other) const;

    PauliString &operator*=(const PauliString &rhs);
    PauliString operator*(const PauliString &rhs) const;

    bool operator==(const PauliString &other) const = default;

    /// Bits equal, phase ignored.
    bool same_support(const PauliString &other) const;

    /// "+XZII" style; imaginary phases render as "+i"/"-i".
    std::string str() const;

    const uint64_t *x_words() const {
        return xs_.data();
    }
    const uint64_t *z_words() const {
        return zs_.data();
    }
    uint64_t *x_words() {
        return xs_.data();
    }
    uint64_t *z_words() {
        return zs_.data();
    }
    size_t num_words() const {
        return xs_.size();
    }

   private:
    size_t num_qubits_;
    uint8_t log_i_ = 0;
    std::vector<uint64_t> xs_;
    std::vector<uint64_t> zs_;
};

}  // namespace graphforge::stabilizer

#endif
