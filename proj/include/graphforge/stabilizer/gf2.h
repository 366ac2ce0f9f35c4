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

#ifndef GRAPHFORGE_STABILIZER_GF2_H
#define GRAPHFORGE_STABILIZER_GF2_H

#include <cstddef>
#include <cstdint>
#include <vector>

namespace graphforge::stabilizer {

/// Dense bit vector for GF(2) linear algebra.
class BitVector {
   public:
    explicit BitVector(size_t size = 0) : size_(size), words_((size + 63) / 64, 0) {
    }

    size_t size() const {
        return size_;
    }
    bool get(size_t i) const {
        return (words_[i >> 6] >> (i & 63)) & 1;
    }
    void set(size_t i, bool v) {
        uint64_t mask = uint64_t{1} << (i & 63);
        words_[i >> 6] = v ? (words_[i >> 6] | mask) : (words_[i >> 6] & ~mask);
    }
    void flip(size_t i) {
        words_[i >> 6] ^= uint64_t{1} << (i & 63);
    }
    BitVector &operator^=(const BitVector &other) {
        for (size_t w = 0; w < words_.size(); w++) {
            words_[w] ^= other.words_[w];
        }
        return *this;
    }
    bool any() const {
        for (uint64_t w : words_) {
            if (w) {
                return true;
            }
        }
        return false;
    }
    bool operator==(const BitVector &other) const = default;

   private:
    size_t size_;
    std::vector<uint64_t> words_;
};

/// Rank over GF(2). Takes rows by value; they are eliminated in place.
inline size_t gf2_rank(std::vector<BitVector> rows) {
    if (rows.empty()) {
        return 0;
    }
    size_t cols = rows[0].size();
    size_t rank = 0;
    for (size_t c = 0; c < cols && rank < rows.size(); c++) {
        size_t pivot = rank;
        while (pivot < rows.size() && !rows[pivot].get(c)) {
            pivot++;
        }
        if (pivot == rows.size()) {
            continue;
        }
        std::swap(rows[pivot], rows[rank]);
        for (size_t r = rank + 1; r < rows.size(); r++) {
            if (rows[r].get(c)) {
                rows[r] ^= rows[rank];
            }
        }
        rank++;
    }
    return rank;
}

}  // namespace graphforge::stabilizer

#endif
