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

#include "graphforge/graph/local_clifford.h"

#include <deque>
#include <map>
#include <stdexcept>
#include <vector>

namespace graphforge::graph {

namespace {

// Signed single-qubit Pauli: code in {1:X, 2:Z, 3:Y} (x | z<<1), sign +-1.
struct Signed {
    uint8_t code;
    int sign;
    bool operator<(const Signed &o) const {
        return code != o.code ? code < o.code : sign < o.sign;
    }
    bool operator==(const Signed &) const = default;
};

uint8_t code_of(char p) {
    switch (p) {
        case 'X':
            return 1;
        case 'Z':
            return 2;
        case 'Y':
            return 3;
        default:
            throw std::invalid_argument(std::string("not a Pauli letter: ") + p);
    }
}

char char_of(uint8_t code) {
    return "IXZY"[code];
}

// Conjugation of a signed Pauli by one gate letter.
Signed conj_letter(char letter, Signed s) {
    char p = char_of(s.code);
    switch (letter) {
        case 'H':
            if (p == 'X') {
                return {2, s.sign};
            }
            if (p == 'Z') {
                return {1, s.sign};
            }
            return {3, -s.sign};
        case 'P':
            if (p == 'X') {
                return {3, s.sign};
            }
            if (p == 'Y') {
                return {1, -s.sign};
            }
            return s;
        case 'X':
            return {s.code, p == 'X' ? s.sign : -s.sign};
        case 'Y':
            return {s.code, p == 'Y' ? s.sign : -s.sign};
        case 'Z':
            return {s.code, p == 'Z' ? s.sign : -s.sign};
        default:
            throw std::invalid_argument(std::string("unknown Clifford letter '") + letter + "'");
    }
}

struct Element {
    Signed x;
    Signed z;
    std::string word;
};

// i^k such that P1*P2 = i^k (P1 xor P2) for single-qubit codes.
uint8_t single_log_i(uint8_t a, uint8_t b) {
    uint64_t x1 = a & 1, z1 = a >> 1, x2 = b & 1, z2 = b >> 1;
    return stabilizer::product_log_i(&x1, &z1, &x2, &z2, 1);
}

struct Table {
    std::vector<Element> elems;
    std::map<std::pair<Signed, Signed>, uint8_t> index;
    std::array<std::array<uint8_t, 5>, 24> step{};  // step[e][letter]

    uint8_t lookup(Signed x, Signed z) const {
        return index.at({x, z});
    }

    Table() {
        const std::string letters = "HPXYZ";
        elems.push_back({{1, 1}, {2, 1}, ""});
        index[{elems[0].x, elems[0].z}] = 0;
        std::deque<uint8_t> queue{0};
        while (!queue.empty()) {
            uint8_t e = queue.front();
            queue.pop_front();
            for (size_t k = 0; k < letters.size(); k++) {
                Signed nx = conj_letter(letters[k], elems[e].x);
                Signed nz = conj_letter(letters[k], elems[e].z);
                auto it = index.find({nx, nz});
                uint8_t id;
                if (it == index.end()) {
                    id = static_cast<uint8_t>(elems.size());
                    elems.push_back({nx, nz, elems[e].word + letters[k]});
                    index[{nx, nz}] = id;
                    queue.push_back(id);
                } else {
                    id = it->second;
                }
                step[e][k] = id;
            }
        }
        if (elems.size() != 24) {
            throw std::logic_error("single-qubit Clifford enumeration is broken");
        }
    }
};

const Table &table() {
    static const Table t;
    return t;
}

size_t letter_index(char c) {
    switch (c) {
        case 'H':
            return 0;
        case 'P':
            return 1;
        case 'X':
            return 2;
        case 'Y':
            return 3;
        case 'Z':
            return 4;
        default:
            throw std::invalid_argument(std::string("unknown Clifford letter '") + c + "'");
    }
}

Signed conj_elem(const Element &e, Signed s) {
    if (s.code == 1) {
        return {e.x.code, e.x.sign * s.sign};
    }
    if (s.code == 2) {
        return {e.z.code, e.z.sign * s.sign};
    }
    // Y = i X Z.
    uint8_t k = (1 + single_log_i(e.x.code, e.z.code)) & 3;
    int sign = (k == 0 ? 1 : -1) * e.x.sign * e.z.sign * s.sign;
    return {static_cast<uint8_t>(e.x.code ^ e.z.code), sign};
}

}  // namespace

LocalClifford LocalClifford::from_word(std::string_view word) {
    const Table &t = table();
    uint8_t e = 0;
    for (char c : word) {
        e = t.step[e][letter_index(c)];
    }
    return LocalClifford(e);
}

const std::array<LocalClifford, 24> &LocalClifford::all() {
    static const std::array<LocalClifford, 24> elems = [] {
        std::array<LocalClifford, 24> out;
        for (uint8_t k = 0; k < 24; k++) {
            out[k] = LocalClifford(k);
        }
        return out;
    }();
    return elems;
}

const std::string &LocalClifford::word() const {
    return table().elems[index_].word;
}

LocalClifford LocalClifford::then(LocalClifford next) const {
    const Table &t = table();
    const Element &b = t.elems[next.index_];
    const Element &a = t.elems[index_];
    return LocalClifford(t.lookup(conj_elem(b, a.x), conj_elem(b, a.z)));
}

LocalClifford LocalClifford::inverse() const {
    for (const auto &c : all()) {
        if (then(c).is_identity()) {
            return c;
        }
    }
    throw std::logic_error("Clifford element without inverse");
}

std::pair<int, char> LocalClifford::conjugate(char pauli) const {
    Signed s = conj_elem(table().elems[index_], {code_of(pauli), 1});
    return {s.sign, char_of(s.code)};
}

void conjugate_qubit(stabilizer::PauliString &p, size_t q, LocalClifford c) {
    char cur = p.pauli(q);
    if (cur == 'I' || c.is_identity()) {
        return;
    }
    auto [sign, img] = c.conjugate(cur);
    p.set_pauli(q, img);
    if (sign < 0) {
        p.set_log_i(p.log_i() + 2);
    }
}

void apply_local_clifford(stabilizer::Tableau &t, size_t q, LocalClifford c) {
    for (char letter : c.word()) {
        switch (letter) {
            case 'H':
                t.apply_h(q);
                break;
            case 'P':
                t.apply_p(q);
                break;
            case 'X':
                t.apply_x(q);
                break;
            case 'Y':
                t.apply_y(q);
                break;
            default:
                t.apply_z(q);
                break;
        }
    }
}

}  // namespace graphforge::graph
