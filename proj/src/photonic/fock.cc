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

#include "graphforge/photonic/fock.h"

#include <cmath>
#include <stdexcept>

namespace graphforge::photonic {

namespace {

constexpr double kDropTol = 1e-15;

double sqrt_factorial(size_t n) {
    double f = 1;
    for (size_t k = 2; k <= n; k++) {
        f *= static_cast<double>(k);
    }
    return std::sqrt(f);
}

void accumulate(std::map<HybridState::Key, Complex> &out, const HybridState::Key &k, Complex amp) {
    auto [it, inserted] = out.emplace(k, amp);
    if (!inserted) {
        it->second += amp;
    }
}

void prune(std::map<HybridState::Key, Complex> &terms) {
    for (auto it = terms.begin(); it != terms.end();) {
        it = std::norm(it->second) < kDropTol * kDropTol ? terms.erase(it) : std::next(it);
    }
}

size_t matter_index(const HybridState::Key &key, const std::vector<size_t> &dims) {
    size_t idx = 0;
    for (size_t k = 0; k < dims.size(); k++) {
        idx = idx * dims[k] + key[k];
    }
    return idx;
}

}  // namespace

long ModeMap::max_port() const {
    long top = -1;
    for (const auto &[m, row] : rows_) {
        top = std::max(top, static_cast<long>(m / 2));
        for (const auto &[j, c] : row) {
            top = std::max(top, static_cast<long>(j / 2));
        }
    }
    return top;
}

bool ModeMap::is_isometry(double tol) const {
    for (auto a = rows_.begin(); a != rows_.end(); ++a) {
        for (auto b = a; b != rows_.end(); ++b) {
            Complex dot = 0;
            for (const auto &[ja, ca] : a->second) {
                for (const auto &[jb, cb] : b->second) {
                    if (ja == jb) {
                        dot += std::conj(ca) * cb;
                    }
                }
            }
            double expect = a == b ? 1 : 0;
            if (std::abs(dot - expect) > tol) {
                return false;
            }
        }
    }
    return true;
}

ModeMap phase_shifter(double phi, size_t port) {
    ModeMap m;
    for (Pol p : {Pol::H, Pol::V}) {
        m.set(mode_of(port, p), {{mode_of(port, p), std::polar(1.0, phi)}});
    }
    return m;
}

ModeMap waveplate(double theta, double phi, size_t port) {
    double c = std::cos(theta);
    double s = std::sin(theta);
    size_t h = mode_of(port, Pol::H);
    size_t v = mode_of(port, Pol::V);
    ModeMap m;
    m.set(h, {{h, c}, {v, std::polar(s, phi)}});
    m.set(v, {{v, c}, {h, -std::polar(s, -phi)}});
    return m;
}

ModeMap beam_splitter(double theta, double phi, size_t in1, size_t in2, size_t out3, size_t out4) {
    double c = std::cos(theta);
    double s = std::sin(theta);
    ModeMap m;
    for (Pol p : {Pol::H, Pol::V}) {
        m.set(mode_of(in1, p), {{mode_of(out3, p), c}, {mode_of(out4, p), std::polar(s, phi)}});
        m.set(mode_of(in2, p), {{mode_of(out4, p), c}, {mode_of(out3, p), -std::polar(s, -phi)}});
    }
    return m;
}

ModeMap polarizing_beam_splitter(size_t in1, size_t in2, size_t out3, size_t out4) {
    ModeMap m;
    m.set(mode_of(in1, Pol::H), {{mode_of(out3, Pol::H), 1}});
    m.set(mode_of(in1, Pol::V), {{mode_of(out4, Pol::V), 1}});
    m.set(mode_of(in2, Pol::H), {{mode_of(out4, Pol::H), 1}});
    m.set(mode_of(in2, Pol::V), {{mode_of(out3, Pol::V), -1}});
    return m;
}

ModeMap loss(size_t port, double T, size_t env_port) {
    if (!(T >= 0 && T <= 1)) {
        throw std::invalid_argument("loss: transmission must lie in [0, 1]");
    }
    ModeMap m;
    for (Pol p : {Pol::H, Pol::V}) {
        m.set(mode_of(port, p), {{mode_of(port, p), std::sqrt(T)}, {mode_of(env_port, p), std::sqrt(1 - T)}});
    }
    return m;
}

HybridState::HybridState(std::vector<size_t> level_dims, size_t ports) : dims_(std::move(level_dims)), ports_(ports) {
    for (size_t d : dims_) {
        if (d < 1 || d > 255) {
            throw std::invalid_argument("HybridState: node dimension out of range");
        }
    }
}

HybridState HybridState::from_matter(const StateVector &matter, size_t ports) {
    HybridState h(matter.dims(), ports);
    const auto &dims = matter.dims();
    std::vector<uint8_t> levels(dims.size());
    std::vector<uint8_t> occ(2 * ports, 0);
    for (Eigen::Index i = 0; i < matter.amplitudes().size(); i++) {
        size_t rest = static_cast<size_t>(i);
        for (size_t k = dims.size(); k-- > 0;) {
            levels[k] = static_cast<uint8_t>(rest % dims[k]);
            rest /= dims[k];
        }
        h.add_term(levels, occ, matter.amplitudes()[i]);
    }
    return h;
}

size_t HybridState::add_port() {
    std::map<Key, Complex> next;
    for (auto &[k, a] : terms_) {
        Key nk = k;
        nk.push_back(0);
        nk.push_back(0);
        next.emplace(std::move(nk), a);
    }
    terms_ = std::move(next);
    return ports_++;
}

void HybridState::add_term(const std::vector<uint8_t> &levels, const std::vector<uint8_t> &occupation, Complex amp) {
    if (levels.size() != dims_.size() || occupation.size() != 2 * ports_) {
        throw std::invalid_argument("HybridState: term has the wrong shape");
    }
    for (size_t k = 0; k < levels.size(); k++) {
        if (levels[k] >= dims_[k]) {
            throw std::invalid_argument("HybridState: level out of range");
        }
    }
    if (std::norm(amp) < kDropTol * kDropTol) {
        return;
    }
    Key key = levels;
    key.insert(key.end(), occupation.begin(), occupation.end());
    accumulate(terms_, key, amp);
}

Complex HybridState::amplitude(const std::vector<uint8_t> &levels, const std::vector<uint8_t> &occupation) const {
    Key key = levels;
    key.insert(key.end(), occupation.begin(), occupation.end());
    auto it = terms_.find(key);
    return it == terms_.end() ? Complex(0) : it->second;
}

void HybridState::create(size_t mode) {
    if (mode >= 2 * ports_) {
        throw std::invalid_argument("HybridState: unknown mode " + std::to_string(mode));
    }
    std::map<Key, Complex> next;
    size_t slot = dims_.size() + mode;
    for (const auto &[k, a] : terms_) {
        Key nk = k;
        nk[slot]++;
        accumulate(next, nk, a * std::sqrt(static_cast<double>(nk[slot])));
    }
    terms_ = std::move(next);
}

void HybridState::apply(const ModeMap &m) {
    if (m.max_port() >= static_cast<long>(ports_)) {
        throw std::invalid_argument("optical element refers to unknown port " + std::to_string(m.max_port()));
    }
    size_t base = dims_.size();
    std::map<Key, Complex> next;
    for (const auto &[key, amp] : terms_) {
        std::vector<size_t> photons;
        double norm_in = 1;
        Key start = key;
        for (size_t mode = 0; mode < 2 * ports_; mode++) {
            uint8_t n = key[base + mode];
            if (n > 0 && m.rows().count(mode)) {
                photons.insert(photons.end(), n, mode);
                norm_in *= sqrt_factorial(n);
                start[base + mode] = 0;
            }
        }
        // Distribute each moving photon over its row.
        struct Partial {
            Key key;
            Complex coef;
        };
        std::vector<Partial> partial = {{start, amp / norm_in}};
        for (size_t src : photons) {
            std::vector<Partial> grown;
            for (const auto &p : partial) {
                for (const auto &[dst, c] : m.rows().at(src)) {
                    Partial q = p;
                    q.key[base + dst]++;
                    q.coef *= c;
                    grown.push_back(std::move(q));
                }
            }
            partial = std::move(grown);
        }
        for (const auto &p : partial) {
            // Creation operators already present in `start` count toward m_j!.
            double norm_out = 1;
            for (size_t mode = 0; mode < 2 * ports_; mode++) {
                uint8_t n_out = p.key[base + mode];
                uint8_t n_kept = start[base + mode];
                if (n_out > 0) {
                    norm_out *= sqrt_factorial(n_out) / sqrt_factorial(n_kept);
                }
            }
            accumulate(next, p.key, p.coef * norm_out);
        }
    }
    prune(next);
    terms_ = std::move(next);
}

void HybridState::apply_matter(size_t node, const Matrix &u) {
    if (node >= dims_.size() || static_cast<size_t>(u.rows()) != dims_[node] || u.rows() != u.cols()) {
        throw std::invalid_argument("HybridState: matter operator does not fit the node");
    }
    std::map<Key, Complex> next;
    for (const auto &[k, a] : terms_) {
        for (Eigen::Index r = 0; r < u.rows(); r++) {
            Complex c = u(r, k[node]);
            if (c != Complex(0)) {
                Key nk = k;
                nk[node] = static_cast<uint8_t>(r);
                accumulate(next, nk, a * c);
            }
        }
    }
    prune(next);
    terms_ = std::move(next);
}

void HybridState::emit(size_t node, uint8_t excited, const std::vector<Emission> &channels) {
    if (node >= dims_.size() || excited >= dims_[node]) {
        throw std::invalid_argument("HybridState: bad emitting node or level");
    }
    std::map<Key, Complex> next;
    for (const auto &[k, a] : terms_) {
        if (k[node] != excited) {
            accumulate(next, k, a);
            continue;
        }
        for (const auto &ch : channels) {
            if (ch.mode >= 2 * ports_ || ch.level >= dims_[node]) {
                throw std::invalid_argument("HybridState: bad emission channel");
            }
            Key nk = k;
            nk[node] = ch.level;
            size_t slot = dims_.size() + ch.mode;
            nk[slot]++;
            accumulate(next, nk, a * ch.amplitude * std::sqrt(static_cast<double>(nk[slot])));
        }
    }
    prune(next);
    terms_ = std::move(next);
}

double HybridState::norm() const {
    double s = 0;
    for (const auto &[k, a] : terms_) {
        s += std::norm(a);
    }
    return std::sqrt(s);
}

std::vector<size_t> HybridState::photon_numbers() const {
    std::vector<size_t> out;
    for (const auto &[k, a] : terms_) {
        size_t n = 0;
        for (size_t i = dims_.size(); i < k.size(); i++) {
            n += k[i];
        }
        if (std::find(out.begin(), out.end(), n) == out.end()) {
            out.push_back(n);
        }
    }
    std::sort(out.begin(), out.end());
    return out;
}

double HybridState::probability_of_count(const std::vector<size_t> &modes, size_t count) const {
    double p = 0;
    for (const auto &[k, a] : terms_) {
        size_t n = 0;
        for (size_t m : modes) {
            n += k[dims_.size() + m];
        }
        if (n == count) {
            p += std::norm(a);
        }
    }
    return p;
}

std::vector<DetectionBranch> enumerate_detection(HybridState h, const DetectorModel &d,
                                                 const std::vector<Detector> &detectors) {
    if (!(d.transmission >= 0 && d.transmission <= 1)) {
        throw std::invalid_argument("detector transmission must lie in [0, 1]");
    }
    for (const auto &det : detectors) {
        for (size_t m : det) {
            if (m >= 2 * h.ports()) {
                throw std::invalid_argument("detector watches unknown mode " + std::to_string(m));
            }
        }
    }
    if (d.transmission < 1) {
        for (const auto &det : detectors) {
            for (size_t m : det) {
                size_t env = h.add_port();
                ModeMap lossy;
                lossy.set(m, {{m, std::sqrt(d.transmission)}, {mode_of(env, Pol::H), std::sqrt(1 - d.transmission)}});
                h.apply(lossy);
            }
        }
    }
    const auto &dims = h.level_dims();
    size_t matter_dim = 1;
    for (size_t x : dims) {
        matter_dim *= x;
    }
    std::map<std::vector<uint8_t>, oracle::Vector> groups;
    for (const auto &[k, a] : h.terms()) {
        std::vector<uint8_t> occ(k.begin() + static_cast<long>(dims.size()), k.end());
        auto it = groups.find(occ);
        if (it == groups.end()) {
            it = groups.emplace(occ, oracle::Vector::Zero(static_cast<Eigen::Index>(matter_dim))).first;
        }
        it->second[static_cast<Eigen::Index>(matter_index(k, dims))] += a;
    }
    std::vector<DetectionBranch> out;
    for (auto &[occ, vec] : groups) {
        double p = vec.squaredNorm();
        if (p < 1e-24) {
            continue;
        }
        DetectionBranch b{{}, occ, p, StateVector::from_amplitudes(dims, vec / std::sqrt(p))};
        for (const auto &det : detectors) {
            size_t n = 0;
            for (size_t m : det) {
                n += occ[m];
            }
            b.clicks.push_back(n > 0 ? 1 : 0);
        }
        out.push_back(std::move(b));
    }
    return out;
}

Ensemble merge_members(const std::vector<std::pair<double, StateVector>> &weighted, double tol) {
    Ensemble e;
    double total = 0;
    for (const auto &[w, s] : weighted) {
        total += w;
        bool merged = false;
        for (auto &[ew, es] : e.members) {
            if (es.dims() == s.dims() && oracle::fidelity(es, s) > 1 - tol) {
                ew += w;
                merged = true;
                break;
            }
        }
        if (!merged) {
            e.members.emplace_back(w, s);
        }
    }
    if (total > 0) {
        for (auto &[w, s] : e.members) {
            w /= total;
        }
    }
    return e;
}

DetectionResult detect(const HybridState &h, const DetectorModel &d, const std::vector<Detector> &detectors,
                       Rng &rng) {
    auto branches = enumerate_detection(h, d, detectors);
    double total = 0;
    for (const auto &b : branches) {
        total += b.probability;
    }
    if (branches.empty() || total <= 0) {
        throw std::invalid_argument("detect: state has zero norm");
    }
    double u = rng.uniform() * total;
    size_t pick = branches.size() - 1;
    for (size_t i = 0; i < branches.size(); i++) {
        u -= branches[i].probability;
        if (u < 0) {
            pick = i;
            break;
        }
    }
    DetectionResult r{branches[pick].clicks, 0, {}};
    std::vector<std::pair<double, StateVector>> members;
    for (const auto &b : branches) {
        if (b.clicks == r.clicks) {
            r.probability += b.probability / total;
            members.emplace_back(b.probability, b.matter);
        }
    }
    r.ensemble = merge_members(members);
    return r;
}

}  // namespace graphforge::photonic
