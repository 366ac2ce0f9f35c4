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

#include <algorithm>
#include <cmath>
#include <limits>
#include <numeric>
#include <stdexcept>

#include "graphforge/growth/growth.h"

namespace graphforge::growth {

namespace {

struct UnionFind {
    std::vector<size_t> parent;
    explicit UnionFind(size_t n) : parent(n) {
        std::iota(parent.begin(), parent.end(), size_t{0});
    }
    size_t find(size_t x) {
        while (parent[x] != x) {
            parent[x] = parent[parent[x]];
            x = parent[x];
        }
        return x;
    }
    void unite(size_t a, size_t b) {
        a = find(a);
        b = find(b);
        if (a != b) {
            parent[std::max(a, b)] = std::min(a, b);
        }
    }
};

size_t bond_count(size_t L) {
    return 2 * L * (L - 1);
}

std::pair<size_t, size_t> bond_sites(size_t L, size_t e) {
    size_t h = L * (L - 1);
    if (e < h) {
        size_t r = e / (L - 1), c = e % (L - 1);
        return {r * L + c, r * L + c + 1};
    }
    e -= h;
    size_t r = e / L, c = e % L;
    return {r * L + c, (r + 1) * L + c};
}

// Sites of the block's spanning cluster, or empty when it has none.
std::vector<size_t> block_cluster(size_t L, size_t r0, size_t c0, size_t b, const std::vector<bool> &open) {
    UnionFind uf(b * b);
    auto local = [&](size_t s) { return (s / L - r0) * b + (s % L - c0); };
    auto inside = [&](size_t s) {
        size_t r = s / L, c = s % L;
        return r >= r0 && r < r0 + b && c >= c0 && c < c0 + b;
    };
    for (size_t e = 0; e < open.size(); e++) {
        if (!open[e]) {
            continue;
        }
        auto [x, y] = bond_sites(L, e);
        if (inside(x) && inside(y)) {
            uf.unite(local(x), local(y));
        }
    }
    // Sides touched, per root: left, right, top, bottom bits.
    std::vector<uint8_t> sides(b * b, 0);
    for (size_t i = 0; i < b; i++) {
        sides[uf.find(i * b)] |= 1;
        sides[uf.find(i * b + b - 1)] |= 2;
        sides[uf.find(i)] |= 4;
        sides[uf.find((b - 1) * b + i)] |= 8;
    }
    size_t root = SIZE_MAX;
    for (size_t i = 0; i < b * b; i++) {
        if (sides[i] == 15) {
            root = i;
            break;
        }
    }
    std::vector<size_t> out;
    if (root == SIZE_MAX) {
        return out;
    }
    for (size_t i = 0; i < b * b; i++) {
        if (uf.find(i) == root) {
            out.push_back((r0 + i / b) * L + c0 + i % b);
        }
    }
    return out;
}

bool share_site(const std::vector<size_t> &x, const std::vector<size_t> &y) {
    size_t i = 0, j = 0;
    while (i < x.size() && j < y.size()) {
        if (x[i] == y[j]) {
            return true;
        }
        x[i] < y[j] ? i++ : j++;
    }
    return false;
}

// Interpolated p where the curves of two sizes cross; NaN when they do not.
double curve_crossing(const std::vector<double> &small, const std::vector<double> &big, const std::vector<double> &ps) {
    auto rate = [](const std::vector<double> &sorted, double p) {
        double k = static_cast<double>(std::lower_bound(sorted.begin(), sorted.end(), p) - sorted.begin());
        return k / static_cast<double>(sorted.size());
    };
    double sum = 0;
    size_t count = 0;
    // Last nonzero difference; zeros in between are skipped over.
    double prev_p = 0, prev_d = 0;
    for (double p : ps) {
        double d = rate(big, p) - rate(small, p);
        if (d == 0) {
            continue;
        }
        if (prev_d * d < 0) {
            sum += prev_p + (p - prev_p) * prev_d / (prev_d - d);
            count++;
        }
        prev_p = p;
        prev_d = d;
    }
    return count == 0 ? std::numeric_limits<double>::quiet_NaN() : sum / static_cast<double>(count);
}

double mean_crossing(const std::vector<std::vector<double>> &thresholds, const std::vector<double> &ps,
                     std::vector<double> *pairs) {
    double sum = 0;
    for (size_t i = 0; i + 1 < thresholds.size(); i++) {
        double x = curve_crossing(thresholds[i], thresholds[i + 1], ps);
        if (std::isnan(x)) {
            return x;
        }
        if (pairs) {
            pairs->push_back(x);
        }
        sum += x;
    }
    return sum / static_cast<double>(thresholds.size() - 1);
}

}  // namespace

void validate(const PercolationConfig &c) {
    if (c.L < 2) {
        throw std::invalid_argument("lattice side must be at least 2");
    }
    if (!(c.p >= 0 && c.p <= 1)) {
        throw std::invalid_argument("success probability must be in [0, 1]");
    }
    if (c.arms < 1) {
        throw std::invalid_argument("micro-clusters need at least one arm");
    }
    size_t b = c.block == 0 ? c.L : c.block;
    if (b > c.L || b < 2) {
        throw std::invalid_argument("block side must be in [2, L]");
    }
    if (c.block != 0 && (c.overlap < 1 || c.overlap >= b)) {
        throw std::invalid_argument("block overlap must be in [1, block)");
    }
}

std::vector<double> sample_bond_uniforms(size_t L, Rng &rng) {
    if (L < 2) {
        throw std::invalid_argument("lattice side must be at least 2");
    }
    std::vector<double> u(bond_count(L));
    for (double &x : u) {
        x = rng.uniform();
    }
    return u;
}

PercolationResult percolation_trial(const PercolationConfig &c, const std::vector<double> &uniforms) {
    validate(c);
    size_t L = c.L;
    if (uniforms.size() != bond_count(L)) {
        throw std::invalid_argument("uniform count does not match the lattice");
    }
    std::vector<bool> open(uniforms.size());
    size_t open_bonds = 0;
    for (size_t e = 0; e < uniforms.size(); e++) {
        open[e] = uniforms[e] < c.p;
        open_bonds += open[e];
    }
    size_t b = c.block == 0 ? L : c.block;
    size_t stride = c.block == 0 ? L : b - c.overlap;
    size_t nb = c.block == 0 ? 1 : (L - c.overlap) / stride;

    PercolationResult res{true, nb, std::vector<bool>(nb * nb), {}, open_bonds};
    std::vector<std::vector<size_t>> clusters(nb * nb);
    for (size_t i = 0; i < nb; i++) {
        for (size_t j = 0; j < nb; j++) {
            clusters[i * nb + j] = block_cluster(L, i * stride, j * stride, b, open);
            res.block_success[i * nb + j] = !clusters[i * nb + j].empty();
            res.success = res.success && res.block_success[i * nb + j];
        }
    }
    for (size_t i = 0; i < nb && res.success; i++) {
        for (size_t j = 0; j < nb && res.success; j++) {
            const auto &x = clusters[i * nb + j];
            if (j + 1 < nb && !share_site(x, clusters[i * nb + j + 1])) {
                res.success = false;
            }
            if (i + 1 < nb && !share_site(x, clusters[(i + 1) * nb + j])) {
                res.success = false;
            }
        }
    }
    if (!res.success) {
        return res;
    }
    std::vector<bool> kept(L * L, false);
    for (size_t k = 0; k < nb * nb; k++) {
        // Representative: cluster site nearest the block centre.
        double cr = static_cast<double>((k / nb) * stride) + (static_cast<double>(b) - 1) / 2;
        double cc = static_cast<double>((k % nb) * stride) + (static_cast<double>(b) - 1) / 2;
        size_t best = clusters[k].front();
        double best_d = std::numeric_limits<double>::infinity();
        for (size_t s : clusters[k]) {
            kept[s] = true;
            double d = std::abs(static_cast<double>(s / L) - cr) + std::abs(static_cast<double>(s % L) - cc);
            if (d < best_d) {
                best_d = d;
                best = s;
            }
        }
        res.representatives.push_back(best);
    }
    size_t kept_count = static_cast<size_t>(std::count(kept.begin(), kept.end(), true));
    res.xy_removals = kept_count - nb * nb;
    res.z_removals = L * L - kept_count;
    res.qubits_per_final_vertex =
        static_cast<double>(L * L * (c.arms + 1)) / static_cast<double>(nb * nb);
    return res;
}

PercolationResult run_percolation(const PercolationConfig &c, Rng &rng) {
    validate(c);
    return percolation_trial(c, sample_bond_uniforms(c.L, rng));
}

double crossing_threshold(size_t L, const std::vector<double> &uniforms) {
    if (L < 2 || uniforms.size() != bond_count(L)) {
        throw std::invalid_argument("uniform count does not match the lattice");
    }
    std::vector<size_t> order(uniforms.size());
    std::iota(order.begin(), order.end(), size_t{0});
    std::sort(order.begin(), order.end(), [&](size_t x, size_t y) { return uniforms[x] < uniforms[y]; });
    size_t left = L * L, right = L * L + 1;
    UnionFind uf(L * L + 2);
    for (size_t r = 0; r < L; r++) {
        uf.unite(r * L, left);
        uf.unite(r * L + L - 1, right);
    }
    for (size_t e : order) {
        auto [x, y] = bond_sites(L, e);
        uf.unite(x, y);
        if (uf.find(left) == uf.find(right)) {
            return uniforms[e];
        }
    }
    throw std::logic_error("a fully open lattice must span");
}

std::vector<double> p_grid(double p_min, double p_max, double step) {
    if (!(step > 0) || p_max < p_min || p_min < 0 || p_max > 1) {
        throw std::invalid_argument("p grid needs 0 <= p_min <= p_max <= 1 and step > 0");
    }
    size_t count = static_cast<size_t>(std::floor((p_max - p_min) / step + 1e-9)) + 1;
    std::vector<double> ps;
    for (size_t k = 0; k < count; k++) {
        ps.push_back(p_min + static_cast<double>(k) * step);
    }
    return ps;
}

namespace {

std::vector<double> sorted_thresholds(size_t L, uint64_t trials, uint64_t seed, unsigned threads) {
    auto t = run_trials<double>(trials, seed, threads, [L](Rng &rng) {
        return crossing_threshold(L, sample_bond_uniforms(L, rng));
    });
    std::sort(t.begin(), t.end());
    return t;
}

std::vector<SweepPoint> curve(const std::vector<double> &sorted, const std::vector<double> &ps) {
    std::vector<SweepPoint> out;
    for (double p : ps) {
        // Spans at p exactly when the threshold bond is already open.
        uint64_t k = static_cast<uint64_t>(std::lower_bound(sorted.begin(), sorted.end(), p) - sorted.begin());
        double r = static_cast<double>(k) / static_cast<double>(sorted.size());
        out.push_back({p, r, std::sqrt(r * (1 - r) / static_cast<double>(sorted.size()))});
    }
    return out;
}

}  // namespace

std::vector<SweepPoint> spanning_sweep(size_t L, const std::vector<double> &ps, uint64_t trials, uint64_t seed,
                                       unsigned threads) {
    if (L < 2) {
        throw std::invalid_argument("lattice side must be at least 2");
    }
    if (trials == 0) {
        throw std::invalid_argument("need at least one trial");
    }
    return curve(sorted_thresholds(L, trials, seed, threads), ps);
}

ThresholdEstimate estimate_threshold(const std::vector<size_t> &sizes, const std::vector<double> &ps, uint64_t trials,
                                     uint64_t seed, unsigned threads, size_t bootstrap) {
    if (sizes.size() < 2) {
        throw std::invalid_argument("insufficient data: need at least two lattice sizes");
    }
    if (ps.size() < 2 || trials == 0) {
        throw std::invalid_argument("insufficient data: need a p sweep and trials");
    }
    std::vector<std::vector<double>> thresholds;
    ThresholdEstimate est;
    for (size_t i = 0; i < sizes.size(); i++) {
        if (sizes[i] < 2) {
            throw std::invalid_argument("lattice side must be at least 2");
        }
        thresholds.push_back(sorted_thresholds(sizes[i], trials, trial_seed(seed, 1000003 + i), threads));
        est.curves.push_back(curve(thresholds.back(), ps));
    }
    est.estimate = mean_crossing(thresholds, ps, &est.pair_crossings);
    if (std::isnan(est.estimate)) {
        throw std::invalid_argument("insufficient data: spanning curves do not cross inside the sweep");
    }
    Rng rng(trial_seed(seed, 2000003));
    double sum = 0, sum2 = 0;
    size_t used = 0;
    for (size_t r = 0; r < bootstrap; r++) {
        std::vector<std::vector<double>> resampled;
        for (const auto &t : thresholds) {
            std::vector<double> s(t.size());
            for (double &x : s) {
                x = t[rng.below(t.size())];
            }
            std::sort(s.begin(), s.end());
            resampled.push_back(std::move(s));
        }
        double x = mean_crossing(resampled, ps, nullptr);
        if (!std::isnan(x)) {
            sum += x;
            sum2 += x * x;
            used++;
        }
    }
    est.error = used > 1 ? std::sqrt(std::max(0.0, (sum2 - sum * sum / static_cast<double>(used)) /
                                                       static_cast<double>(used - 1)))
                         : 0;
    return est;
}

}  // namespace graphforge::growth
