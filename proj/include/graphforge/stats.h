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

#ifndef GRAPHFORGE_STATS_H
#define GRAPHFORGE_STATS_H

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <thread>
#include <vector>

#include <boost/math/distributions/beta.hpp>

namespace graphforge {

struct Interval {
    double lo;
    double hi;
};

/// 95% interval for a binomial proportion k/n. Normal approximation, or
/// Clopper-Pearson when fewer than 30 successes or failures were seen.
inline Interval binomial_ci(uint64_t k, uint64_t n) {
    if (n == 0) {
        return {0, 1};
    }
    double p = static_cast<double>(k) / static_cast<double>(n);
    if (k >= 30 && n - k >= 30) {
        double half = 1.959963984540054 * std::sqrt(p * (1 - p) / static_cast<double>(n));
        return {std::max(0.0, p - half), std::min(1.0, p + half)};
    }
    double kd = static_cast<double>(k);
    double nd = static_cast<double>(n);
    double lo = k == 0 ? 0 : boost::math::quantile(boost::math::beta_distribution<>(kd, nd - kd + 1), 0.025);
    double hi = k == n ? 1 : boost::math::quantile(boost::math::beta_distribution<>(kd + 1, nd - kd), 0.975);
    return {lo, hi};
}

/// Standard error of a binomial proportion, floored at one count so that a
/// 3-sigma band is never empty.
inline double binomial_stderr(double p, uint64_t n) {
    double nd = static_cast<double>(std::max<uint64_t>(n, 1));
    return std::max(std::sqrt(p * (1 - p) / nd), 1 / nd);
}

/// Runs body(begin, end, slot) over [0, n) split into contiguous chunks, one
/// per worker. Results must be folded by the caller in slot order, which
/// keeps them independent of scheduling.
template <class Body>
void parallel_chunks(uint64_t n, unsigned threads, Body body) {
    threads = std::max(1u, std::min<unsigned>(threads, static_cast<unsigned>(std::max<uint64_t>(n, 1))));
    if (threads == 1) {
        body(uint64_t{0}, n, 0u);
        return;
    }
    std::vector<std::thread> pool;
    for (unsigned t = 0; t < threads; t++) {
        uint64_t begin = n * t / threads;
        uint64_t end = n * (t + 1) / threads;
        pool.emplace_back([=, &body] { body(begin, end, t); });
    }
    for (auto &th : pool) {
        th.join();
    }
}

}  // namespace graphforge

#endif
