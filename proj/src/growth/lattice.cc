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

#include <cmath>
#include <stdexcept>

#include "graphforge/growth/growth.h"

namespace graphforge::growth {

namespace {

void check_p(double p) {
    if (!(p >= 0 && p <= 1)) {
        throw std::invalid_argument("success probability must be in [0, 1]");
    }
}

}  // namespace

size_t default_arm_buffer(double p, double failure_budget) {
    check_p(p);
    if (!(failure_budget > 0 && failure_budget < 1)) {
        throw std::invalid_argument("failure budget must be in (0, 1)");
    }
    if (p == 0) {
        throw std::invalid_argument("no finite buffer reaches the failure budget at p = 0");
    }
    if (p == 1) {
        return 1;
    }
    return static_cast<size_t>(std::ceil(std::log(failure_budget) / std::log1p(-p) - 1e-12));
}

LinkResult attempt_link(size_t k_a, size_t k_b, double p, Rng &rng) {
    LinkResult r{false, 0};
    while (k_a > 0 && k_b > 0) {
        r.attempts++;
        k_a--;
        k_b--;
        if (rng.bernoulli(p)) {
            r.success = true;
            break;
        }
    }
    return r;
}

GrowthTrialStats run_cross_strategy(const CrossConfig &c, Rng &rng) {
    check_p(c.p);
    if (c.lattice < 1) {
        throw std::invalid_argument("target lattice must be at least 1 x 1");
    }
    size_t k = c.arm_buffer == 0 ? default_arm_buffer(c.p, c.failure_budget) : c.arm_buffer;
    size_t n = c.lattice;
    GrowthTrialStats s;
    s.qubits_consumed = n * n * (1 + 4 * k);
    size_t links = 2 * n * (n - 1);
    // Arms facing the boundary are never used and are trimmed whole.
    size_t used_arms = 2 * links;
    s.qubits_trimmed = (4 * n * n - used_arms) * k;
    for (size_t i = 0; i < links; i++) {
        LinkResult r = attempt_link(k, k, c.p, rng);
        s.attempts += r.attempts;
        s.elapsed_steps += r.attempts;
        if (!r.success) {
            s.qubits_damaged += 2 * r.attempts;
            s.status = Status::LinkFailed;
            return s;
        }
        s.successes++;
        s.qubits_damaged += 2 * (r.attempts - 1);
        // Buffer left between the two centres, contracted with Y measurements.
        s.qubits_trimmed += 2 * (k - r.attempts + 1);
        s.final_size += 1;
    }
    return s;
}

GrowthTrialStats run_microcluster_strategy(const MicroclusterConfig &c, Rng &rng) {
    check_p(c.p);
    if (c.star_size < 2) {
        throw std::invalid_argument("a star needs at least one leaf");
    }
    if (c.lattice < 1) {
        throw std::invalid_argument("target lattice must be at least 1 x 1");
    }
    size_t n = c.lattice;
    std::vector<size_t> leaves(n * n, c.star_size - 1);
    GrowthTrialStats s;
    s.qubits_consumed = n * n * c.star_size;
    auto link = [&](size_t u, size_t v) {
        LinkResult r = attempt_link(leaves[u], leaves[v], c.p, rng);
        leaves[u] -= r.attempts;
        leaves[v] -= r.attempts;
        s.attempts += r.attempts;
        s.elapsed_steps += r.attempts;
        s.qubits_damaged += 2 * (r.attempts - (r.success ? 1 : 0));
        if (r.success) {
            s.successes++;
            s.final_size += 1;
            // The two joined leaves sit between the centres.
            s.qubits_trimmed += 2;
        }
        return r.success;
    };
    for (size_t r = 0; r < n; r++) {
        for (size_t col = 0; col < n; col++) {
            size_t u = r * n + col;
            if (col + 1 < n && !link(u, u + 1)) {
                s.status = Status::LinkFailed;
                return s;
            }
            if (r + 1 < n && !link(u, u + n)) {
                s.status = Status::LinkFailed;
                return s;
            }
        }
    }
    for (size_t l : leaves) {
        s.qubits_trimmed += l;
    }
    return s;
}

}  // namespace graphforge::growth
