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

#include "graphforge/photonic/protocols.h"

#include <algorithm>
#include <cmath>
#include <stdexcept>

#include <unsupported/Eigen/KroneckerProduct>

namespace graphforge::photonic {

namespace {

constexpr double kIdealTol = 1e-9;

Detector port_detector(size_t port) {
    return {mode_of(port, Pol::H), mode_of(port, Pol::V)};
}

int click_count(const std::vector<int> &clicks) {
    int n = 0;
    for (int c : clicks) {
        n += c;
    }
    return n;
}

/// Drops the |e> level of every 3-level node; the e population must be zero.
StateVector to_qubits(const StateVector &s) {
    const auto &dims = s.dims();
    size_t n = dims.size();
    oracle::Vector out = oracle::Vector::Zero(static_cast<Eigen::Index>(size_t{1} << n));
    double dropped = 0;
    for (Eigen::Index i = 0; i < s.amplitudes().size(); i++) {
        size_t rest = static_cast<size_t>(i);
        size_t q = 0;
        bool excited = false;
        for (size_t k = n; k-- > 0;) {
            size_t level = rest % dims[k];
            rest /= dims[k];
            excited |= level >= 2;
            q |= (level & 1) << (n - 1 - k);
        }
        if (excited) {
            dropped += std::norm(s.amplitudes()[i]);
        } else {
            out[static_cast<Eigen::Index>(q)] = s.amplitudes()[i];
        }
    }
    if (dropped > 1e-12) {
        throw std::logic_error("matter state still holds excited population");
    }
    return StateVector::from_amplitudes(std::vector<size_t>(n, 2), out);
}

/// Embeds qubits into levels {0, 1} of 3-level nodes at `lift`.
StateVector lift_nodes(const StateVector &q, const std::vector<size_t> &lift) {
    size_t n = q.num_sites();
    std::vector<size_t> dims(n, 2);
    for (size_t k : lift) {
        dims[k] = 3;
    }
    size_t total = 1;
    for (size_t d : dims) {
        total *= d;
    }
    oracle::Vector out = oracle::Vector::Zero(static_cast<Eigen::Index>(total));
    for (Eigen::Index i = 0; i < q.amplitudes().size(); i++) {
        size_t idx = 0;
        for (size_t k = 0; k < n; k++) {
            idx = idx * dims[k] + ((static_cast<size_t>(i) >> (n - 1 - k)) & 1);
        }
        out[static_cast<Eigen::Index>(idx)] = q.amplitudes()[i];
    }
    return StateVector::from_amplitudes(dims, out);
}

StateVector bell_state(double phi) {
    oracle::Vector v = oracle::Vector::Zero(4);
    v[1] = 1 / std::sqrt(2.0);
    v[2] = std::polar(1 / std::sqrt(2.0), phi);
    return StateVector::from_amplitudes({2, 2}, v);
}

/// Reads phi off a two-qubit state and reports whether it is the Bell state.
std::pair<double, bool> bell_phase(const StateVector &s) {
    Complex a01 = s.amplitudes()[1];
    Complex a10 = s.amplitudes()[2];
    if (std::abs(a01) < 1e-12) {
        return {0, false};
    }
    double phi = std::arg(a10 / a01);
    return {phi, oracle::fidelity(s, bell_state(phi)) > 1 - kIdealTol};
}

void check_T(double T, bool allow_zero) {
    if (!(T <= 1 && (allow_zero ? T >= 0 : T > 0))) {
        throw std::invalid_argument(allow_zero ? "T must lie in [0, 1]" : "T must lie in (0, 1]");
    }
}

struct RoundBranch {
    std::vector<int> clicks;
    double probability;
    StateVector state;  // qubits
};

/// One single-photon heralding round on qubits a and b of `q`: pi pulse
/// |1> -> |e>, emission back to |1>, loss, path phase, 50/50 splitter.
std::vector<RoundBranch> herald_round(const StateVector &q, size_t a, size_t b, double T, double path_phase) {
    HybridState h = HybridState::from_matter(lift_nodes(q, {a, b}), 6);
    Matrix pulse = Matrix::Zero(3, 3);
    pulse(0, 0) = 1;
    pulse(kLevelE, kLevel1) = 1;
    pulse(kLevel1, kLevelE) = 1;
    h.apply_matter(a, pulse);
    h.apply_matter(b, pulse);
    h.emit(a, kLevelE, {{kLevel1, mode_of(0, Pol::H), 1}});
    h.emit(b, kLevelE, {{kLevel1, mode_of(1, Pol::H), 1}});
    h.apply(loss(0, T, 4));
    h.apply(loss(1, T, 5));
    h.apply(phase_shifter(path_phase, 1));
    h.apply(beam_splitter(M_PI / 4, 0, 0, 1, 2, 3));
    std::vector<RoundBranch> out;
    for (auto &br : enumerate_detection(h, DetectorModel{}, {port_detector(2), port_detector(3)})) {
        out.push_back({br.clicks, br.probability, to_qubits(br.matter)});
    }
    return out;
}

StateVector initial_pair(const DoubleHeraldParams &p) {
    if (p.context) {
        const auto &dims = p.context->dims();
        if (std::any_of(dims.begin(), dims.end(), [](size_t d) { return d != 2; })) {
            throw std::invalid_argument("double heralding context must be a qubit register");
        }
        if (p.a == p.b || p.a >= dims.size() || p.b >= dims.size()) {
            throw std::invalid_argument("double heralding: bad emitter indices");
        }
        StateVector s = *p.context;
        s.normalize();
        return s;
    }
    if (p.a != 0 || p.b != 1) {
        throw std::invalid_argument("double heralding: emitter indices need a context state");
    }
    oracle::Vector v = oracle::Vector::Constant(4, 0.5);
    return StateVector::from_amplitudes({2, 2}, v);
}

void flip_pair(StateVector &s, size_t a, size_t b) {
    s.apply_unitary(oracle::gates::x(), {a});
    s.apply_unitary(oracle::gates::x(), {b});
}

}  // namespace

std::vector<ProtocolBranch> cabrillo_branches(const CabrilloParams &p) {
    if (!(p.theta > 0 && p.theta < M_PI / 2)) {
        throw std::invalid_argument("cabrillo: theta must lie in (0, pi/2)");
    }
    check_T(p.T, false);
    double c = std::cos(p.theta);
    double s = std::sin(p.theta);
    oracle::Vector node(3);
    node << c, 0, s;
    oracle::Vector v = Eigen::kroneckerProduct(node, node).eval();
    HybridState h = HybridState::from_matter(StateVector::from_amplitudes({3, 3}, v), 6);
    h.emit(0, kLevelE, {{kLevel1, mode_of(0, Pol::H), 1}});
    h.emit(1, kLevelE, {{kLevel1, mode_of(1, Pol::H), 1}});
    h.apply(loss(0, p.T, 4));
    h.apply(loss(1, p.T, 5));
    h.apply(phase_shifter(p.path_phase, 1));
    h.apply(beam_splitter(M_PI / 4, 0, 0, 1, 2, 3));
    std::vector<ProtocolBranch> out;
    for (auto &br : enumerate_detection(h, DetectorModel{}, {port_detector(2), port_detector(3)})) {
        ProtocolBranch b{{br.clicks}, br.probability, click_count(br.clicks) == 1, 0, to_qubits(br.matter)};
        if (b.success) {
            std::tie(b.phase, b.ideal) = bell_phase(b.state);
        }
        out.push_back(std::move(b));
    }
    return out;
}

std::vector<ProtocolBranch> double_heralding_round1(const DoubleHeraldParams &p) {
    check_T(p.T, false);
    StateVector start = initial_pair(p);
    std::vector<ProtocolBranch> out;
    for (auto &r : herald_round(start, p.a, p.b, p.T, p.path_phase)) {
        ProtocolBranch b{{r.clicks}, r.probability, click_count(r.clicks) == 1, 0, r.state};
        if (b.success && !p.context) {
            std::tie(b.phase, b.ideal) = bell_phase(b.state);
        }
        out.push_back(std::move(b));
    }
    return out;
}

std::vector<ProtocolBranch> double_heralding_branches(const DoubleHeraldParams &p) {
    check_T(p.T, false);
    StateVector start = initial_pair(p);
    std::optional<StateVector> projected;
    if (p.context) {
        // Odd parity projection of the context, the ideal outcome.
        oracle::Vector v = start.amplitudes();
        size_t n = start.num_sites();
        for (Eigen::Index i = 0; i < v.size(); i++) {
            size_t za = (static_cast<size_t>(i) >> (n - 1 - p.a)) & 1;
            size_t zb = (static_cast<size_t>(i) >> (n - 1 - p.b)) & 1;
            if (za == zb) {
                v[i] = 0;
            }
        }
        if (v.norm() > 1e-12) {
            projected = StateVector::from_amplitudes(start.dims(), v / v.norm());
        }
    }
    std::vector<ProtocolBranch> out;
    for (auto &r1 : herald_round(start, p.a, p.b, p.T, p.path_phase)) {
        if (click_count(r1.clicks) != 1) {
            out.push_back({{r1.clicks}, r1.probability, false, 0, r1.state});
            continue;
        }
        StateVector flipped = r1.state;
        flip_pair(flipped, p.a, p.b);
        for (auto &r2 : herald_round(flipped, p.a, p.b, p.T, p.path_phase)) {
            ProtocolBranch b{{r1.clicks, r2.clicks}, r1.probability * r2.probability, click_count(r2.clicks) == 1, 0,
                             r2.state};
            flip_pair(b.state, p.a, p.b);
            if (b.success) {
                if (p.context) {
                    // Detector 0 carries a relative minus sign in each round.
                    bool differ = r1.clicks[0] != r2.clicks[0];
                    if (differ) {
                        b.state.apply_unitary(oracle::gates::z(), {p.a});
                    }
                    b.phase = differ ? M_PI : 0;
                    b.ideal = projected && oracle::fidelity(b.state, *projected) > 1 - kIdealTol;
                } else {
                    std::tie(b.phase, b.ideal) = bell_phase(b.state);
                }
            }
            out.push_back(std::move(b));
        }
    }
    return out;
}

std::vector<ProtocolBranch> duan_kimble_branches(const DuanKimbleParams &p) {
    if (std::abs(p.g0 * p.g0 + p.g1 * p.g1 - 1) > 1e-9) {
        throw std::invalid_argument("duan_kimble: need g0^2 + g1^2 = 1");
    }
    check_T(p.T, true);
    oracle::Vector v = oracle::Vector::Zero(9);
    v[3 * kLevelE + kLevelE] = 1;
    // Ports: a, b, c, d, L1, L2, R1, R2, an unused PBS input, two reservoirs.
    HybridState h = HybridState::from_matter(StateVector::from_amplitudes({3, 3}, v), 11);
    for (size_t node : {0, 1}) {
        h.emit(node, kLevelE, {{kLevel0, mode_of(node, Pol::H), p.g0}, {kLevel1, mode_of(node, Pol::V), p.g1}});
    }
    h.apply(loss(0, p.T, 9));
    h.apply(loss(1, p.T, 10));
    h.apply(waveplate(M_PI / 2, 0, 1));
    h.apply(polarizing_beam_splitter(0, 1, 2, 3));
    h.apply(waveplate(M_PI / 4, 0, 2));
    h.apply(waveplate(M_PI / 4, 0, 3));
    h.apply(polarizing_beam_splitter(2, 8, 4, 5));
    h.apply(polarizing_beam_splitter(3, 8, 6, 7));
    std::vector<ProtocolBranch> out;
    auto detectors = {port_detector(4), port_detector(5), port_detector(6), port_detector(7)};
    for (auto &br : enumerate_detection(h, DetectorModel{}, detectors)) {
        bool ok = br.clicks[0] + br.clicks[1] == 1 && br.clicks[2] + br.clicks[3] == 1;
        ProtocolBranch b{{br.clicks}, br.probability, ok, 0, to_qubits(br.matter)};
        if (ok) {
            std::tie(b.phase, b.ideal) = bell_phase(b.state);
        }
        out.push_back(std::move(b));
    }
    return out;
}

double analytic(Analytic kind, double theta, double T) {
    if (!(theta >= 0 && theta <= M_PI / 2)) {
        throw std::invalid_argument("analytic: theta must lie in [0, pi/2]");
    }
    check_T(T, true);
    double s2 = std::sin(theta) * std::sin(theta);
    double c2 = std::cos(theta) * std::cos(theta);
    switch (kind) {
        case Analytic::CabrilloP1:
            return 2 * s2 * c2 * T;
        case Analytic::CabrilloP2:
            return s2 * s2 * (1 - (1 - T) * (1 - T));
        case Analytic::CabrilloEta:
            return s2 * (2 - T) / (2 - s2 * T);
    }
    return 0;
}

std::pair<double, double> double_heralding_weights(double T) {
    check_T(T, false);
    return {2 / (4 - T), (2 - T) / (4 - T)};
}

ProtocolRun sample_branch(const std::vector<ProtocolBranch> &branches, Rng &rng) {
    if (branches.empty()) {
        throw std::invalid_argument("sample_branch: no branches");
    }
    double total = 0;
    for (const auto &b : branches) {
        total += b.probability;
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
    const auto &chosen = branches[pick];
    ProtocolRun r{pick, chosen.success, chosen.clicks, chosen.phase, {}};
    std::vector<std::pair<double, StateVector>> members;
    for (const auto &b : branches) {
        if (b.clicks == chosen.clicks) {
            members.emplace_back(b.probability, b.state);
        }
    }
    r.state = merge_members(members);
    return r;
}

ProtocolRun run_cabrillo(const CabrilloParams &p, Rng &rng) {
    return sample_branch(cabrillo_branches(p), rng);
}

ProtocolRun run_double_heralding(const DoubleHeraldParams &p, Rng &rng) {
    return sample_branch(double_heralding_branches(p), rng);
}

ProtocolRun run_duan_kimble(const DuanKimbleParams &p, Rng &rng) {
    return sample_branch(duan_kimble_branches(p), rng);
}

std::string click_key(const std::vector<std::vector<int>> &clicks) {
    std::string key;
    for (size_t r = 0; r < clicks.size(); r++) {
        if (r) {
            key += '|';
        }
        for (int c : clicks[r]) {
            key += static_cast<char>('0' + c);
        }
    }
    return key;
}

double success_probability(const std::vector<ProtocolBranch> &branches) {
    double p = 0;
    for (const auto &b : branches) {
        if (b.success) {
            p += b.probability;
        }
    }
    return p;
}

ProtocolStats simulate(const std::vector<ProtocolBranch> &branches, uint64_t trials, uint64_t seed,
                       unsigned threads) {
    if (branches.empty()) {
        throw std::invalid_argument("simulate: no branches");
    }
    std::vector<double> cumulative;
    double total = 0;
    for (const auto &b : branches) {
        total += b.probability;
        cumulative.push_back(total);
    }
    std::vector<std::vector<uint64_t>> counts(std::max(1u, threads), std::vector<uint64_t>(branches.size(), 0));
    parallel_chunks(trials, threads, [&](uint64_t begin, uint64_t end, unsigned slot) {
        auto &local = counts[slot];
        for (uint64_t i = begin; i < end; i++) {
            Rng rng(trial_seed(seed, i));
            double u = rng.uniform() * total;
            size_t pick = std::upper_bound(cumulative.begin(), cumulative.end(), u) - cumulative.begin();
            local[std::min(pick, branches.size() - 1)]++;
        }
    });
    ProtocolStats st;
    st.trials = trials;
    for (size_t k = 0; k < branches.size(); k++) {
        uint64_t n = 0;
        for (const auto &c : counts) {
            n += c[k];
        }
        if (branches[k].success) {
            st.successes += n;
            if (!branches[k].ideal) {
                st.impure_successes += n;
            }
        }
        if (n > 0) {
            st.branch_counts[click_key(branches[k].clicks)] += n;
        }
    }
    st.success_rate = trials ? static_cast<double>(st.successes) / static_cast<double>(trials) : 0;
    st.success_ci = binomial_ci(st.successes, trials);
    st.eta_estimate =
        st.successes ? static_cast<double>(st.impure_successes) / static_cast<double>(st.successes) : 0;
    st.eta_ci = binomial_ci(st.impure_successes, st.successes);
    return st;
}

namespace {

double number_field(const nlohmann::json &j, const char *key, std::optional<double> fallback = std::nullopt) {
    if (!j.contains(key)) {
        if (fallback) {
            return *fallback;
        }
        throw std::invalid_argument(std::string("protocol config: missing \"") + key + "\"");
    }
    if (!j[key].is_number()) {
        throw std::invalid_argument(std::string("protocol config: \"") + key + "\" must be a number");
    }
    return j[key].get<double>();
}

double exact_impure_fraction(const std::vector<ProtocolBranch> &branches) {
    double ok = 0;
    double bad = 0;
    for (const auto &b : branches) {
        if (b.success) {
            (b.ideal ? ok : bad) += b.probability;
        }
    }
    return ok + bad > 0 ? bad / (ok + bad) : 0;
}

}  // namespace

nlohmann::json run_protocol_config(const nlohmann::json &config, uint64_t trials, uint64_t seed, unsigned threads) {
    if (!config.is_object() || !config.contains("protocol") || !config["protocol"].is_string()) {
        throw std::invalid_argument("protocol config: need a \"protocol\" string");
    }
    if (trials == 0) {
        throw std::invalid_argument("protocol config: trials must be positive");
    }
    std::string kind = config["protocol"].get<std::string>();
    nlohmann::json out;
    nlohmann::json analytic_json = nlohmann::json::object();
    std::vector<ProtocolBranch> branches;
    if (kind == "cabrillo") {
        CabrilloParams p{number_field(config, "theta"), number_field(config, "T"),
                         number_field(config, "path_phase", 0.0)};
        branches = cabrillo_branches(p);
        double p1 = analytic(Analytic::CabrilloP1, p.theta, p.T);
        double p2 = analytic(Analytic::CabrilloP2, p.theta, p.T);
        analytic_json = {{"p1", p1},
                         {"p2", p2},
                         {"single_click_rate", p1 + p2},
                         {"eta", analytic(Analytic::CabrilloEta, p.theta, p.T)}};
    } else if (kind == "double_herald") {
        DoubleHeraldParams p{number_field(config, "T"), number_field(config, "path_phase", 0.0)};
        branches = double_heralding_branches(p);
        auto [w_psi, w_11] = double_heralding_weights(p.T);
        analytic_json = {{"round1_weights", {w_psi, w_11}}};
    } else if (kind == "duan_kimble") {
        double g0 = number_field(config, "g0");
        double g1 = number_field(config, "g1", std::sqrt(std::max(0.0, 1 - g0 * g0)));
        branches = duan_kimble_branches({g0, g1, number_field(config, "T")});
    } else {
        throw std::invalid_argument("protocol config: unknown protocol \"" + kind + "\"");
    }
    ProtocolStats st = simulate(branches, trials, seed, threads);
    out["protocol"] = kind;
    out["trials"] = st.trials;
    out["successes"] = st.successes;
    out["success_rate"] = st.success_rate;
    out["ci_95"] = {st.success_ci.lo, st.success_ci.hi};
    out["eta_estimate"] = st.eta_estimate;
    out["eta_ci_95"] = {st.eta_ci.lo, st.eta_ci.hi};
    out["branch_counts"] = st.branch_counts;
    out["exact"] = {{"success_probability", success_probability(branches)},
                    {"eta", exact_impure_fraction(branches)}};
    out["analytic"] = analytic_json;
    return out;
}

}  // namespace graphforge::photonic
