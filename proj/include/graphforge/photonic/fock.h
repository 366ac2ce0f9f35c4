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

#ifndef GRAPHFORGE_PHOTONIC_FOCK_H
#define GRAPHFORGE_PHOTONIC_FOCK_H

#include <cstdint>
#include <map>
#include <vector>

#include "graphforge/oracle/state_vector.h"
#include "graphforge/rng.h"

namespace graphforge::photonic {

using oracle::Complex;
using oracle::Matrix;
using oracle::StateVector;

/// Every spatial port carries an h and a v mode.
enum class Pol : uint8_t { H = 0, V = 1 };

inline size_t mode_of(size_t port, Pol pol) {
    return 2 * port + static_cast<size_t>(pol);
}

/// Linear substitution of creation operators, a_i^dag -> sum_j c_ij a_j^dag.
/// Modes without a row are left alone.
class ModeMap {
   public:
    using Row = std::vector<std::pair<size_t, Complex>>;

    void set(size_t mode, Row row) {
        rows_[mode] = std::move(row);
    }
    const std::map<size_t, Row> &rows() const {
        return rows_;
    }
    /// Largest port index touched, or -1 when empty.
    long max_port() const;
    /// Column-unitarity check on the touched modes.
    bool is_isometry(double tol = 1e-10) const;

   private:
    std::map<size_t, Row> rows_;
};

ModeMap phase_shifter(double phi, size_t port);

/// h -> cos h + e^{i phi} sin v, v -> cos v - e^{-i phi} sin h.
ModeMap waveplate(double theta, double phi, size_t port);

/// Port in1 -> cos out3 + e^{i phi} sin out4, in2 -> cos out4 - e^{-i phi}
/// sin out3, on both polarizations. cos^2 theta is the transmission.
ModeMap beam_splitter(double theta, double phi, size_t in1, size_t in2, size_t out3, size_t out4);

/// Reflects v: 1h -> 3h, 1v -> 4v, 2h -> 4h, 2v -> -3v.
ModeMap polarizing_beam_splitter(size_t in1, size_t in2, size_t out3, size_t out4);

/// Each photon of `port` stays with amplitude sqrt(T) and otherwise moves to
/// `env_port`, which must start empty.
ModeMap loss(size_t port, double T, size_t env_port);

/// Joint state of matter nodes (finite level systems) and photonic modes.
/// Fock amplitudes are for normalized number states, so a^dag a^dag |vac>
/// is stored as sqrt(2) |2>.
class HybridState {
   public:
    /// Key: node levels followed by mode occupations.
    using Key = std::vector<uint8_t>;

    HybridState(std::vector<size_t> level_dims, size_t ports);
    /// Matter state with every mode empty.
    static HybridState from_matter(const StateVector &matter, size_t ports);

    size_t num_nodes() const {
        return dims_.size();
    }
    const std::vector<size_t> &level_dims() const {
        return dims_;
    }
    size_t ports() const {
        return ports_;
    }
    /// Appends an empty port and returns its index.
    size_t add_port();

    const std::map<Key, Complex> &terms() const {
        return terms_;
    }
    void add_term(const std::vector<uint8_t> &levels, const std::vector<uint8_t> &occupation, Complex amp);
    Complex amplitude(const std::vector<uint8_t> &levels, const std::vector<uint8_t> &occupation) const;

    /// Applies a^dag on `mode` to every term.
    void create(size_t mode);
    /// Applies the substitution; throws std::invalid_argument for a port
    /// that does not exist.
    void apply(const ModeMap &m);
    /// Unitary on the levels of one node.
    void apply_matter(size_t node, const Matrix &u);

    struct Emission {
        uint8_t level;
        size_t mode;
        Complex amplitude;
    };
    /// Replaces every |excited> of `node` by sum amplitude |level> a^dag_mode.
    void emit(size_t node, uint8_t excited, const std::vector<Emission> &channels);

    double norm() const;
    /// Total photon numbers that occur with nonzero amplitude.
    std::vector<size_t> photon_numbers() const;
    /// Probability that the modes in `modes` hold exactly `count` photons.
    double probability_of_count(const std::vector<size_t> &modes, size_t count) const;

   private:
    std::vector<size_t> dims_;
    size_t ports_;
    std::map<Key, Complex> terms_;
};

struct DetectorModel {
    /// Survival probability of each photon up to and including detection.
    double transmission = 1;
    /// Kept for the record; always zero.
    double dark_count_prob = 0;
};

/// Modes watched by one non-number-resolving detector.
using Detector = std::vector<size_t>;

/// One pure branch after every photon is absorbed: a fixed occupation of
/// all modes, including loss reservoirs.
struct DetectionBranch {
    std::vector<int> clicks;
    std::vector<uint8_t> occupation;
    double probability;
    /// Normalized matter state; scalar when there are no nodes.
    StateVector matter;
};

/// All branches, after applying the model's loss to each detector's modes.
/// Probabilities sum to the state's squared norm.
std::vector<DetectionBranch> enumerate_detection(HybridState h, const DetectorModel &d,
                                                 const std::vector<Detector> &detectors);

/// Weighted pure states; weights sum to 1.
struct Ensemble {
    std::vector<std::pair<double, StateVector>> members;
};

/// Combines members equal up to global phase (fidelity above 1 - tol).
Ensemble merge_members(const std::vector<std::pair<double, StateVector>> &weighted, double tol = 1e-9);

struct DetectionResult {
    std::vector<int> clicks;
    double probability;
    Ensemble ensemble;
};

/// Samples a click pattern and returns the matter ensemble conditioned on it.
DetectionResult detect(const HybridState &h, const DetectorModel &d, const std::vector<Detector> &detectors, Rng &rng);

}  // namespace graphforge::photonic

#endif
