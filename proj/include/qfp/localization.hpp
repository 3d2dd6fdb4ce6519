// Copyright 2026 The qfp Authors

// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at

//     http://www.apache.org/licenses/LICENSE-2.0

// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

/**
 * @file
 * Location matching: the simulated interference circuit (exact or
 * shot-sampled), the closed-form distribution it should produce, and the
 * classical Euclidean nearest-neighbor baseline.
 *
 * After the final Hadamard the ancilla reads 0 with weight |psi + phi_i|^2
 * and 1 with weight |psi - phi_i|^2 on row i. Similarity mode conditions
 * on 0 and picks the most likely location; distance mode conditions on 1
 * and picks the least likely one. For unit vectors the two weights sum to
 * 4, so both modes select the Euclidean-nearest row.
 */

#pragma once

#include <cstddef>
#include <cstdint>
#include <map>
#include <string_view>
#include <vector>

#include "qfp/circuit_builder.hpp"
#include "qfp/encoding.hpp"
#include "qfp/fingerprint.hpp"
#include "qfp/statevector.hpp"

namespace qfp {

enum class Mode {
    /// Condition on ancilla 0, estimate = argmax.
    Similarity,
    /// Condition on ancilla 1, estimate = argmin.
    Distance,
};

[[nodiscard]] Mode parse_mode(std::string_view name);
[[nodiscard]] std::string_view to_string(Mode mode);

inline constexpr double kDefaultTieTolerance = 1e-9;

struct LocationDistribution {
    Mode mode = Mode::Similarity;
    /// Probability of the conditioning ancilla outcome (estimated when
    /// sampled).
    double ancilla_prob = 0.0;
    std::map<LocationId, double> probs;
    LocationId estimate = 0;
    /// Number of shots run and kept after post-selection. Both 0 when exact.
    std::uint64_t shots = 0;
    std::uint64_t postselected = 0;
};

struct LocalizationConfig {
    Mode mode = Mode::Similarity;
    /// 0 means exact probabilities.
    std::uint64_t shots = 0;
    std::uint64_t seed = 0;
    double tie_tolerance = kDefaultTieTolerance;
};

/**
 * Picks the estimate from a distribution: the largest probability in
 * similarity mode, the smallest in distance mode. Every location within
 * `tie_tolerance` of the extreme counts as tied; the lowest id wins.
 */
[[nodiscard]] LocationId
select_estimate(const std::map<LocationId, double> &probs, Mode mode,
                double tie_tolerance = kDefaultTieTolerance);

/// True if a second location lies within `tie_tolerance` of the extreme.
[[nodiscard]] bool has_tie(const std::map<LocationId, double> &probs,
                           Mode mode,
                           double tie_tolerance = kDefaultTieTolerance);

/// Closed-form distribution computed from the vectors, no simulation.
[[nodiscard]] LocationDistribution
analytic_distribution(const Fingerprint &fp, const RssVector &test, Mode mode,
                      double tie_tolerance = kDefaultTieTolerance);

/**
 * @brief The localization circuit for one test vector, simulated once.
 *
 * Holds the joint (ancilla, location) outcome table so that exact and
 * sampled distributions for any mode, shot count or seed are cheap.
 */
class PreparedLocalization {
  public:
    PreparedLocalization(const Fingerprint &fp, const RssVector &test);

    [[nodiscard]] LocationDistribution
    exact(Mode mode, double tie_tolerance = kDefaultTieTolerance) const;

    /// Throws InsufficientShots if no shot matches the mode's ancilla value.
    [[nodiscard]] LocationDistribution
    sampled(Mode mode, std::uint64_t shots, std::uint64_t seed,
            double tie_tolerance = kDefaultTieTolerance) const;

    [[nodiscard]] const LocalizationCircuit &circuit() const {
        return circuit_;
    }

    /// Joint outcome table; bits 0..n-1 are the location register, bit n
    /// is the ancilla.
    [[nodiscard]] const ProbabilityTable &joint_table() const {
        return joint_;
    }

  private:
    LocalizationCircuit circuit_;
    ProbabilityTable joint_;
    std::size_t location_bits_ = 0;
};

/// Builds and simulates the circuit; exact when config.shots == 0.
[[nodiscard]] LocationDistribution
quantum_localize(const Fingerprint &fp, const RssVector &test,
                 const LocalizationConfig &config = {});

struct ClassicalResult {
    LocationId estimate;
    /// Euclidean distance from the test vector to each fingerprint row.
    std::vector<double> distances;
};

/// Nearest row by Euclidean distance; exact ties go to the lowest id.
[[nodiscard]] ClassicalResult classical_localize_euclidean(const Fingerprint &fp,
                                                           const RssVector &test);

struct DualityReport {
    /// A near-tie made the comparison meaningless.
    bool tie = false;
    /// Similarity argmax == distance argmin == classical nearest.
    bool consistent = false;
    LocationId similarity_estimate = 0;
    LocationId distance_estimate = 0;
    LocationId classical_estimate = 0;
};

[[nodiscard]] DualityReport
mode_duality_check(const Fingerprint &fp, const RssVector &test,
                   double tie_tolerance = kDefaultTieTolerance);

} // namespace qfp
