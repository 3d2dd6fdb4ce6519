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
 * RSS preprocessing, normalization, and amplitude loading by a binary tree
 * of controlled y-rotations.
 */

#pragma once

#include <cstddef>
#include <span>
#include <string_view>
#include <vector>

#include "qfp/gate.hpp"

namespace qfp {

enum class RssStage { Raw, Preprocessed, Normalized };

/**
 * @brief One RSS reading per reference point.
 *
 * Raw vectors hold dBm and mark unheard reference points with NaN. Later
 * stages are nonnegative and dimensionless.
 */
struct RssVector {
    std::vector<double> values;
    RssStage stage = RssStage::Raw;

    [[nodiscard]] std::size_t size() const { return values.size(); }
};

enum class PreprocessPolicy { MinShift, LinearPower };

inline constexpr double kDefaultFloorDbm = -110.0;

struct PreprocessConfig {
    PreprocessPolicy policy = PreprocessPolicy::MinShift;
    double floor_dbm = kDefaultFloorDbm;
};

/// Parses "min-shift" or "linear-power"; throws ContractViolation otherwise.
[[nodiscard]] PreprocessPolicy parse_preprocess_policy(std::string_view name);
[[nodiscard]] std::string_view to_string(PreprocessPolicy policy);

/**
 * Missing (NaN) readings and readings below the floor are set to the floor,
 * then min-shift maps v to v - floor and linear-power maps v to
 * 10^((v - floor) / 10). Throws EmptyMeasurement if every reading is
 * missing.
 */
[[nodiscard]] RssVector preprocess_rss(const RssVector &raw,
                                       const PreprocessConfig &config = {});

/// Scales to unit Euclidean norm. Throws ZeroNorm for an all-zero vector.
[[nodiscard]] RssVector normalize(const RssVector &v);

/// Zero-pads to the next power of two (at least 2).
[[nodiscard]] RssVector pad_to_power_of_two(const RssVector &v);

/// Tolerance on |sum v^2 - 1| accepted as "normalized".
inline constexpr double kNormTolerance = 1e-9;

[[nodiscard]] bool is_normalized(std::span<const double> values,
                                 double tol = kNormTolerance);

/**
 * @brief Angle t with U(t)|0> = a|0> + b|1> for a unit vector (a, b), a, b >= 0.
 *
 * Equals 2 * atan(b / a), with a = 0 mapped to pi.
 */
[[nodiscard]] double rotation_angle(const RssVector &v);

/// One controlled rotation of the loading tree.
struct RotationNode {
    /// Depth in the tree; level 0 acts on the most significant data qubit.
    std::size_t level;
    /// Value of the `level` more-significant data qubits selecting this node.
    std::size_t branch;
    double theta;
    /// Data-qubit controls, given as offsets into the data register.
    std::vector<Control> controls;
};

/**
 * @brief Rotation tree that maps |0...0> to sum_j v_j |j> on a data register.
 *
 * Nodes are ordered level by level (breadth first), which is also a valid
 * application order. Always M - 1 nodes for a padded length M.
 */
struct EncodingPlan {
    std::size_t data_bits = 1;
    std::vector<RotationNode> nodes;
    /// Added to every node when the plan is lowered to gates.
    std::vector<Control> extra_controls;

    /// Lowers the plan onto concrete data qubits (data_qubits[j] holds bit j).
    [[nodiscard]] std::vector<GateOp>
    to_gates(std::span<const Qubit> data_qubits) const;
};

/**
 * Builds the loading tree for a normalized vector, zero-padding to a power
 * of two. Upper levels split the squared mass of each half; the last level
 * uses the signed leaf pair, so real vectors of either sign load exactly.
 * Zero-mass subtrees get theta = 0.
 */
[[nodiscard]] EncodingPlan
build_encoding_plan(const RssVector &v,
                    std::vector<Control> extra_controls = {});

} // namespace qfp
