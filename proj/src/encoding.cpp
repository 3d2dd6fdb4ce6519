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

#include "qfp/encoding.hpp"

#include <algorithm>
#include <bit>
#include <cmath>
#include <numbers>
#include <string>

#include "qfp/errors.hpp"

namespace qfp {

PreprocessPolicy parse_preprocess_policy(std::string_view name) {
    if (name == "min-shift") {
        return PreprocessPolicy::MinShift;
    }
    if (name == "linear-power") {
        return PreprocessPolicy::LinearPower;
    }
    throw ContractViolation("unknown preprocessing policy '" +
                            std::string(name) + "'");
}

std::string_view to_string(PreprocessPolicy policy) {
    return policy == PreprocessPolicy::MinShift ? "min-shift" : "linear-power";
}

RssVector preprocess_rss(const RssVector &raw, const PreprocessConfig &config) {
    if (!std::isfinite(config.floor_dbm)) {
        throw ContractViolation("RSS floor must be finite");
    }
    RssVector out;
    out.stage = RssStage::Preprocessed;
    out.values.reserve(raw.size());
    bool heard_any = false;
    for (double v : raw.values) {
        double dbm = config.floor_dbm;
        if (std::isfinite(v)) {
            heard_any = true;
            dbm = std::max(v, config.floor_dbm);
        } else if (!std::isnan(v)) {
            throw ContractViolation("RSS reading is infinite");
        }
        const double shifted = dbm - config.floor_dbm;
        out.values.push_back(config.policy == PreprocessPolicy::MinShift
                                 ? shifted
                                 : std::pow(10.0, shifted / 10.0));
    }
    if (!heard_any) {
        throw EmptyMeasurement("every RSS reading is missing");
    }
    return out;
}

RssVector normalize(const RssVector &v) {
    double sq = 0.0;
    for (double x : v.values) {
        if (!std::isfinite(x)) {
            throw ContractViolation("cannot normalize a non-finite value");
        }
        sq += x * x;
    }
    if (sq == 0.0) {
        throw ZeroNorm("cannot normalize the zero vector");
    }
    const double inv = 1.0 / std::sqrt(sq);
    RssVector out{v.values, RssStage::Normalized};
    for (double &x : out.values) {
        x *= inv;
    }
    return out;
}

RssVector pad_to_power_of_two(const RssVector &v) {
    RssVector out = v;
    out.values.resize(std::max<std::size_t>(2, std::bit_ceil(v.size())), 0.0);
    return out;
}

bool is_normalized(std::span<const double> values, double tol) {
    double sq = 0.0;
    for (double x : values) {
        sq += x * x;
    }
    return std::abs(sq - 1.0) <= tol;
}

double rotation_angle(const RssVector &v) {
    if (v.size() != 2) {
        throw ContractViolation("rotation_angle expects a 2-component vector");
    }
    if (!is_normalized(v.values)) {
        throw ContractViolation("rotation_angle expects a normalized vector");
    }
    const double a = v.values[0];
    const double b = v.values[1];
    if (a < 0.0 || b < 0.0) {
        throw ContractViolation("rotation_angle expects nonnegative components");
    }
    if (a == 0.0) {
        return std::numbers::pi;
    }
    return 2.0 * std::atan(b / a);
}

std::vector<GateOp>
EncodingPlan::to_gates(std::span<const Qubit> data_qubits) const {
    if (data_qubits.size() != data_bits) {
        throw ContractViolation("data register width does not match the plan");
    }
    std::vector<GateOp> gates;
    gates.reserve(nodes.size());
    for (const auto &node : nodes) {
        std::vector<Control> controls = extra_controls;
        for (const auto &c : node.controls) {
            controls.push_back({data_qubits[c.qubit], c.value});
        }
        gates.push_back(GateOp::u(data_qubits[data_bits - 1 - node.level],
                                  node.theta, std::move(controls)));
    }
    return gates;
}

EncodingPlan build_encoding_plan(const RssVector &v,
                                 std::vector<Control> extra_controls) {
    if (v.size() == 0) {
        throw ContractViolation("cannot encode an empty vector");
    }
    if (!is_normalized(v.values)) {
        throw ContractViolation("encoding expects a normalized vector");
    }
    const RssVector padded = pad_to_power_of_two(v);
    const std::size_t dim = padded.size();
    const auto m = static_cast<std::size_t>(std::countr_zero(dim));

    // mass[k] = squared norm of the aligned block of size 2^s starting at k.
    // Built bottom-up: blocks[s][b] covers indices [b*2^s, (b+1)*2^s).
    std::vector<std::vector<double>> blocks(m + 1);
    blocks[0].resize(dim);
    for (std::size_t j = 0; j < dim; ++j) {
        blocks[0][j] = padded.values[j] * padded.values[j];
    }
    for (std::size_t s = 1; s <= m; ++s) {
        blocks[s].resize(dim >> s);
        for (std::size_t b = 0; b < blocks[s].size(); ++b) {
            blocks[s][b] = blocks[s - 1][2 * b] + blocks[s - 1][2 * b + 1];
        }
    }

    EncodingPlan plan;
    plan.data_bits = m;
    plan.extra_controls = std::move(extra_controls);
    plan.nodes.reserve(dim - 1);
    for (std::size_t level = 0; level < m; ++level) {
        const std::size_t child_size = m - level - 1; // log2 of half-block
        for (std::size_t branch = 0; branch < (std::size_t{1} << level);
             ++branch) {
            double theta = 0.0;
            if (level + 1 == m) {
                const double lo = padded.values[2 * branch];
                const double hi = padded.values[2 * branch + 1];
                if (lo != 0.0 || hi != 0.0) {
                    theta = 2.0 * std::atan2(hi, lo);
                }
            } else {
                const double lo = blocks[child_size][2 * branch];
                const double hi = blocks[child_size][2 * branch + 1];
                if (lo + hi > 0.0) {
                    theta = 2.0 * std::atan2(std::sqrt(hi), std::sqrt(lo));
                }
            }
            RotationNode node{level, branch, theta, {}};
            for (std::size_t r = 0; r < level; ++r) {
                const bool bit = ((branch >> (level - 1 - r)) & 1U) != 0;
                node.controls.push_back({m - 1 - r, bit});
            }
            plan.nodes.push_back(std::move(node));
        }
    }
    return plan;
}

} // namespace qfp
