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

#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <span>
#include <string_view>
#include <utility>
#include <vector>

#include "qfp/statevector.hpp"

namespace qfp::harness {

inline constexpr std::string_view kSimulatorTimeNote =
    "simulator wall time grows as 2^q on a classical machine and is not "
    "representative of quantum hardware; the logarithmic-time claim assumes "
    "QRAM state preparation on a quantum device and is not reproduced here";

struct ScalingRow {
    std::size_t locations;
    std::size_t rps;
    std::size_t qubits;
    std::size_t gate_count;
    /// Seconds per classical Euclidean match (best of several batches).
    double classical_seconds;
    /// Build + simulate time; empty when the row exceeds the simulator cap.
    std::optional<double> simulator_seconds;
    bool skipped = false;
};

struct ScalingOptions {
    std::size_t simulator_qubit_cap = kMaxQubits;
    std::uint64_t seed = 7;
    /// Minimum wall time of one timing batch.
    double min_batch_seconds = 0.02;
    std::size_t batches = 5;
};

/// Gates the builder emits for N rows (one per location) of M RPs, with N
/// and M powers of two.
[[nodiscard]] std::size_t localization_gate_count(std::size_t locations, std::size_t rps);

/// Sizes must be powers of two >= 2. Rows above the simulator cap report
/// resources only and are marked skipped.
[[nodiscard]] std::vector<ScalingRow>
scaling_report(std::span<const std::pair<std::size_t, std::size_t>> sizes,
               const ScalingOptions &options = {});

struct LinearFit {
    double slope;
    double intercept;
    double r_squared;
};

/// Ordinary least squares y = slope * x + intercept.
[[nodiscard]] LinearFit fit_linear(std::span<const double> xs, std::span<const double> ys);

} // namespace qfp::harness
