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
 * Synthetic radio map: log-distance path loss with Gaussian shadowing.
 *
 *     RSS(d) = P0 - 10 * gamma * log10(max(d, d0) / d0) + N(0, sigma^2)   [dBm]
 *
 * Fingerprint rows sit at the centers of a rows x cols grid covering the
 * area and store the mean (shadowing-free) RSS, as an averaged survey would.
 * Test samples are drawn uniformly over the area with independent
 * shadowing per sample and RP. Every RSS is clipped at the floor.
 */

#pragma once

#include <cstddef>
#include <cstdint>
#include <utility>
#include <vector>

#include "qfp/encoding.hpp"
#include "qfp/harness/dataset.hpp"

namespace qfp::harness {

struct Point {
    double x_m;
    double y_m;
};

struct TestbedSpec {
    double width_m = 450.0;
    double height_m = 450.0;
    std::size_t locations = 16;
    std::size_t rps = 8;
    /// Explicit RP positions; empty = ring_rps(spec).
    std::vector<Point> rp_positions;
    double path_loss_exponent = 3.0;
    double shadowing_sigma_db = 4.0;
    double reference_power_dbm = -40.0;
    double reference_distance_m = 1.0;
    double floor_dbm = kDefaultFloorDbm;
    std::size_t test_count = 100;
    std::uint64_t seed = 1;
};

struct SyntheticTestbed {
    std::vector<RawFingerprintRow> fingerprint;
    std::vector<RawTestSample> tests;
    std::vector<Point> rp_positions;
};

/// Throws ContractViolation for N or M < 2, a nonpositive extent or
/// sigma < 0.
void validate(const TestbedSpec &spec);

/// rows x cols with rows * cols = N and rows the largest divisor <= sqrt(N).
[[nodiscard]] std::pair<std::size_t, std::size_t> grid_shape(std::size_t locations);

/// Centers of the grid cells, row-major; location id = position in the list.
[[nodiscard]] std::vector<Point> grid_points(const TestbedSpec &spec);

/// Length of one grid cell's diagonal.
[[nodiscard]] double grid_diagonal_spacing(const TestbedSpec &spec);

/// RP positions evenly spaced on a circle of radius min(width, height) / 3
/// around the area center, the first at angle 0.
[[nodiscard]] std::vector<Point> ring_rps(const TestbedSpec &spec);

/// Mean received power at distance d, before shadowing and clipping.
[[nodiscard]] double mean_rss_dbm(const TestbedSpec &spec, double distance_m);

/// Deterministic in spec.seed. A test position whose readings are all at
/// the floor is redrawn.
[[nodiscard]] SyntheticTestbed generate_synthetic_testbed(const TestbedSpec &spec);

[[nodiscard]] Dataset prepare_dataset(const SyntheticTestbed &testbed,
                                      const PreprocessConfig &config);

} // namespace qfp::harness
