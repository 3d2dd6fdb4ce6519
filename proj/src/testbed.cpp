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

#include "qfp/harness/testbed.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <random>

#include "qfp/errors.hpp"
#include "qfp/seeding.hpp"

namespace qfp::harness {

namespace {

constexpr std::size_t kMaxDrawAttempts = 1000;

} // namespace

void validate(const TestbedSpec &spec) {
    if (spec.locations < 2 || spec.rps < 2) {
        throw ContractViolation("a testbed needs at least 2 locations and 2 RPs");
    }
    if (!(spec.width_m > 0.0) || !(spec.height_m > 0.0)) {
        throw ContractViolation("testbed extent must be positive");
    }
    if (!(spec.shadowing_sigma_db >= 0.0)) {
        throw ContractViolation("shadowing sigma must be nonnegative");
    }
    if (!(spec.reference_distance_m > 0.0)) {
        throw ContractViolation("reference distance must be positive");
    }
    if (!spec.rp_positions.empty() && spec.rp_positions.size() != spec.rps) {
        throw ContractViolation("explicit RP positions must match the RP count");
    }
}

std::pair<std::size_t, std::size_t> grid_shape(std::size_t locations) {
    std::size_t rows = 1;
    for (std::size_t r = 1; r * r <= locations; ++r) {
        if (locations % r == 0) {
            rows = r;
        }
    }
    return {rows, locations / rows};
}

std::vector<Point> grid_points(const TestbedSpec &spec) {
    const auto [rows, cols] = grid_shape(spec.locations);
    const double dx = spec.width_m / static_cast<double>(cols);
    const double dy = spec.height_m / static_cast<double>(rows);
    std::vector<Point> out;
    out.reserve(spec.locations);
    for (std::size_t r = 0; r < rows; ++r) {
        for (std::size_t c = 0; c < cols; ++c) {
            out.push_back({(static_cast<double>(c) + 0.5) * dx,
                           (static_cast<double>(r) + 0.5) * dy});
        }
    }
    return out;
}

double grid_diagonal_spacing(const TestbedSpec &spec) {
    const auto [rows, cols] = grid_shape(spec.locations);
    return std::hypot(spec.width_m / static_cast<double>(cols),
                      spec.height_m / static_cast<double>(rows));
}

std::vector<Point> ring_rps(const TestbedSpec &spec) {
    const double cx = 0.5 * spec.width_m;
    const double cy = 0.5 * spec.height_m;
    const double r = std::min(spec.width_m, spec.height_m) / 3.0;
    std::vector<Point> out;
    out.reserve(spec.rps);
    for (std::size_t k = 0; k < spec.rps; ++k) {
        const double a = 2.0 * std::numbers::pi * static_cast<double>(k) /
                         static_cast<double>(spec.rps);
        out.push_back({cx + r * std::cos(a), cy + r * std::sin(a)});
    }
    return out;
}

double mean_rss_dbm(const TestbedSpec &spec, double distance_m) {
    const double d = std::max(distance_m, spec.reference_distance_m);
    return spec.reference_power_dbm -
           10.0 * spec.path_loss_exponent * std::log10(d / spec.reference_distance_m);
}

SyntheticTestbed generate_synthetic_testbed(const TestbedSpec &spec) {
    validate(spec);
    SyntheticTestbed out;
    out.rp_positions = spec.rp_positions.empty() ? ring_rps(spec) : spec.rp_positions;

    auto reading = [&](const Point &p, const Point &rp, double shadow) {
        const double d = std::hypot(p.x_m - rp.x_m, p.y_m - rp.y_m);
        return std::max(mean_rss_dbm(spec, d) + shadow, spec.floor_dbm);
    };

    const auto grid = grid_points(spec);
    out.fingerprint.reserve(grid.size());
    for (std::size_t i = 0; i < grid.size(); ++i) {
        RawFingerprintRow row{static_cast<LocationId>(i), grid[i].x_m, grid[i].y_m, {}, 0};
        for (const auto &rp : out.rp_positions) {
            row.rss_dbm.push_back(reading(grid[i], rp, 0.0));
        }
        out.fingerprint.push_back(std::move(row));
    }

    auto rng = make_rng(spec.seed);
    std::uniform_real_distribution<double> ux(0.0, spec.width_m);
    std::uniform_real_distribution<double> uy(0.0, spec.height_m);
    std::normal_distribution<double> shadow(0.0, spec.shadowing_sigma_db);
    out.tests.reserve(spec.test_count);
    for (std::size_t t = 0; t < spec.test_count; ++t) {
        RawTestSample sample{};
        bool heard = false;
        for (std::size_t attempt = 0; !heard; ++attempt) {
            if (attempt == kMaxDrawAttempts) {
                throw ContractViolation("no test position hears any RP above the floor");
            }
            const Point p{ux(rng), uy(rng)};
            sample = {p.x_m, p.y_m, {}, 0};
            for (const auto &rp : out.rp_positions) {
                const double s = spec.shadowing_sigma_db > 0.0 ? shadow(rng) : 0.0;
                sample.rss_dbm.push_back(reading(p, rp, s));
                heard = heard || sample.rss_dbm.back() > spec.floor_dbm;
            }
        }
        out.tests.push_back(std::move(sample));
    }
    return out;
}

Dataset prepare_dataset(const SyntheticTestbed &testbed, const PreprocessConfig &config) {
    Dataset d;
    d.fingerprint = prepare_fingerprint(testbed.fingerprint, config);
    d.tests = prepare_tests(testbed.tests, config, d.fingerprint.rp_count());
    return d;
}

} // namespace qfp::harness
