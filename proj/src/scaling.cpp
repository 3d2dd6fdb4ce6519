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

#include "qfp/harness/scaling.hpp"

#include <algorithm>
#include <bit>
#include <chrono>
#include <limits>
#include <random>

#include "qfp/circuit_builder.hpp"
#include "qfp/errors.hpp"
#include "qfp/localization.hpp"
#include "qfp/seeding.hpp"

namespace qfp::harness {

namespace {

using Clock = std::chrono::steady_clock;

RssVector random_unit(std::size_t m, std::mt19937_64 &rng) {
    std::uniform_real_distribution<double> u(0.0, 1.0);
    RssVector v{std::vector<double>(m), RssStage::Preprocessed};
    for (double &x : v.values) {
        x = u(rng);
    }
    return normalize(v);
}

Fingerprint random_fingerprint(std::size_t n, std::size_t m, std::mt19937_64 &rng) {
    std::vector<FingerprintRow> rows;
    rows.reserve(n);
    for (std::size_t i = 0; i < n; ++i) {
        rows.push_back({static_cast<LocationId>(i), static_cast<double>(i), 0.0,
                        random_unit(m, rng)});
    }
    return Fingerprint(std::move(rows));
}

double seconds_since(Clock::time_point start) {
    return std::chrono::duration<double>(Clock::now() - start).count();
}

double time_classical(const Fingerprint &fp, const RssVector &test,
                      const ScalingOptions &options) {
    double best = std::numeric_limits<double>::infinity();
    LocationId sink = 0;
    for (std::size_t b = 0; b < options.batches; ++b) {
        std::size_t reps = 0;
        const auto start = Clock::now();
        double elapsed = 0.0;
        do {
            sink += classical_localize_euclidean(fp, test).estimate;
            ++reps;
            elapsed = seconds_since(start);
        } while (elapsed < options.min_batch_seconds);
        best = std::min(best, elapsed / static_cast<double>(reps));
    }
    // Keep the calls observable.
    volatile LocationId keep = sink;
    (void)keep;
    return best;
}

} // namespace

std::size_t localization_gate_count(std::size_t locations, std::size_t rps) {
    const RegisterLayout layout = layout_for(locations, rps);
    const std::size_t n = layout.index_bits;
    const std::size_t big_n = std::size_t{1} << n;
    const std::size_t big_m = std::size_t{1} << layout.data_bits;
    const std::size_t step_a = 1 + n;
    const std::size_t step_b = (big_m - 1) + 1;
    // Per row i: X-sandwich on the zero bits of i (twice), one loading tree,
    // one controlled X per set bit of the label i.
    const std::size_t zero_bits = n * big_n / 2;
    const std::size_t one_bits = n * big_n / 2;
    const std::size_t step_c = 2 * zero_bits + big_n * (big_m - 1) + one_bits;
    return step_a + step_b + step_c + 1;
}

std::vector<ScalingRow> scaling_report(std::span<const std::pair<std::size_t, std::size_t>> sizes,
                                       const ScalingOptions &options) {
    std::vector<ScalingRow> rows;
    auto rng = make_rng(options.seed);
    for (const auto &[n, m] : sizes) {
        if (n < 2 || m < 2 || !std::has_single_bit(n) || !std::has_single_bit(m)) {
            throw ContractViolation("scaling sizes must be powers of two >= 2");
        }
        ScalingRow row{n, m, qubit_count(n, m), localization_gate_count(n, m), 0.0, {}, false};

        const Fingerprint fp = random_fingerprint(n, m, rng);
        const RssVector test = random_unit(m, rng);
        row.classical_seconds = time_classical(fp, test, options);

        try {
            if (row.qubits > options.simulator_qubit_cap) {
                throw ResourceError(row.qubits, options.simulator_qubit_cap);
            }
            const auto start = Clock::now();
            const PreparedLocalization prepared(fp, test);
            row.simulator_seconds = seconds_since(start);
            row.gate_count = prepared.circuit().circuit.gates.size();
        } catch (const ResourceError &) {
            row.skipped = true;
        }
        rows.push_back(row);
    }
    return rows;
}

LinearFit fit_linear(std::span<const double> xs, std::span<const double> ys) {
    if (xs.size() != ys.size() || xs.size() < 2) {
        throw ContractViolation("linear fit needs two or more paired points");
    }
    const auto n = static_cast<double>(xs.size());
    double mx = 0.0;
    double my = 0.0;
    for (std::size_t i = 0; i < xs.size(); ++i) {
        mx += xs[i];
        my += ys[i];
    }
    mx /= n;
    my /= n;
    double sxx = 0.0;
    double sxy = 0.0;
    double syy = 0.0;
    for (std::size_t i = 0; i < xs.size(); ++i) {
        sxx += (xs[i] - mx) * (xs[i] - mx);
        sxy += (xs[i] - mx) * (ys[i] - my);
        syy += (ys[i] - my) * (ys[i] - my);
    }
    if (sxx == 0.0) {
        throw ContractViolation("linear fit needs distinct x values");
    }
    const double slope = sxy / sxx;
    const double intercept = my - slope * mx;
    const double r2 = syy == 0.0 ? 1.0 : (sxy * sxy) / (sxx * syy);
    return {slope, intercept, r2};
}

} // namespace qfp::harness
