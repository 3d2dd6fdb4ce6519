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
 * Localization-error evaluation and the shots sweep.
 *
 * Samples are processed in parallel; each one derives its RNG seed from
 * (config seed, sample index), and results are stored by sample index, so
 * reports do not depend on the thread count.
 */

#pragma once

#include <cstddef>
#include <cstdint>
#include <exception>
#include <span>
#include <vector>

#include "qfp/errors.hpp"
#include "qfp/harness/dataset.hpp"
#include "qfp/localization.hpp"

namespace qfp::harness {

/// A localization error raised while processing one test sample.
class SampleFailure : public Error {
  public:
    SampleFailure(std::size_t index, const std::exception &cause, std::exception_ptr ptr)
        : Error("test sample " + std::to_string(index) + ": " + cause.what()),
          index_(index), cause_(std::move(ptr)) {}

    [[nodiscard]] std::size_t sample_index() const { return index_; }
    /// The original exception.
    [[nodiscard]] std::exception_ptr cause() const { return cause_; }

  private:
    std::size_t index_;
    std::exception_ptr cause_;
};

struct SampleRecord {
    std::size_t index;
    double true_x_m;
    double true_y_m;
    LocationId classical_estimate;
    double classical_error_m;
    LocationId quantum_estimate;
    double quantum_error_m;
    /// The exact similarity distribution has a near-tie at the top.
    bool tie;
};

struct CdfPoint {
    double error_m;
    double fraction;
};

struct ErrorSummary {
    double median_m = 0.0;
    double mean_m = 0.0;
};

struct EvalReport {
    Mode mode = Mode::Similarity;
    std::uint64_t shots = 0;
    std::vector<SampleRecord> records;
    std::vector<CdfPoint> classical_cdf;
    std::vector<CdfPoint> quantum_cdf;
    ErrorSummary classical;
    ErrorSummary quantum;
    /// Fraction of samples where the quantum and classical estimates match.
    double agreement_rate = 0.0;
    /// Agreement over samples without a tie.
    double untied_agreement_rate = 0.0;
    std::size_t ties = 0;
};

/// Empirical CDF: one point per distinct error, fraction of samples <= it.
[[nodiscard]] std::vector<CdfPoint> error_cdf(std::span<const double> errors_m);

/// Median (mean of the middle pair for even sizes). Throws on empty input.
[[nodiscard]] double median(std::vector<double> values);

[[nodiscard]] ErrorSummary summarize(std::span<const double> errors_m);

/// Runs the classical matcher and the quantum matcher (per `config`) on
/// every sample. Errors are meters between the estimate's coordinates and
/// the sample's true position.
[[nodiscard]] EvalReport evaluate(const Fingerprint &fp, std::span<const TestSample> tests,
                                  const LocalizationConfig &config = {});

struct SweepRow {
    /// 0 = exact probabilities.
    std::uint64_t shots;
    /// Median over seeds of the per-seed median error (samples with an
    /// estimate only).
    double median_error_m;
    /// Mean over seeds of the fraction of samples whose estimate equals the
    /// exact estimate. A sample with no post-selected shot counts as a miss.
    double agreement_rate;
    /// Mean over seeds of the fraction of samples with no post-selected shot.
    double no_estimate_rate;
    /// Mean fraction of shots kept by post-selection.
    double postselection_rate;
};

struct SweepConfig {
    Mode mode = Mode::Similarity;
    std::size_t seeds = 5;
    std::uint64_t base_seed = 0;
    double tie_tolerance = kDefaultTieTolerance;
    /// Append a K = 0 row computed from exact probabilities.
    bool append_exact = true;
};

/// `shots` must be ascending and nonzero.
[[nodiscard]] std::vector<SweepRow> shots_sweep(const Fingerprint &fp,
                                                std::span<const TestSample> tests,
                                                std::span<const std::uint64_t> shots,
                                                const SweepConfig &config = {});

} // namespace qfp::harness
