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

#include "qfp/harness/evaluation.hpp"

#include <algorithm>
#include <cmath>
#include <memory>
#include <numeric>
#include <optional>

#include "qfp/seeding.hpp"

namespace qfp::harness {

namespace {

double error_to(const Fingerprint &fp, LocationId estimate, const TestSample &t) {
    const auto [x, y] = fp.coordinates(estimate);
    return std::hypot(x - t.x_m, y - t.y_m);
}

// Runs body(i) for every sample in parallel and rethrows the failure with
// the lowest index, wrapped in SampleFailure.
template <class Body> void for_each_sample(std::size_t count, Body &&body) {
    std::vector<std::exception_ptr> failures(count);
    const auto n = static_cast<std::int64_t>(count);
#pragma omp parallel for schedule(dynamic)
    for (std::int64_t i = 0; i < n; ++i) {
        try {
            body(static_cast<std::size_t>(i));
        } catch (...) {
            failures[static_cast<std::size_t>(i)] = std::current_exception();
        }
    }
    for (std::size_t i = 0; i < count; ++i) {
        if (failures[i]) {
            try {
                std::rethrow_exception(failures[i]);
            } catch (const std::exception &e) {
                throw SampleFailure(i, e, failures[i]);
            }
        }
    }
}

} // namespace

std::vector<CdfPoint> error_cdf(std::span<const double> errors_m) {
    std::vector<double> sorted(errors_m.begin(), errors_m.end());
    std::sort(sorted.begin(), sorted.end());
    std::vector<CdfPoint> out;
    const auto n = static_cast<double>(sorted.size());
    for (std::size_t i = 0; i < sorted.size(); ++i) {
        if (i + 1 < sorted.size() && sorted[i + 1] == sorted[i]) {
            continue;
        }
        out.push_back({sorted[i], static_cast<double>(i + 1) / n});
    }
    return out;
}

double median(std::vector<double> values) {
    if (values.empty()) {
        throw ContractViolation("median of an empty set");
    }
    std::sort(values.begin(), values.end());
    const std::size_t mid = values.size() / 2;
    if (values.size() % 2 == 1) {
        return values[mid];
    }
    return 0.5 * (values[mid - 1] + values[mid]);
}

ErrorSummary summarize(std::span<const double> errors_m) {
    ErrorSummary s;
    if (errors_m.empty()) {
        return s;
    }
    s.median_m = median({errors_m.begin(), errors_m.end()});
    s.mean_m = std::accumulate(errors_m.begin(), errors_m.end(), 0.0) /
               static_cast<double>(errors_m.size());
    return s;
}

EvalReport evaluate(const Fingerprint &fp, std::span<const TestSample> tests,
                    const LocalizationConfig &config) {
    if (tests.empty()) {
        throw ContractViolation("evaluation needs at least one test sample");
    }
    EvalReport report;
    report.mode = config.mode;
    report.shots = config.shots;
    report.records.resize(tests.size());

    for_each_sample(tests.size(), [&](std::size_t i) {
        const TestSample &t = tests[i];
        const ClassicalResult classical = classical_localize_euclidean(fp, t.rss);
        const PreparedLocalization prepared(fp, t.rss);
        const LocationDistribution exact_sim =
            prepared.exact(Mode::Similarity, config.tie_tolerance);
        const LocationDistribution quantum =
            config.shots == 0
                ? prepared.exact(config.mode, config.tie_tolerance)
                : prepared.sampled(config.mode, config.shots, derive_seed(config.seed, i),
                                   config.tie_tolerance);
        report.records[i] = {i,
                             t.x_m,
                             t.y_m,
                             classical.estimate,
                             error_to(fp, classical.estimate, t),
                             quantum.estimate,
                             error_to(fp, quantum.estimate, t),
                             has_tie(exact_sim.probs, Mode::Similarity, config.tie_tolerance)};
    });

    std::vector<double> classical_errors;
    std::vector<double> quantum_errors;
    std::size_t agree = 0;
    std::size_t agree_untied = 0;
    for (const auto &r : report.records) {
        classical_errors.push_back(r.classical_error_m);
        quantum_errors.push_back(r.quantum_error_m);
        const bool same = r.classical_estimate == r.quantum_estimate;
        agree += same ? 1 : 0;
        if (r.tie) {
            ++report.ties;
        } else if (same) {
            ++agree_untied;
        }
    }
    report.classical_cdf = error_cdf(classical_errors);
    report.quantum_cdf = error_cdf(quantum_errors);
    report.classical = summarize(classical_errors);
    report.quantum = summarize(quantum_errors);
    const auto n = static_cast<double>(report.records.size());
    report.agreement_rate = static_cast<double>(agree) / n;
    const std::size_t untied = report.records.size() - report.ties;
    report.untied_agreement_rate =
        untied == 0 ? 1.0 : static_cast<double>(agree_untied) / static_cast<double>(untied);
    return report;
}

std::vector<SweepRow> shots_sweep(const Fingerprint &fp, std::span<const TestSample> tests,
                                  std::span<const std::uint64_t> shots,
                                  const SweepConfig &config) {
    if (tests.empty()) {
        throw ContractViolation("shots sweep needs at least one test sample");
    }
    if (config.seeds == 0) {
        throw ContractViolation("shots sweep needs at least one seed");
    }
    for (std::size_t k = 0; k < shots.size(); ++k) {
        if (shots[k] == 0 || (k > 0 && shots[k] <= shots[k - 1])) {
            throw ContractViolation("shot counts must be positive and strictly ascending");
        }
    }

    const std::size_t n = tests.size();
    std::vector<std::unique_ptr<PreparedLocalization>> prepared(n);
    std::vector<LocationId> exact(n);
    std::vector<double> exact_error(n);
    for_each_sample(n, [&](std::size_t i) {
        prepared[i] = std::make_unique<PreparedLocalization>(fp, tests[i].rss);
        exact[i] = prepared[i]->exact(config.mode, config.tie_tolerance).estimate;
        exact_error[i] = error_to(fp, exact[i], tests[i]);
    });

    std::vector<SweepRow> rows;
    for (const std::uint64_t k : shots) {
        std::vector<double> seed_medians;
        double agreement = 0.0;
        double missing = 0.0;
        double kept = 0.0;
        for (std::size_t s = 0; s < config.seeds; ++s) {
            const std::uint64_t seed = derive_seed(config.base_seed, s);
            std::vector<std::optional<double>> errors(n);
            std::vector<char> agrees(n, 0);
            std::vector<double> postselected(n, 0.0);
            for_each_sample(n, [&](std::size_t i) {
                try {
                    const auto d = prepared[i]->sampled(config.mode, k, derive_seed(seed, i),
                                                        config.tie_tolerance);
                    errors[i] = error_to(fp, d.estimate, tests[i]);
                    agrees[i] = d.estimate == exact[i] ? 1 : 0;
                    postselected[i] = d.ancilla_prob;
                } catch (const InsufficientShots &) {
                    errors[i].reset();
                }
            });
            std::vector<double> have;
            for (std::size_t i = 0; i < n; ++i) {
                if (errors[i]) {
                    have.push_back(*errors[i]);
                } else {
                    missing += 1.0;
                }
                agreement += agrees[i];
                kept += postselected[i];
            }
            if (!have.empty()) {
                seed_medians.push_back(median(have));
            }
        }
        const double total = static_cast<double>(n * config.seeds);
        rows.push_back({k,
                        seed_medians.empty() ? std::nan("") : median(seed_medians),
                        agreement / total, missing / total, kept / total});
    }
    if (config.append_exact) {
        double kept = 0.0;
        for (std::size_t i = 0; i < n; ++i) {
            kept += prepared[i]->exact(config.mode, config.tie_tolerance).ancilla_prob;
        }
        rows.push_back({0, median(exact_error), 1.0, 0.0, kept / static_cast<double>(n)});
    }
    return rows;
}

} // namespace qfp::harness
