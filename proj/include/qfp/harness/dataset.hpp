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
 * Fingerprint and test-set CSV files.
 *
 * Fingerprint: header `loc_id,x_m,y_m,rss_0,...,rss_{M-1}`, one row per
 * scan. Tests: header `x_m,y_m,rss_0,...,rss_{M-1}`. RSS values are dBm;
 * an empty field marks an RP that was not heard.
 */

#pragma once

#include <filesystem>
#include <iosfwd>
#include <vector>

#include "qfp/encoding.hpp"
#include "qfp/fingerprint.hpp"

namespace qfp::harness {

struct RawFingerprintRow {
    LocationId location;
    double x_m;
    double y_m;
    /// dBm; NaN = not heard.
    std::vector<double> rss_dbm;
    /// 1-based source line, 0 when not read from a file.
    std::size_t line = 0;
};

struct RawTestSample {
    double x_m;
    double y_m;
    std::vector<double> rss_dbm;
    std::size_t line = 0;
};

/// A test reading ready for matching.
struct TestSample {
    double x_m;
    double y_m;
    /// Normalized.
    RssVector rss;
};

struct Dataset {
    Fingerprint fingerprint;
    std::vector<TestSample> tests;
};

[[nodiscard]] std::vector<RawFingerprintRow> read_fingerprint_csv(std::istream &in);
[[nodiscard]] std::vector<RawTestSample> read_tests_csv(std::istream &in);

void write_fingerprint_csv(std::ostream &out, const std::vector<RawFingerprintRow> &rows);
void write_tests_csv(std::ostream &out, const std::vector<RawTestSample> &rows);

/// Preprocesses and normalizes every row. Rows with no usable reading are
/// rejected together in one SchemaError that lists their data-row numbers.
[[nodiscard]] Fingerprint prepare_fingerprint(const std::vector<RawFingerprintRow> &rows,
                                              const PreprocessConfig &config);

/// As prepare_fingerprint; also throws SchemaError if the RP count differs
/// from `expected_rps` (0 = accept any).
[[nodiscard]] std::vector<TestSample> prepare_tests(const std::vector<RawTestSample> &rows,
                                                    const PreprocessConfig &config,
                                                    std::size_t expected_rps = 0);

[[nodiscard]] Fingerprint load_fingerprint(const std::filesystem::path &path,
                                           const PreprocessConfig &config = {});

[[nodiscard]] std::vector<TestSample> load_tests(const std::filesystem::path &path,
                                                 const PreprocessConfig &config = {},
                                                 std::size_t expected_rps = 0);

} // namespace qfp::harness
