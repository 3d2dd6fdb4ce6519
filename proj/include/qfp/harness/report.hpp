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
 * Plot-ready report output: CSV for tables, JSON for summaries.
 */

#pragma once

#include <filesystem>
#include <iosfwd>
#include <span>
#include <string>

#include <json.hpp>

#include "qfp/harness/evaluation.hpp"
#include "qfp/harness/scaling.hpp"
#include "qfp/localization.hpp"

namespace qfp::harness {

[[nodiscard]] nlohmann::ordered_json to_json(const LocationDistribution &d);
[[nodiscard]] nlohmann::ordered_json summary_json(const EvalReport &report);
[[nodiscard]] nlohmann::ordered_json sweep_json(std::span<const SweepRow> rows);
[[nodiscard]] nlohmann::ordered_json scaling_json(std::span<const ScalingRow> rows);

void write_records_csv(std::ostream &out, const EvalReport &report);
void write_cdf_csv(std::ostream &out, std::span<const CdfPoint> classical,
                   std::span<const CdfPoint> quantum);
void write_sweep_csv(std::ostream &out, std::span<const SweepRow> rows);
void write_scaling_csv(std::ostream &out, std::span<const ScalingRow> rows);

/// records.csv, cdf.csv and summary.json under `dir` (created if needed).
void write_eval_report(const std::filesystem::path &dir, const EvalReport &report);

/// Writes `text` to `path`, creating parent directories.
void write_text_file(const std::filesystem::path &path, const std::string &text);

} // namespace qfp::harness
