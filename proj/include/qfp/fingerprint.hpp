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
#include <vector>

#include "qfp/encoding.hpp"

namespace qfp {

using LocationId = std::int64_t;

struct FingerprintRow {
    LocationId location;
    double x_m;
    double y_m;
    /// Normalized RSS vector.
    RssVector phi;
};

/**
 * @brief Offline radio map: normalized RSS vectors tagged with locations.
 *
 * Several rows may share a location id; probabilities for that location
 * aggregate over its rows. The coordinates of a location are those of its
 * first row.
 */
class Fingerprint {
  public:
    Fingerprint() = default;

    /// Throws ContractViolation on mixed RP counts or unnormalized vectors.
    explicit Fingerprint(std::vector<FingerprintRow> rows);

    [[nodiscard]] std::size_t rp_count() const { return rp_count_; }
    [[nodiscard]] std::size_t size() const { return rows_.size(); }
    [[nodiscard]] bool empty() const { return rows_.empty(); }
    [[nodiscard]] const std::vector<FingerprintRow> &rows() const {
        return rows_;
    }
    [[nodiscard]] const FingerprintRow &row(std::size_t i) const {
        return rows_[i];
    }

    /// Distinct location ids, ascending.
    [[nodiscard]] const std::vector<LocationId> &locations() const {
        return locations_;
    }

    /// Dense label of a row: position of its location id in locations().
    [[nodiscard]] std::size_t label_of_row(std::size_t i) const {
        return row_labels_[i];
    }

    [[nodiscard]] bool one_row_per_location() const {
        return locations_.size() == rows_.size();
    }

    /// Throws ContractViolation for an unknown id.
    [[nodiscard]] std::pair<double, double>
    coordinates(LocationId location) const;

  private:
    std::size_t rp_count_ = 0;
    std::vector<FingerprintRow> rows_;
    std::vector<LocationId> locations_;
    std::vector<std::size_t> row_labels_;
};

} // namespace qfp
