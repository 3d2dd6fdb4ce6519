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

#include "qfp/fingerprint.hpp"

#include <algorithm>
#include <string>
#include <utility>

#include "qfp/errors.hpp"

namespace qfp {

Fingerprint::Fingerprint(std::vector<FingerprintRow> rows)
    : rows_(std::move(rows)) {
    if (rows_.empty()) {
        return;
    }
    rp_count_ = rows_.front().phi.size();
    if (rp_count_ == 0) {
        throw ContractViolation("fingerprint rows must have at least one RP");
    }
    for (std::size_t i = 0; i < rows_.size(); ++i) {
        const auto &r = rows_[i];
        if (r.phi.size() != rp_count_) {
            throw ContractViolation("fingerprint row " + std::to_string(i) +
                                    " has " + std::to_string(r.phi.size()) +
                                    " RPs, expected " +
                                    std::to_string(rp_count_));
        }
        if (!is_normalized(r.phi.values)) {
            throw ContractViolation("fingerprint row " + std::to_string(i) +
                                    " is not normalized");
        }
        locations_.push_back(r.location);
    }
    std::sort(locations_.begin(), locations_.end());
    locations_.erase(std::unique(locations_.begin(), locations_.end()),
                     locations_.end());
    row_labels_.reserve(rows_.size());
    for (const auto &r : rows_) {
        const auto it =
            std::lower_bound(locations_.begin(), locations_.end(), r.location);
        row_labels_.push_back(
            static_cast<std::size_t>(it - locations_.begin()));
    }
}

std::pair<double, double> Fingerprint::coordinates(LocationId location) const {
    for (const auto &r : rows_) {
        if (r.location == location) {
            return {r.x_m, r.y_m};
        }
    }
    throw ContractViolation("unknown location id " + std::to_string(location));
}

} // namespace qfp
