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

#include "qfp/localization.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <string>

#include "qfp/errors.hpp"

namespace qfp {

namespace {

void check_dimensions(const Fingerprint &fp, const RssVector &test) {
    if (fp.empty()) {
        throw ContractViolation("fingerprint is empty");
    }
    if (test.size() != fp.rp_count()) {
        throw ContractViolation("test vector has " + std::to_string(test.size()) +
                                " RPs, fingerprint has " +
                                std::to_string(fp.rp_count()));
    }
    if (!is_normalized(test.values)) {
        throw ContractViolation("test vector is not normalized");
    }
}

// |psi + sign * phi|^2
double combined_norm_sq(const RssVector &psi, const RssVector &phi, double sign) {
    double s = 0.0;
    for (std::size_t j = 0; j < psi.size(); ++j) {
        const double d = psi.values[j] + sign * phi.values[j];
        s += d * d;
    }
    return s;
}

bool conditioning_value(Mode mode) { return mode == Mode::Distance; }

} // namespace

Mode parse_mode(std::string_view name) {
    if (name == "similarity") {
        return Mode::Similarity;
    }
    if (name == "distance") {
        return Mode::Distance;
    }
    throw ContractViolation("unknown mode '" + std::string(name) + "'");
}

std::string_view to_string(Mode mode) {
    return mode == Mode::Similarity ? "similarity" : "distance";
}

LocationId select_estimate(const std::map<LocationId, double> &probs, Mode mode,
                           double tie_tolerance) {
    if (probs.empty()) {
        throw ContractViolation("cannot pick an estimate from an empty distribution");
    }
    double extreme = probs.begin()->second;
    for (const auto &[id, p] : probs) {
        extreme = mode == Mode::Similarity ? std::max(extreme, p)
                                           : std::min(extreme, p);
    }
    // std::map iterates ids in ascending order, so the first hit is the lowest.
    for (const auto &[id, p] : probs) {
        if (std::abs(p - extreme) <= tie_tolerance) {
            return id;
        }
    }
    return probs.begin()->first;
}

bool has_tie(const std::map<LocationId, double> &probs, Mode mode,
             double tie_tolerance) {
    const LocationId chosen = select_estimate(probs, mode, tie_tolerance);
    const double best = probs.at(chosen);
    for (const auto &[id, p] : probs) {
        if (id != chosen && std::abs(p - best) <= tie_tolerance) {
            return true;
        }
    }
    return false;
}

LocationDistribution analytic_distribution(const Fingerprint &fp,
                                           const RssVector &test, Mode mode,
                                           double tie_tolerance) {
    check_dimensions(fp, test);
    const double sign = mode == Mode::Similarity ? 1.0 : -1.0;

    LocationDistribution out;
    out.mode = mode;
    double total = 0.0;
    for (const auto id : fp.locations()) {
        out.probs[id] = 0.0;
    }
    for (const auto &row : fp.rows()) {
        const double w = combined_norm_sq(test, row.phi, sign);
        out.probs[row.location] += w;
        total += w;
    }
    if (!(total > 0.0)) {
        throw DegenerateCondition(
            mode == Mode::Distance
                ? "test vector equals every fingerprint vector; P(a=1) = 0"
                : "test vector is opposite to every fingerprint vector; P(a=0) = 0");
    }
    for (auto &[id, p] : out.probs) {
        p /= total;
    }
    out.ancilla_prob = total / (4.0 * static_cast<double>(fp.size()));
    out.estimate = select_estimate(out.probs, mode, tie_tolerance);
    return out;
}

PreparedLocalization::PreparedLocalization(const Fingerprint &fp,
                                           const RssVector &test)
    : circuit_(build_localization_circuit(test, fp)) {
    check_dimensions(fp, test);
    const RegisterLayout &layout = *circuit_.circuit.layout;
    location_bits_ = layout.location_bits;

    StateVector state(circuit_.circuit.num_qubits);
    state.apply(circuit_.circuit);

    std::vector<Qubit> measured = layout.location_qubits();
    measured.push_back(layout.ancilla());
    joint_ = marginal_probabilities(state, measured);
}

LocationDistribution PreparedLocalization::exact(Mode mode,
                                                 double tie_tolerance) const {
    const std::size_t labels = std::size_t{1} << location_bits_;
    const std::size_t offset = conditioning_value(mode) ? labels : 0;

    double real_mass = 0.0; // P(location is not the padding label)
    double matched = 0.0;   // P(ancilla matches, location not padding)
    LocationDistribution out;
    out.mode = mode;
    for (std::size_t label = 0; label < labels; ++label) {
        if (circuit_.padding_label && label == *circuit_.padding_label) {
            continue;
        }
        real_mass += joint_[label] + joint_[labels + label];
        matched += joint_[offset + label];
    }
    if (!(matched > 0.0)) {
        throw DegenerateCondition(std::string("P(a=") +
                                  (conditioning_value(mode) ? "1" : "0") +
                                  ") is zero");
    }
    for (std::size_t label = 0; label < circuit_.label_to_location.size();
         ++label) {
        out.probs[circuit_.label_to_location[label]] =
            joint_[offset + label] / matched;
    }
    out.ancilla_prob = matched / real_mass;
    out.estimate = select_estimate(out.probs, mode, tie_tolerance);
    return out;
}

LocationDistribution PreparedLocalization::sampled(Mode mode,
                                                   std::uint64_t shots,
                                                   std::uint64_t seed,
                                                   double tie_tolerance) const {
    const ShotCounts counts =
        sample_table(joint_, location_bits_ + 1, shots, seed);
    const std::uint64_t labels = std::uint64_t{1} << location_bits_;
    const bool want = conditioning_value(mode);

    std::uint64_t per_ancilla[2] = {0, 0};
    std::vector<std::uint64_t> kept(circuit_.label_to_location.size(), 0);
    for (const auto &[outcome, n] : counts.counts) {
        const std::uint64_t label = outcome & (labels - 1);
        if (circuit_.padding_label && label == *circuit_.padding_label) {
            continue;
        }
        const bool ancilla = (outcome >> location_bits_) != 0;
        per_ancilla[ancilla ? 1 : 0] += n;
        if (ancilla == want && label < kept.size()) {
            kept[label] += n;
        }
    }
    const std::uint64_t matched = per_ancilla[want ? 1 : 0];
    if (matched == 0) {
        throw InsufficientShots(per_ancilla[0], per_ancilla[1]);
    }

    LocationDistribution out;
    out.mode = mode;
    out.shots = shots;
    out.postselected = matched;
    out.ancilla_prob = static_cast<double>(matched) /
                       static_cast<double>(per_ancilla[0] + per_ancilla[1]);
    for (std::size_t label = 0; label < kept.size(); ++label) {
        out.probs[circuit_.label_to_location[label]] =
            static_cast<double>(kept[label]) / static_cast<double>(matched);
    }
    out.estimate = select_estimate(out.probs, mode, tie_tolerance);
    return out;
}

LocationDistribution quantum_localize(const Fingerprint &fp,
                                      const RssVector &test,
                                      const LocalizationConfig &config) {
    if (config.tie_tolerance < 0.0) {
        throw ContractViolation("tie tolerance must be nonnegative");
    }
    const PreparedLocalization prepared(fp, test);
    if (config.shots == 0) {
        return prepared.exact(config.mode, config.tie_tolerance);
    }
    return prepared.sampled(config.mode, config.shots, config.seed,
                            config.tie_tolerance);
}

ClassicalResult classical_localize_euclidean(const Fingerprint &fp,
                                             const RssVector &test) {
    check_dimensions(fp, test);
    ClassicalResult out{0, {}};
    out.distances.reserve(fp.size());
    double best = std::numeric_limits<double>::infinity();
    for (const auto &row : fp.rows()) {
        const double d = std::sqrt(combined_norm_sq(test, row.phi, -1.0));
        out.distances.push_back(d);
        if (d < best || (d == best && row.location < out.estimate)) {
            best = d;
            out.estimate = row.location;
        }
    }
    return out;
}

DualityReport mode_duality_check(const Fingerprint &fp, const RssVector &test,
                                 double tie_tolerance) {
    const PreparedLocalization prepared(fp, test);
    const LocationDistribution sim = prepared.exact(Mode::Similarity, tie_tolerance);
    const ClassicalResult classical = classical_localize_euclidean(fp, test);

    DualityReport report;
    report.similarity_estimate = sim.estimate;
    report.classical_estimate = classical.estimate;
    report.tie = has_tie(sim.probs, Mode::Similarity, tie_tolerance);

    std::vector<double> sorted = classical.distances;
    std::sort(sorted.begin(), sorted.end());
    if (sorted.size() > 1 && sorted[1] - sorted[0] <= tie_tolerance) {
        report.tie = true;
    }

    try {
        const LocationDistribution dist = prepared.exact(Mode::Distance, tie_tolerance);
        report.distance_estimate = dist.estimate;
        report.tie = report.tie || has_tie(dist.probs, Mode::Distance, tie_tolerance);
    } catch (const DegenerateCondition &) {
        // psi equals every phi: all rows tie at distance zero.
        report.distance_estimate = sim.estimate;
        report.tie = report.tie || fp.locations().size() > 1;
    }

    report.consistent = report.similarity_estimate == report.distance_estimate &&
                        report.distance_estimate == report.classical_estimate;
    return report;
}

} // namespace qfp
