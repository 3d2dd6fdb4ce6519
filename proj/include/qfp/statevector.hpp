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
 * Exact statevector simulation: gate application, marginal and conditional
 * probabilities, and seeded shot sampling.
 */

#pragma once

#include <cstddef>
#include <cstdint>
#include <map>
#include <span>
#include <string>
#include <vector>

#include "qfp/circuit.hpp"
#include "qfp/gate.hpp"

namespace qfp {

/// Largest register the simulator will allocate (2^26 amplitudes = 1 GiB).
inline constexpr std::size_t kMaxQubits = 26;

/**
 * @brief Complex amplitudes over `num_qubits` qubits.
 *
 * Always holds exactly 2^num_qubits amplitudes. The free functions below
 * take and return StateVector by value; `apply` is the in-place form used
 * when a caller owns the state.
 */
class StateVector {
  public:
    /// |0...0> on num_qubits qubits.
    explicit StateVector(std::size_t num_qubits);

    /// Wraps an existing amplitude array; its size must be a power of two.
    /// The amplitudes are not renormalized.
    static StateVector from_amplitudes(std::vector<Amplitude> amplitudes);

    [[nodiscard]] std::size_t num_qubits() const { return num_qubits_; }
    [[nodiscard]] std::size_t size() const { return amplitudes_.size(); }
    [[nodiscard]] std::span<const Amplitude> amplitudes() const {
        return amplitudes_;
    }
    [[nodiscard]] Amplitude operator[](std::size_t basis) const {
        return amplitudes_[basis];
    }
    [[nodiscard]] double norm_squared() const;

    void apply(const GateOp &gate);
    void apply(const Circuit &circuit);

  private:
    StateVector() = default;

    std::size_t num_qubits_ = 0;
    std::vector<Amplitude> amplitudes_;
};

/// outcome k -> probability; bit j of k is the value of qubits[j].
using ProbabilityTable = std::vector<double>;

struct Condition {
    Qubit qubit;
    bool value;
};

/// Measurement counts over an ordered qubit subset.
struct ShotCounts {
    std::size_t width = 0;
    std::uint64_t total = 0;
    /// Outcome integer (bit j = qubits[j]) -> count. Zero counts omitted.
    std::map<std::uint64_t, std::uint64_t> counts;

    /// Bitstring of an outcome, most significant (last) qubit first.
    [[nodiscard]] std::string key(std::uint64_t outcome) const;
    [[nodiscard]] std::uint64_t count(std::uint64_t outcome) const;
};

/// Throws ResourceError above kMaxQubits, ContractViolation for zero qubits.
[[nodiscard]] StateVector init_state(std::size_t num_qubits);

[[nodiscard]] StateVector apply_gate(StateVector state, const GateOp &gate);

[[nodiscard]] StateVector apply_circuit(StateVector state,
                                        const Circuit &circuit);

[[nodiscard]] ProbabilityTable
marginal_probabilities(const StateVector &state,
                       std::span<const Qubit> qubits);

/// Distribution of `targets` given that `condition` was observed. Throws
/// DegenerateCondition if the condition has probability zero.
[[nodiscard]] ProbabilityTable
conditional_distribution(const StateVector &state, Condition condition,
                         std::span<const Qubit> targets);

/// K independent measurements of `qubits`, deterministic in `seed`.
[[nodiscard]] ShotCounts sample_shots(const StateVector &state,
                                      std::span<const Qubit> qubits,
                                      std::uint64_t shots, std::uint64_t seed);

/// K draws from an explicit outcome table (entries need not sum to 1).
[[nodiscard]] ShotCounts sample_table(std::span<const double> table,
                                      std::size_t width, std::uint64_t shots,
                                      std::uint64_t seed);

} // namespace qfp
