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

#include "qfp/statevector.hpp"

#include <bit>
#include <random>
#include <utility>

#include "qfp/errors.hpp"
#include "qfp/kernels.hpp"
#include "qfp/seeding.hpp"

namespace qfp {

namespace {

void check_subset(std::span<const Qubit> qubits, std::size_t num_qubits) {
    if (qubits.empty()) {
        throw ContractViolation("qubit subset must not be empty");
    }
    if (qubits.size() >= 63) {
        throw ContractViolation("qubit subset too wide");
    }
    for (std::size_t a = 0; a < qubits.size(); ++a) {
        if (qubits[a] >= num_qubits) {
            throw ContractViolation("qubit " + std::to_string(qubits[a]) +
                                    " out of range for " +
                                    std::to_string(num_qubits) + " qubits");
        }
        for (std::size_t b = a + 1; b < qubits.size(); ++b) {
            if (qubits[a] == qubits[b]) {
                throw ContractViolation("duplicate qubit " +
                                        std::to_string(qubits[a]) +
                                        " in subset");
            }
        }
    }
}

} // namespace

StateVector::StateVector(std::size_t num_qubits) : num_qubits_(num_qubits) {
    if (num_qubits == 0) {
        throw ContractViolation("a state needs at least one qubit");
    }
    if (num_qubits > kMaxQubits) {
        throw ResourceError(num_qubits, kMaxQubits);
    }
    amplitudes_.assign(std::size_t{1} << num_qubits, Amplitude{0.0});
    amplitudes_[0] = 1.0;
}

StateVector StateVector::from_amplitudes(std::vector<Amplitude> amplitudes) {
    const std::size_t n = amplitudes.size();
    if (n < 2 || !std::has_single_bit(n)) {
        throw ContractViolation("amplitude count must be a power of two >= 2");
    }
    const auto q = static_cast<std::size_t>(std::countr_zero(n));
    if (q > kMaxQubits) {
        throw ResourceError(q, kMaxQubits);
    }
    StateVector s;
    s.num_qubits_ = q;
    s.amplitudes_ = std::move(amplitudes);
    return s;
}

double StateVector::norm_squared() const {
    return kernels::parallel::norm_squared(amplitudes_);
}

void StateVector::apply(const GateOp &gate) {
    validate_gate(gate, num_qubits_);
    kernels::parallel::apply_single_qubit(
        amplitudes_, gate.target, kernels::make_control_mask(gate.controls),
        gate_matrix(gate));
}

void StateVector::apply(const Circuit &circuit) {
    if (circuit.num_qubits != num_qubits_) {
        throw ContractViolation(
            "circuit width " + std::to_string(circuit.num_qubits) +
            " does not match state width " + std::to_string(num_qubits_));
    }
    for (const auto &gate : circuit.gates) {
        apply(gate);
    }
}

std::string ShotCounts::key(std::uint64_t outcome) const {
    std::string s(width, '0');
    for (std::size_t j = 0; j < width; ++j) {
        if ((outcome >> j) & 1U) {
            s[width - 1 - j] = '1';
        }
    }
    return s;
}

std::uint64_t ShotCounts::count(std::uint64_t outcome) const {
    const auto it = counts.find(outcome);
    return it == counts.end() ? 0 : it->second;
}

StateVector init_state(std::size_t num_qubits) {
    return StateVector(num_qubits);
}

StateVector apply_gate(StateVector state, const GateOp &gate) {
    state.apply(gate);
    return state;
}

StateVector apply_circuit(StateVector state, const Circuit &circuit) {
    state.apply(circuit);
    return state;
}

ProbabilityTable marginal_probabilities(const StateVector &state,
                                        std::span<const Qubit> qubits) {
    check_subset(qubits, state.num_qubits());
    ProbabilityTable out(std::size_t{1} << qubits.size(), 0.0);
    kernels::parallel::marginal_probabilities(state.amplitudes(), qubits, out);
    return out;
}

ProbabilityTable conditional_distribution(const StateVector &state,
                                          Condition condition,
                                          std::span<const Qubit> targets) {
    check_subset(targets, state.num_qubits());
    for (Qubit t : targets) {
        if (t == condition.qubit) {
            throw ContractViolation("condition qubit is also a target");
        }
    }
    // Joint table over (targets..., condition qubit); the condition is the
    // top bit.
    std::vector<Qubit> joint(targets.begin(), targets.end());
    joint.push_back(condition.qubit);
    const ProbabilityTable table = marginal_probabilities(state, joint);

    const std::size_t width = std::size_t{1} << targets.size();
    const std::size_t offset = condition.value ? width : 0;
    double p_condition = 0.0;
    for (std::size_t k = 0; k < width; ++k) {
        p_condition += table[offset + k];
    }
    if (!(p_condition > 0.0)) {
        throw DegenerateCondition("P(qubit " + std::to_string(condition.qubit) +
                                  " = " + (condition.value ? "1" : "0") +
                                  ") is zero");
    }
    ProbabilityTable out(width);
    for (std::size_t k = 0; k < width; ++k) {
        out[k] = table[offset + k] / p_condition;
    }
    return out;
}

ShotCounts sample_table(std::span<const double> table, std::size_t width,
                        std::uint64_t shots, std::uint64_t seed) {
    if (shots == 0) {
        throw ContractViolation("shot count must be at least 1");
    }
    if (table.size() != (std::size_t{1} << width)) {
        throw ContractViolation("outcome table size does not match its width");
    }
    auto rng = make_rng(seed);
    std::discrete_distribution<std::uint64_t> dist(table.begin(), table.end());
    ShotCounts result;
    result.width = width;
    result.total = shots;
    for (std::uint64_t s = 0; s < shots; ++s) {
        ++result.counts[dist(rng)];
    }
    return result;
}

ShotCounts sample_shots(const StateVector &state,
                        std::span<const Qubit> qubits, std::uint64_t shots,
                        std::uint64_t seed) {
    const ProbabilityTable table = marginal_probabilities(state, qubits);
    return sample_table(table, qubits.size(), shots, seed);
}

} // namespace qfp
