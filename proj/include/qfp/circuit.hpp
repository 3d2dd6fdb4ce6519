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
 * Register layout and the ordered gate list that the simulator and the
 * OpenQASM exporter consume.
 */

#pragma once

#include <cstddef>
#include <optional>
#include <string>
#include <vector>

#include "qfp/gate.hpp"

namespace qfp {

/**
 * @brief Qubit assignment of the localization circuit.
 *
 * Registers are contiguous, in this order starting from qubit 0 (the
 * least-significant bit of a basis-state index):
 *
 *     ancilla (1) | index (n) | data (m) | location (n)
 *
 * Within a register, bit j of the stored integer lives on the register's
 * j-th qubit.
 */
struct RegisterLayout {
    std::size_t index_bits = 1;
    std::size_t data_bits = 1;
    std::size_t location_bits = 1;

    [[nodiscard]] std::size_t total() const {
        return 1 + index_bits + data_bits + location_bits;
    }
    [[nodiscard]] Qubit ancilla() const { return 0; }
    [[nodiscard]] Qubit index_qubit(std::size_t j) const { return 1 + j; }
    [[nodiscard]] Qubit data_qubit(std::size_t j) const {
        return 1 + index_bits + j;
    }
    [[nodiscard]] Qubit location_qubit(std::size_t j) const {
        return 1 + index_bits + data_bits + j;
    }
    [[nodiscard]] std::vector<Qubit> index_qubits() const;
    [[nodiscard]] std::vector<Qubit> data_qubits() const;
    [[nodiscard]] std::vector<Qubit> location_qubits() const;

    friend bool operator==(const RegisterLayout &,
                           const RegisterLayout &) = default;
};

/// A labelled half-open range [begin, end) of a circuit's gate list.
struct StepSpan {
    char label;
    std::size_t begin;
    std::size_t end;
};

struct Circuit {
    std::size_t num_qubits = 0;
    /// Present for circuits produced by the localization builder.
    std::optional<RegisterLayout> layout;
    std::vector<GateOp> gates;
    /// Step annotations, in gate order. Empty for generic circuits.
    std::vector<StepSpan> steps;

    /// Appends a gate after checking its indices against num_qubits.
    void add(GateOp gate);

    /// Gates [begin, end) of the step with the given label.
    [[nodiscard]] std::vector<GateOp> step_gates(char label) const;
};

/// Throws ContractViolation if any gate or step annotation is invalid.
void validate_circuit(const Circuit &circuit);

} // namespace qfp
