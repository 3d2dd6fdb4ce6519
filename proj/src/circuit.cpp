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

#include "qfp/circuit.hpp"

#include <utility>

#include "qfp/errors.hpp"

namespace qfp {

namespace {

std::vector<Qubit> register_range(Qubit first, std::size_t width) {
    std::vector<Qubit> out(width);
    for (std::size_t j = 0; j < width; ++j) {
        out[j] = first + j;
    }
    return out;
}

} // namespace

std::vector<Qubit> RegisterLayout::index_qubits() const {
    return register_range(index_qubit(0), index_bits);
}

std::vector<Qubit> RegisterLayout::data_qubits() const {
    return register_range(data_qubit(0), data_bits);
}

std::vector<Qubit> RegisterLayout::location_qubits() const {
    return register_range(location_qubit(0), location_bits);
}

void Circuit::add(GateOp gate) {
    validate_gate(gate, num_qubits);
    gates.push_back(std::move(gate));
}

std::vector<GateOp> Circuit::step_gates(char label) const {
    for (const auto &s : steps) {
        if (s.label == label) {
            return {gates.begin() + static_cast<std::ptrdiff_t>(s.begin),
                    gates.begin() + static_cast<std::ptrdiff_t>(s.end)};
        }
    }
    throw ContractViolation(std::string("circuit has no step ") + label);
}

void validate_circuit(const Circuit &circuit) {
    if (circuit.layout && circuit.layout->total() != circuit.num_qubits) {
        throw ContractViolation("register layout width does not match circuit");
    }
    for (const auto &g : circuit.gates) {
        validate_gate(g, circuit.num_qubits);
    }
    std::size_t cursor = 0;
    for (const auto &s : circuit.steps) {
        if (s.begin != cursor || s.end < s.begin || s.end > circuit.gates.size()) {
            throw ContractViolation("step annotations do not partition the gates");
        }
        cursor = s.end;
    }
    if (!circuit.steps.empty() && cursor != circuit.gates.size()) {
        throw ContractViolation("step annotations do not cover every gate");
    }
}

} // namespace qfp
