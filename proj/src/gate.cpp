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

#include "qfp/gate.hpp"

#include <cmath>
#include <numbers>
#include <utility>

#include "qfp/errors.hpp"

namespace qfp {

GateOp GateOp::h(Qubit target, std::vector<Control> controls) {
    return {GateKind::Hadamard, target, 0.0, std::move(controls)};
}

GateOp GateOp::x(Qubit target, std::vector<Control> controls) {
    return {GateKind::PauliX, target, 0.0, std::move(controls)};
}

GateOp GateOp::u(Qubit target, double theta, std::vector<Control> controls) {
    return {GateKind::RotationU, target, theta, std::move(controls)};
}

GateOp GateOp::rz(Qubit target, double theta, std::vector<Control> controls) {
    return {GateKind::RotationZ, target, theta, std::move(controls)};
}

GateOp GateOp::phase(Qubit target, double lambda,
                     std::vector<Control> controls) {
    return {GateKind::Phase, target, lambda, std::move(controls)};
}

Matrix2 gate_matrix(const GateOp &gate) {
    switch (gate.kind) {
    case GateKind::Hadamard: {
        const double s = 1.0 / std::numbers::sqrt2;
        return {Amplitude{s}, Amplitude{s}, Amplitude{s}, Amplitude{-s}};
    }
    case GateKind::PauliX:
        return {Amplitude{0.0}, Amplitude{1.0}, Amplitude{1.0}, Amplitude{0.0}};
    case GateKind::RotationU: {
        const double c = std::cos(gate.theta / 2.0);
        const double s = std::sin(gate.theta / 2.0);
        return {Amplitude{c}, Amplitude{-s}, Amplitude{s}, Amplitude{c}};
    }
    case GateKind::RotationZ:
        return {std::polar(1.0, -gate.theta / 2.0), Amplitude{0.0},
                Amplitude{0.0}, std::polar(1.0, gate.theta / 2.0)};
    case GateKind::Phase:
        return {Amplitude{1.0}, Amplitude{0.0}, Amplitude{0.0},
                std::polar(1.0, gate.theta)};
    }
    throw ContractViolation("unknown gate kind");
}

void validate_gate(const GateOp &gate, std::size_t num_qubits) {
    if (gate.target >= num_qubits) {
        throw ContractViolation("gate target " + std::to_string(gate.target) +
                                " out of range for " +
                                std::to_string(num_qubits) + " qubits");
    }
    if (!std::isfinite(gate.theta)) {
        throw ContractViolation("gate angle is not finite");
    }
    for (std::size_t a = 0; a < gate.controls.size(); ++a) {
        const Qubit q = gate.controls[a].qubit;
        if (q >= num_qubits) {
            throw ContractViolation("control qubit " + std::to_string(q) +
                                    " out of range for " +
                                    std::to_string(num_qubits) + " qubits");
        }
        if (q == gate.target) {
            throw ContractViolation("qubit " + std::to_string(q) +
                                    " is both target and control");
        }
        for (std::size_t b = a + 1; b < gate.controls.size(); ++b) {
            if (gate.controls[b].qubit == q) {
                throw ContractViolation("duplicate control qubit " +
                                        std::to_string(q));
            }
        }
    }
}

std::string to_string(GateKind kind) {
    switch (kind) {
    case GateKind::Hadamard:
        return "H";
    case GateKind::PauliX:
        return "X";
    case GateKind::RotationU:
        return "U";
    case GateKind::RotationZ:
        return "RZ";
    case GateKind::Phase:
        return "P";
    }
    return "?";
}

} // namespace qfp
