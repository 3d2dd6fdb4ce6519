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
 * Single-target gates with an arbitrary list of positive or negative
 * controls.
 */

#pragma once

#include <array>
#include <complex>
#include <cstddef>
#include <string>
#include <vector>

namespace qfp {

using Qubit = std::size_t;
using Amplitude = std::complex<double>;

/// Row-major 2x2 complex matrix: {m00, m01, m10, m11}.
using Matrix2 = std::array<Amplitude, 4>;

/**
 * @brief Gate kinds understood by the simulator.
 *
 * RotationU is the real rotation [[cos t/2, -sin t/2], [sin t/2, cos t/2]],
 * i.e. the standard y-rotation. RotationZ and Phase only appear in circuits
 * imported back from OpenQASM, where multi-controlled gates have been
 * decomposed.
 */
enum class GateKind { Hadamard, PauliX, RotationU, RotationZ, Phase };

/// A control qubit and the value it must hold for the gate to act.
struct Control {
    Qubit qubit;
    bool value = true;

    friend bool operator==(const Control &, const Control &) = default;
};

struct GateOp {
    GateKind kind;
    Qubit target;
    double theta = 0.0;
    std::vector<Control> controls;

    static GateOp h(Qubit target, std::vector<Control> controls = {});
    static GateOp x(Qubit target, std::vector<Control> controls = {});
    static GateOp u(Qubit target, double theta,
                    std::vector<Control> controls = {});
    static GateOp rz(Qubit target, double theta,
                     std::vector<Control> controls = {});
    static GateOp phase(Qubit target, double lambda,
                        std::vector<Control> controls = {});

    friend bool operator==(const GateOp &, const GateOp &) = default;
};

/// The 2x2 unitary the gate applies to its target when all controls match.
[[nodiscard]] Matrix2 gate_matrix(const GateOp &gate);

/// Throws ContractViolation unless every index is < num_qubits, the target
/// is not a control, and control qubits are distinct.
void validate_gate(const GateOp &gate, std::size_t num_qubits);

[[nodiscard]] std::string to_string(GateKind kind);

} // namespace qfp
