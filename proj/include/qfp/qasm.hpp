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
 * OpenQASM 2.0 export and a reader for the subset the exporter emits.
 *
 * Exported gate set (all from qelib1.inc): h, x, ry, rz, u1, cx.
 *
 * - Uncontrolled H, X, U(t) map to h, x, ry(t).
 * - X with one control maps to cx (negative controls are X-sandwiched).
 * - U(t) with k >= 1 controls is a uniformly controlled y-rotation that is
 *   nonzero on one control pattern. It is emitted as 2^k ry gates
 *   interleaved with 2^k cx gates in Gray-code order; negative controls
 *   only change the signs of the angles.
 * - X with k >= 2 controls is H . C^k-Z . H on the target, with negative
 *   controls X-sandwiched. C^k-P(l) is emitted recursively as a Gray-code
 *   uniformly controlled rz(l) on the target followed by C^(k-1)-P(l/2) on
 *   the last control, ending in u1.
 *
 * Every decomposition is exact, including the global phase. Measurements of
 * the ancilla and location registers are appended for circuits with a
 * register layout; generic circuits measure every qubit. Circuits with no
 * gates get declarations only.
 */

#pragma once

#include <cstddef>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "qfp/circuit.hpp"

namespace qfp {

[[nodiscard]] std::string export_qasm(const Circuit &circuit);

struct QasmMeasurement {
    Qubit qubit;
    std::size_t clbit;
};

struct QasmProgram {
    /// Gates only; num_qubits is the qreg size. No register layout.
    Circuit circuit;
    std::size_t num_clbits = 0;
    std::vector<QasmMeasurement> measurements;
};

/**
 * Parses OpenQASM 2.0 text restricted to one qreg, at most one creg, the
 * gates h, x, z, s, sdg, t, tdg, ry, rz, u1, cx, cz, plus barrier and
 * measure. Parameters may be arithmetic over numbers and pi. Throws
 * ParseError with the offending line number.
 */
[[nodiscard]] QasmProgram parse_qasm(std::string_view text);

} // namespace qfp
