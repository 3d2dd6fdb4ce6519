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
 * Statevector kernels. Each kernel has a plain serial implementation, kept
 * as the reference the tests compare against, and an OpenMP implementation
 * used by the simulator.
 *
 * Bit convention: qubit k is bit k of the basis-state index (qubit 0 is the
 * least-significant bit).
 */

#pragma once

#include <cstddef>
#include <cstdint>
#include <span>

#include "qfp/gate.hpp"

namespace qfp::kernels {

/// Basis states whose bits under `mask` equal `value` are acted on.
struct ControlMask {
    std::uint64_t mask = 0;
    std::uint64_t value = 0;
};

[[nodiscard]] ControlMask make_control_mask(std::span<const Control> controls);

/// State sizes below this run serially even in the parallel kernels.
inline constexpr std::size_t kParallelThreshold = std::size_t{1} << 14;

namespace serial {

void apply_single_qubit(std::span<Amplitude> amps, Qubit target,
                        ControlMask controls, const Matrix2 &m);

/// out[k] = probability that qubits[j] reads bit j of k, for all j.
/// `out` must have 2^|qubits| entries.
void marginal_probabilities(std::span<const Amplitude> amps,
                            std::span<const Qubit> qubits,
                            std::span<double> out);

[[nodiscard]] double norm_squared(std::span<const Amplitude> amps);

} // namespace serial

namespace parallel {

void apply_single_qubit(std::span<Amplitude> amps, Qubit target,
                        ControlMask controls, const Matrix2 &m);

/// Same contract as serial::marginal_probabilities. Partial sums are
/// combined in a fixed order, so results do not depend on the thread count.
void marginal_probabilities(std::span<const Amplitude> amps,
                            std::span<const Qubit> qubits,
                            std::span<double> out);

[[nodiscard]] double norm_squared(std::span<const Amplitude> amps);

} // namespace parallel

} // namespace qfp::kernels
