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

#include "qfp/kernels.hpp"

#include <algorithm>
#include <complex>
#include <span>

namespace qfp::kernels {

ControlMask make_control_mask(std::span<const Control> controls) {
    ControlMask cm;
    for (const auto &c : controls) {
        const std::uint64_t bit = std::uint64_t{1} << c.qubit;
        cm.mask |= bit;
        if (c.value) {
            cm.value |= bit;
        }
    }
    return cm;
}

namespace serial {

void apply_single_qubit(std::span<Amplitude> amps, Qubit target,
                        ControlMask controls, const Matrix2 &m) {
    const std::uint64_t bit = std::uint64_t{1} << target;
    for (std::uint64_t i0 = 0; i0 < amps.size(); ++i0) {
        if ((i0 & bit) != 0 || (i0 & controls.mask) != controls.value) {
            continue;
        }
        const std::uint64_t i1 = i0 | bit;
        const Amplitude a0 = amps[i0];
        const Amplitude a1 = amps[i1];
        amps[i0] = m[0] * a0 + m[1] * a1;
        amps[i1] = m[2] * a0 + m[3] * a1;
    }
}

void marginal_probabilities(std::span<const Amplitude> amps,
                            std::span<const Qubit> qubits,
                            std::span<double> out) {
    std::fill(out.begin(), out.end(), 0.0);
    for (std::uint64_t i = 0; i < amps.size(); ++i) {
        std::uint64_t k = 0;
        for (std::size_t j = 0; j < qubits.size(); ++j) {
            k |= ((i >> qubits[j]) & 1U) << j;
        }
        out[k] += std::norm(amps[i]);
    }
}

double norm_squared(std::span<const Amplitude> amps) {
    double total = 0.0;
    for (const auto &a : amps) {
        total += std::norm(a);
    }
    return total;
}

} // namespace serial
} // namespace qfp::kernels
