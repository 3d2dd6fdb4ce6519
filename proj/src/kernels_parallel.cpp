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
#include <array>
#include <complex>
#include <cstdint>
#include <span>
#include <vector>

#include <omp.h>

namespace qfp::kernels::parallel {

namespace {

// Partial sums are accumulated per fixed block and reduced in block order.
constexpr std::int64_t kReductionBlocks = 64;
constexpr std::size_t kMaxBlockedTable = std::size_t{1} << 12;

// Insert a zero bit at position `bit_pos` of `k`.
inline std::uint64_t insert_zero(std::uint64_t k, Qubit bit_pos) {
    const std::uint64_t low = k & ((std::uint64_t{1} << bit_pos) - 1);
    return ((k >> bit_pos) << (bit_pos + 1)) | low;
}

} // namespace

void apply_single_qubit(std::span<Amplitude> amps, Qubit target,
                        ControlMask controls, const Matrix2 &m) {
    const std::uint64_t bit = std::uint64_t{1} << target;

    // Enumerate only the basis states that satisfy the controls: spread the
    // loop counter over the free bits, then set the fixed control bits.
    std::array<Qubit, 64> fixed{};
    std::size_t n_fixed = 0;
    const std::uint64_t fixed_mask = controls.mask | bit;
    for (Qubit q = 0; q < 64; ++q) {
        if ((fixed_mask >> q) & 1U) {
            fixed[n_fixed++] = q;
        }
    }
    const std::uint64_t dim = amps.size();
    const auto count = static_cast<std::int64_t>(dim >> n_fixed);
    Amplitude *data = amps.data();
    const Amplitude m00 = m[0];
    const Amplitude m01 = m[1];
    const Amplitude m10 = m[2];
    const Amplitude m11 = m[3];
    const std::uint64_t value = controls.value;

#pragma omp parallel for schedule(static) if (static_cast<std::size_t>(count) * 2 >= kParallelThreshold)
    for (std::int64_t k = 0; k < count; ++k) {
        std::uint64_t i0 = static_cast<std::uint64_t>(k);
        for (std::size_t f = 0; f < n_fixed; ++f) {
            i0 = insert_zero(i0, fixed[f]);
        }
        i0 |= value;
        const std::uint64_t i1 = i0 | bit;
        const Amplitude a0 = data[i0];
        const Amplitude a1 = data[i1];
        data[i0] = m00 * a0 + m01 * a1;
        data[i1] = m10 * a0 + m11 * a1;
    }
}

void marginal_probabilities(std::span<const Amplitude> amps,
                            std::span<const Qubit> qubits,
                            std::span<double> out) {
    if (amps.size() < kParallelThreshold || out.size() > kMaxBlockedTable) {
        serial::marginal_probabilities(amps, qubits, out);
        return;
    }
    const std::size_t table = out.size();
    const auto dim = static_cast<std::int64_t>(amps.size());
    const std::int64_t block_len = (dim + kReductionBlocks - 1) / kReductionBlocks;
    std::vector<double> partial(static_cast<std::size_t>(kReductionBlocks) * table, 0.0);

#pragma omp parallel for schedule(static)
    for (std::int64_t b = 0; b < kReductionBlocks; ++b) {
        double *local = partial.data() + static_cast<std::size_t>(b) * table;
        const std::int64_t lo = b * block_len;
        const std::int64_t hi = std::min(dim, lo + block_len);
        for (std::int64_t i = lo; i < hi; ++i) {
            std::uint64_t k = 0;
            for (std::size_t j = 0; j < qubits.size(); ++j) {
                k |= ((static_cast<std::uint64_t>(i) >> qubits[j]) & 1U) << j;
            }
            local[k] += std::norm(amps[static_cast<std::size_t>(i)]);
        }
    }

    std::fill(out.begin(), out.end(), 0.0);
    for (std::int64_t b = 0; b < kReductionBlocks; ++b) {
        const double *local = partial.data() + static_cast<std::size_t>(b) * table;
        for (std::size_t k = 0; k < table; ++k) {
            out[k] += local[k];
        }
    }
}

double norm_squared(std::span<const Amplitude> amps) {
    if (amps.size() < kParallelThreshold) {
        return serial::norm_squared(amps);
    }
    const auto dim = static_cast<std::int64_t>(amps.size());
    const std::int64_t block_len = (dim + kReductionBlocks - 1) / kReductionBlocks;
    std::vector<double> partial(kReductionBlocks, 0.0);

#pragma omp parallel for schedule(static)
    for (std::int64_t b = 0; b < kReductionBlocks; ++b) {
        const std::int64_t lo = b * block_len;
        const std::int64_t hi = std::min(dim, lo + block_len);
        double s = 0.0;
        for (std::int64_t i = lo; i < hi; ++i) {
            s += std::norm(amps[static_cast<std::size_t>(i)]);
        }
        partial[static_cast<std::size_t>(b)] = s;
    }
    double total = 0.0;
    for (double s : partial) {
        total += s;
    }
    return total;
}

} // namespace qfp::kernels::parallel
