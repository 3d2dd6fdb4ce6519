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
 * Builds the interference circuit that compares one test vector against
 * every fingerprint row.
 *
 * Step A puts the ancilla and index register in uniform superposition.
 * Step B loads the test vector on the ancilla |1> branch and flips the
 * ancilla, so the test vector sits on |0>. Step C runs one (++) block per
 * fingerprint row: the row's vector is loaded on (ancilla |1>, index i) and
 * the row's location label is written on index i. Step D applies H to the
 * ancilla, leaving
 *
 *     1/(2 sqrt N) sum_i (|0>|i>(psi + phi_i) + |1>|i>(psi - phi_i)) |l_i>.
 */

#pragma once

#include <cstddef>
#include <optional>
#include <vector>

#include "qfp/circuit.hpp"
#include "qfp/encoding.hpp"
#include "qfp/fingerprint.hpp"

namespace qfp {

/// 2 * ceil(log2 N) + ceil(log2 M) + 1. Requires N, M >= 2.
[[nodiscard]] std::size_t qubit_count(std::size_t locations, std::size_t rps);

/// Layout for `rows` fingerprint rows of `rps` RPs, padded to powers of two.
[[nodiscard]] RegisterLayout layout_for(std::size_t rows, std::size_t rps);

/**
 * @brief Gates of the (++) block for fingerprint row `index`.
 *
 * Index qubits whose bit in `index` is 0 are wrapped in X gates so the
 * block can use positive controls. Inside the sandwich, `phi` is loaded
 * under (ancilla = 1, index = all ones) and each set bit of `label` is
 * written with an X controlled on the index only, so both ancilla branches
 * of row `index` carry the label.
 */
[[nodiscard]] std::vector<GateOp>
build_plus_plus_block(std::size_t index, const RssVector &phi,
                      std::size_t label, const RegisterLayout &layout);

struct LocalizationCircuit {
    Circuit circuit;
    /// Location id for each location-register value in use.
    std::vector<LocationId> label_to_location;
    /// Label carried by padded index values, when N is not a power of two.
    std::optional<std::size_t> padding_label;
};

[[nodiscard]] LocalizationCircuit
build_localization_circuit(const RssVector &test, const Fingerprint &fp);

} // namespace qfp
