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

#include "qfp/circuit_builder.hpp"

#include <algorithm>
#include <bit>
#include <string>

#include "qfp/errors.hpp"

namespace qfp {

namespace {

std::size_t bits_for(std::size_t count) {
    return static_cast<std::size_t>(
        std::countr_zero(std::max<std::size_t>(2, std::bit_ceil(count))));
}

std::vector<Control> all_ones(const std::vector<Qubit> &qubits) {
    std::vector<Control> out;
    out.reserve(qubits.size());
    for (Qubit q : qubits) {
        out.push_back({q, true});
    }
    return out;
}

void append_index_flips(std::vector<GateOp> &gates, std::size_t index,
                        const RegisterLayout &layout) {
    for (std::size_t j = 0; j < layout.index_bits; ++j) {
        if (((index >> j) & 1U) == 0) {
            gates.push_back(GateOp::x(layout.index_qubit(j)));
        }
    }
}

void append_label_writes(std::vector<GateOp> &gates, std::size_t label,
                         const RegisterLayout &layout) {
    const auto index_selected = all_ones(layout.index_qubits());
    for (std::size_t j = 0; j < layout.location_bits; ++j) {
        if ((label >> j) & 1U) {
            gates.push_back(GateOp::x(layout.location_qubit(j), index_selected));
        }
    }
}

void check_block_args(std::size_t index, std::size_t label,
                      const RegisterLayout &layout) {
    if (index >= (std::size_t{1} << layout.index_bits)) {
        throw ContractViolation("row index " + std::to_string(index) +
                                " does not fit the index register");
    }
    if (label >= (std::size_t{1} << layout.location_bits)) {
        throw ContractViolation("location label " + std::to_string(label) +
                                " does not fit in " +
                                std::to_string(layout.location_bits) + " bits");
    }
}

} // namespace

std::size_t qubit_count(std::size_t locations, std::size_t rps) {
    if (locations < 2 || rps < 2) {
        throw ContractViolation("qubit_count needs N >= 2 and M >= 2");
    }
    return layout_for(locations, rps).total();
}

RegisterLayout layout_for(std::size_t rows, std::size_t rps) {
    RegisterLayout layout;
    layout.index_bits = bits_for(rows);
    layout.data_bits = bits_for(rps);
    layout.location_bits = layout.index_bits;
    return layout;
}

std::vector<GateOp> build_plus_plus_block(std::size_t index,
                                          const RssVector &phi,
                                          std::size_t label,
                                          const RegisterLayout &layout) {
    check_block_args(index, label, layout);
    if (pad_to_power_of_two(phi).size() != (std::size_t{1} << layout.data_bits)) {
        throw ContractViolation("fingerprint vector does not fit the data register");
    }
    std::vector<GateOp> gates;
    append_index_flips(gates, index, layout);

    std::vector<Control> selected{{layout.ancilla(), true}};
    for (const auto &c : all_ones(layout.index_qubits())) {
        selected.push_back(c);
    }
    const EncodingPlan plan = build_encoding_plan(phi, std::move(selected));
    for (auto &g : plan.to_gates(layout.data_qubits())) {
        gates.push_back(std::move(g));
    }

    append_label_writes(gates, label, layout);
    append_index_flips(gates, index, layout);
    return gates;
}

LocalizationCircuit build_localization_circuit(const RssVector &test,
                                               const Fingerprint &fp) {
    if (fp.empty()) {
        throw ContractViolation("fingerprint is empty");
    }
    if (test.size() != fp.rp_count()) {
        throw ContractViolation("test vector has " + std::to_string(test.size()) +
                                " RPs, fingerprint has " +
                                std::to_string(fp.rp_count()));
    }
    const RegisterLayout layout = layout_for(fp.size(), fp.rp_count());
    if (layout.total() > 62) {
        throw ResourceError(layout.total(), 62);
    }

    LocalizationCircuit out;
    Circuit &c = out.circuit;
    c.num_qubits = layout.total();
    c.layout = layout;
    out.label_to_location = fp.locations();

    auto mark = [&c](char label, std::size_t begin) {
        c.steps.push_back({label, begin, c.gates.size()});
    };

    // Step A
    std::size_t begin = c.gates.size();
    c.add(GateOp::h(layout.ancilla()));
    for (Qubit q : layout.index_qubits()) {
        c.add(GateOp::h(q));
    }
    mark('A', begin);

    // Step B
    begin = c.gates.size();
    const EncodingPlan test_plan =
        build_encoding_plan(test, {{layout.ancilla(), true}});
    for (auto &g : test_plan.to_gates(layout.data_qubits())) {
        c.add(std::move(g));
    }
    c.add(GateOp::x(layout.ancilla()));
    mark('B', begin);

    // Step C
    begin = c.gates.size();
    for (std::size_t i = 0; i < fp.size(); ++i) {
        for (auto &g : build_plus_plus_block(i, fp.row(i).phi,
                                             fp.label_of_row(i), layout)) {
            c.add(std::move(g));
        }
    }
    const std::size_t padded_rows = std::size_t{1} << layout.index_bits;
    if (padded_rows > fp.size()) {
        const std::size_t pad_label = fp.locations().size();
        out.padding_label = pad_label;
        check_block_args(padded_rows - 1, pad_label, layout);
        for (std::size_t i = fp.size(); i < padded_rows; ++i) {
            std::vector<GateOp> block;
            append_index_flips(block, i, layout);
            append_label_writes(block, pad_label, layout);
            append_index_flips(block, i, layout);
            for (auto &g : block) {
                c.add(std::move(g));
            }
        }
    }
    mark('C', begin);

    // Step D
    begin = c.gates.size();
    c.add(GateOp::h(layout.ancilla()));
    mark('D', begin);
    return out;
}

} // namespace qfp
