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

#include "qfp/qasm.hpp"

#include <bit>
#include <cstdio>
#include <numbers>
#include <sstream>

#include "qfp/errors.hpp"

namespace qfp {

namespace {

std::string angle(double value) {
    char buf[40];
    std::snprintf(buf, sizeof buf, "%.17g", value);
    return buf;
}

class Emitter {
  public:
    explicit Emitter(std::ostringstream &out) : out_(out) {}

    void h(Qubit t) { out_ << "h q[" << t << "];\n"; }
    void x(Qubit t) { out_ << "x q[" << t << "];\n"; }
    void ry(double a, Qubit t) { out_ << "ry(" << angle(a) << ") q[" << t << "];\n"; }
    void rz(double a, Qubit t) { out_ << "rz(" << angle(a) << ") q[" << t << "];\n"; }
    void u1(double a, Qubit t) { out_ << "u1(" << angle(a) << ") q[" << t << "];\n"; }
    void cx(Qubit c, Qubit t) { out_ << "cx q[" << c << "],q[" << t << "];\n"; }

    // Rotation about y (or z) by `theta` on the control pattern given by the
    // control values, identity on every other pattern.
    void uniformly_controlled(bool about_z, double theta, Qubit target,
                              const std::vector<Control> &controls) {
        const std::size_t k = controls.size();
        const std::uint64_t patterns = std::uint64_t{1} << k;
        std::uint64_t selected = 0;
        for (std::size_t j = 0; j < k; ++j) {
            if (controls[j].value) {
                selected |= std::uint64_t{1} << j;
            }
        }
        const double scale = theta / static_cast<double>(patterns);
        for (std::uint64_t i = 0; i < patterns; ++i) {
            const std::uint64_t gray = i ^ (i >> 1);
            const std::uint64_t next = (i + 1) % patterns;
            const std::uint64_t next_gray = next ^ (next >> 1);
            const double sign = (std::popcount(selected & gray) % 2 == 0) ? 1.0 : -1.0;
            if (about_z) {
                rz(sign * scale, target);
            } else {
                ry(sign * scale, target);
            }
            if (k > 0) {
                const auto bit = static_cast<std::size_t>(std::countr_zero(gray ^ next_gray));
                cx(controls[bit].qubit, target);
            }
        }
    }

    // Phase e^{i lambda} on target = 1 with every (positive) control = 1.
    void multi_controlled_phase(double lambda, Qubit target,
                                std::vector<Control> controls) {
        if (controls.empty()) {
            u1(lambda, target);
            return;
        }
        uniformly_controlled(true, lambda, target, controls);
        const Qubit last = controls.back().qubit;
        controls.pop_back();
        multi_controlled_phase(lambda / 2.0, last, std::move(controls));
    }

    void flip_negative(const std::vector<Control> &controls) {
        for (const auto &c : controls) {
            if (!c.value) {
                x(c.qubit);
            }
        }
    }

    static std::vector<Control> positive(std::vector<Control> controls) {
        for (auto &c : controls) {
            c.value = true;
        }
        return controls;
    }

    void gate(const GateOp &g) {
        const auto &cs = g.controls;
        switch (g.kind) {
        case GateKind::Hadamard:
            if (!cs.empty()) {
                throw ContractViolation("controlled Hadamard has no QASM decomposition");
            }
            h(g.target);
            return;
        case GateKind::PauliX:
            if (cs.empty()) {
                x(g.target);
                return;
            }
            flip_negative(cs);
            if (cs.size() == 1) {
                cx(cs.front().qubit, g.target);
            } else {
                h(g.target);
                multi_controlled_phase(std::numbers::pi, g.target, positive(cs));
                h(g.target);
            }
            flip_negative(cs);
            return;
        case GateKind::RotationU:
            if (cs.empty()) {
                ry(g.theta, g.target);
            } else {
                uniformly_controlled(false, g.theta, g.target, cs);
            }
            return;
        case GateKind::RotationZ:
            if (cs.empty()) {
                rz(g.theta, g.target);
            } else {
                uniformly_controlled(true, g.theta, g.target, cs);
            }
            return;
        case GateKind::Phase:
            flip_negative(cs);
            multi_controlled_phase(g.theta, g.target, positive(cs));
            flip_negative(cs);
            return;
        }
    }

  private:
    std::ostringstream &out_;
};

} // namespace

std::string export_qasm(const Circuit &circuit) {
    validate_circuit(circuit);
    std::ostringstream out;
    out << "OPENQASM 2.0;\n";
    out << "include \"qelib1.inc\";\n";

    std::vector<Qubit> measured;
    if (circuit.layout) {
        measured.push_back(circuit.layout->ancilla());
        for (Qubit q : circuit.layout->location_qubits()) {
            measured.push_back(q);
        }
    } else {
        for (Qubit q = 0; q < circuit.num_qubits; ++q) {
            measured.push_back(q);
        }
    }
    out << "qreg q[" << circuit.num_qubits << "];\n";
    out << "creg c[" << measured.size() << "];\n";

    Emitter emit(out);
    for (const auto &g : circuit.gates) {
        emit.gate(g);
    }
    if (!circuit.gates.empty()) {
        for (std::size_t j = 0; j < measured.size(); ++j) {
            out << "measure q[" << measured[j] << "] -> c[" << j << "];\n";
        }
    }
    return out.str();
}

} // namespace qfp
