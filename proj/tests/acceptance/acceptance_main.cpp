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

// Acceptance suite: one PASS/FAIL line per criterion, nonzero exit on any
// failure.

#include <algorithm>
#include <chrono>
#include <cmath>
#include <cstdio>
#include <exception>
#include <functional>
#include <random>
#include <sstream>
#include <string>
#include <utility>
#include <vector>

#include "oracles.hpp"
#include "qfp/circuit_builder.hpp"
#include "qfp/encoding.hpp"
#include "qfp/errors.hpp"
#include "qfp/harness/evaluation.hpp"
#include "qfp/harness/report.hpp"
#include "qfp/harness/scaling.hpp"
#include "qfp/harness/testbed.hpp"
#include "qfp/localization.hpp"
#include "qfp/qasm.hpp"
#include "qfp/statevector.hpp"

using namespace qfp;
namespace t = qfp::testing;

namespace {

struct Outcome {
    bool pass = true;
    std::string detail;
    std::vector<std::string> notes;
};

std::string fmt(const char *f, double x) {
    char buf[64];
    std::snprintf(buf, sizeof buf, f, x);
    return buf;
}

Fingerprint make_fingerprint(const std::vector<std::vector<double>> &phis) {
    std::vector<FingerprintRow> rows;
    for (std::size_t i = 0; i < phis.size(); ++i) {
        rows.push_back({static_cast<LocationId>(i), static_cast<double>(i), 0.0,
                        {phis[i], RssStage::Normalized}});
    }
    return Fingerprint(std::move(rows));
}

double max_entry_error(const LocationDistribution &a, const LocationDistribution &b) {
    double e = std::abs(a.ancilla_prob - b.ancilla_prob);
    for (const auto &[id, p] : b.probs) {
        e = std::max(e, std::abs(a.probs.at(id) - p));
    }
    return e;
}

// 1. Two-RP example.
Outcome worked_example() {
    Outcome o;
    const Fingerprint fp = make_fingerprint({t::unit(t::kExamplePhi0), t::unit(t::kExamplePhi1)});
    const RssVector psi{t::unit(t::kExamplePsi), RssStage::Normalized};
    const auto dist = quantum_localize(fp, psi, {Mode::Distance});
    const auto sim = quantum_localize(fp, psi, {Mode::Similarity});
    const auto classical = classical_localize_euclidean(fp, psi);
    o.pass = std::abs(dist.ancilla_prob - 0.1165) <= 1e-3 &&
             std::abs(dist.probs.at(0) - 0.956) <= 1e-3 &&
             std::abs(dist.probs.at(1) - 0.044) <= 1e-3 && sim.estimate == 1 &&
             classical.estimate == sim.estimate;
    o.detail = "p(a=1)=" + fmt("%.5f", dist.ancilla_prob) + " distance={" +
               fmt("%.4f", dist.probs.at(0)) + "," + fmt("%.4f", dist.probs.at(1)) +
               "} similarity estimate=l" + std::to_string(sim.estimate) +
               " classical=l" + std::to_string(classical.estimate);
    return o;
}

// 2. Exact simulation against the closed form and the classical matcher.
Outcome oracle_equivalence() {
    Outcome o;
    std::mt19937_64 rng(20260101);
    double worst = 0.0;
    double worst_oracle = 0.0;
    std::size_t untied = 0;
    std::size_t agree = 0;
    for (std::size_t n : {2U, 4U, 8U, 16U}) {
        for (std::size_t m : {2U, 4U, 8U, 16U}) {
            for (int trial = 0; trial < 50; ++trial) {
                std::vector<std::vector<double>> phis;
                for (std::size_t i = 0; i < n; ++i) {
                    phis.push_back(t::random_unit(m, rng));
                }
                const auto psi = t::random_unit(m, rng);
                const Fingerprint fp = make_fingerprint(phis);
                const RssVector test{psi, RssStage::Normalized};
                const PreparedLocalization prepared(fp, test);
                for (Mode mode : {Mode::Similarity, Mode::Distance}) {
                    const auto q = prepared.exact(mode);
                    const auto a = analytic_distribution(fp, test, mode);
                    worst = std::max(worst, max_entry_error(q, a));
                    // Brute-force weights.
                    const double sign = mode == Mode::Similarity ? 1.0 : -1.0;
                    double total = 0.0;
                    for (const auto &phi : phis) {
                        total += t::sq_distance(psi, phi, sign);
                    }
                    for (std::size_t i = 0; i < n; ++i) {
                        const double p = t::sq_distance(psi, phis[i], sign) / total;
                        worst_oracle = std::max(worst_oracle, std::abs(q.probs.at(i) - p));
                    }
                }
                const auto sim = prepared.exact(Mode::Similarity);
                if (!has_tie(sim.probs, Mode::Similarity)) {
                    ++untied;
                    const auto nearest = static_cast<LocationId>(t::nearest_row(psi, phis));
                    const bool same = sim.estimate == nearest &&
                                      classical_localize_euclidean(fp, test).estimate == nearest;
                    agree += same ? 1 : 0;
                }
            }
        }
    }
    o.pass = worst <= 1e-8 && worst_oracle <= 1e-8 && agree == untied;
    o.detail = "800 instances, max |exact - closed form|=" + fmt("%.2e", worst) +
               ", max |exact - brute force|=" + fmt("%.2e", worst_oracle) +
               ", agreement " + std::to_string(agree) + "/" + std::to_string(untied) +
               " untied";
    return o;
}

// 3. Amplitude loading.
Outcome encoding_round_trip() {
    Outcome o;
    std::mt19937_64 rng(33);
    double worst = 0.0;
    for (std::size_t m = 1; m <= 6; ++m) {
        const std::size_t dim = std::size_t{1} << m;
        std::vector<Qubit> data(m);
        for (std::size_t j = 0; j < m; ++j) {
            data[j] = j;
        }
        for (int trial = 0; trial < 200; ++trial) {
            const auto v = t::random_unit(dim, rng);
            const EncodingPlan plan = build_encoding_plan({v, RssStage::Normalized});
            StateVector s = init_state(m);
            for (const auto &g : plan.to_gates(data)) {
                s.apply(g);
            }
            for (std::size_t k = 0; k < dim; ++k) {
                worst = std::max(worst, std::abs(s[k] - Amplitude(v[k], 0.0)));
            }
        }
    }
    const double a0 = rotation_angle({t::unit(t::kExamplePhi0), RssStage::Normalized});
    const double a1 = rotation_angle({t::unit(t::kExamplePhi1), RssStage::Normalized});
    const double p0 = build_encoding_plan({t::unit(t::kExamplePhi0), RssStage::Normalized})
                          .nodes.at(0)
                          .theta;
    o.pass = worst < 1e-8 && std::abs(a0 - 0.28) <= 0.01 && std::abs(a1 - 2.66) <= 0.01 &&
             std::abs(p0 - a0) <= 1e-12;
    o.detail = "m=1..6 x 200 vectors, max amplitude error=" + fmt("%.2e", worst) +
               ", angles " + fmt("%.4f", a0) + " and " + fmt("%.4f", a1);
    return o;
}

// 4. Shot-count saturation on the synthetic testbed.
Outcome shots_saturation() {
    Outcome o;
    const harness::TestbedSpec spec;
    const harness::Dataset d =
        harness::prepare_dataset(harness::generate_synthetic_testbed(spec), {});
    std::vector<std::uint64_t> shots;
    for (std::uint64_t k = 64; k <= 32768; k *= 2) {
        shots.push_back(k);
    }
    harness::SweepConfig config;
    config.mode = Mode::Similarity;
    config.seeds = 5;
    const auto rows = harness::shots_sweep(d.fingerprint, d.tests, shots, config);

    bool monotone = true;
    std::ostringstream curve;
    for (std::size_t k = 0; k < shots.size(); ++k) {
        curve << (k == 0 ? "" : " ") << fmt("%.1f", rows[k].median_error_m);
        if (k > 0 && rows[k].median_error_m > rows[k - 1].median_error_m) {
            monotone = false;
        }
    }
    const double agreement = rows[shots.size() - 1].agreement_rate;
    o.pass = monotone && agreement >= 0.95;
    o.detail = "N=16 M=8, " + std::to_string(d.tests.size()) +
               " tests, 5 seeds, similarity mode; median error (m) over K=2^6..2^15: " +
               curve.str() + (monotone ? " (non-increasing)" : " (NOT monotone)") +
               "; K=2^15 agreement=" + fmt("%.3f", agreement) + " (need >= 0.95)";

    config.mode = Mode::Distance;
    config.append_exact = false;
    const std::vector<std::uint64_t> last{32768};
    const auto distance = harness::shots_sweep(d.fingerprint, d.tests, last, config);
    o.notes.push_back("diagnostic only: distance mode K=2^15 agreement=" +
                      fmt("%.3f", distance[0].agreement_rate));
    return o;
}

// 5. Qubit count and classical matcher timing.
Outcome resource_law() {
    Outcome o;
    bool law = qubit_count(2, 4) == 5 && qubit_count(16, 8) == 12;
    for (std::size_t n = 1; n <= 6; ++n) {
        for (std::size_t m = 1; m <= 6; ++m) {
            const std::size_t big_n = std::size_t{1} << n;
            const std::size_t big_m = std::size_t{1} << m;
            law = law && qubit_count(big_n, big_m) == 2 * n + m + 1;
        }
    }
    // Built circuits have that width, also for sizes that are not powers of two.
    std::mt19937_64 rng(5);
    for (std::size_t rows : {2U, 3U, 5U, 16U}) {
        for (std::size_t rps : {2U, 3U, 8U}) {
            std::vector<std::vector<double>> phis;
            for (std::size_t i = 0; i < rows; ++i) {
                phis.push_back(t::random_unit(rps, rng));
            }
            const auto lc = build_localization_circuit(
                {t::random_unit(rps, rng), RssStage::Normalized}, make_fingerprint(phis));
            law = law && lc.circuit.num_qubits ==
                             2 * t::bits_for(rows) + t::bits_for(rps) + 1;
        }
    }

    std::vector<std::pair<std::size_t, std::size_t>> sizes;
    for (std::size_t s = 2; s <= 64; s *= 2) {
        sizes.push_back({s, s});
    }
    const auto rows = harness::scaling_report(sizes);
    std::vector<double> xs;
    std::vector<double> ys;
    for (const auto &r : rows) {
        law = law && r.qubits == 2 * t::bits_for(r.locations) + t::bits_for(r.rps) + 1;
        xs.push_back(static_cast<double>(r.locations * r.rps));
        ys.push_back(r.classical_seconds);
    }
    const harness::LinearFit fit = harness::fit_linear(xs, ys);
    const auto report = harness::scaling_json(rows);
    const bool labelled = report.contains("simulator_time_note") &&
                          report.at("simulator_time_note").get<std::string>().find(
                              "not representative") != std::string::npos;
    o.pass = law && fit.r_squared >= 0.9 && labelled;
    o.detail = std::string("q = 2n+m+1 ") + (law ? "holds" : "VIOLATED") +
               " ((2,4)->" + std::to_string(qubit_count(2, 4)) + ", (16,8)->" +
               std::to_string(qubit_count(16, 8)) +
               "); classical time vs N*M over (2,2)..(64,64): R^2=" +
               fmt("%.4f", fit.r_squared) + "; simulator-time label " +
               (labelled ? "present" : "missing");
    return o;
}

Circuit random_circuit(std::size_t qubits, std::size_t gates, std::mt19937_64 &rng) {
    std::uniform_int_distribution<std::size_t> pick(0, qubits - 1);
    std::uniform_real_distribution<double> angle(-3.0, 3.0);
    std::bernoulli_distribution coin(0.3);
    Circuit c;
    c.num_qubits = qubits;
    for (std::size_t g = 0; g < gates; ++g) {
        const Qubit target = pick(rng);
        std::vector<Control> controls;
        for (Qubit q = 0; q < qubits; ++q) {
            if (q != target && coin(rng)) {
                controls.push_back({q, coin(rng)});
            }
        }
        switch (pick(rng) % 3) {
        case 0:
            c.add(GateOp::h(target, controls));
            break;
        case 1:
            c.add(GateOp::x(target, controls));
            break;
        default:
            c.add(GateOp::u(target, angle(rng), controls));
            break;
        }
    }
    return c;
}

StateVector as_state(const std::vector<Amplitude> &amps) {
    return StateVector::from_amplitudes(amps);
}

double max_diff(const StateVector &a, const StateVector &b) {
    double e = 0.0;
    for (std::size_t k = 0; k < a.size(); ++k) {
        e = std::max(e, std::abs(a[k] - b[k]));
    }
    return e;
}

// 6. Simulator core.
Outcome simulator_properties() {
    Outcome o;
    std::mt19937_64 rng(66);
    std::uniform_real_distribution<double> angle(-3.0, 3.0);
    double norm_err = 0.0;
    double inverse_err = 0.0;
    double linear_err = 0.0;
    bool noop = true;
    for (int trial = 0; trial < 200; ++trial) {
        const std::size_t q = 1 + static_cast<std::size_t>(trial % 8);
        const Circuit c = random_circuit(q, 30, rng);
        const auto a = t::random_state(q, rng);
        const auto b = t::random_state(q, rng);
        const StateVector ca = apply_circuit(as_state(a), c);
        norm_err = std::max(norm_err, std::abs(ca.norm_squared() - 1.0));

        const Amplitude alpha(0.6, -0.2);
        const Amplitude beta(-0.3, 0.7);
        std::vector<Amplitude> mix(a.size());
        for (std::size_t k = 0; k < a.size(); ++k) {
            mix[k] = alpha * a[k] + beta * b[k];
        }
        const StateVector cmix = apply_circuit(as_state(mix), c);
        const StateVector cb = apply_circuit(as_state(b), c);
        for (std::size_t k = 0; k < a.size(); ++k) {
            linear_err = std::max(linear_err, std::abs(cmix[k] - (alpha * ca[k] + beta * cb[k])));
        }

        std::uniform_int_distribution<std::size_t> pick(0, q - 1);
        const Qubit target = pick(rng);
        std::vector<Control> controls;
        for (Qubit c2 = 0; c2 < q; ++c2) {
            if (c2 != target && (rng() & 1U)) {
                controls.push_back({c2, (rng() & 1U) == 1U});
            }
        }
        const double theta = angle(rng);
        StateVector s = as_state(a);
        s.apply(GateOp::u(target, theta, controls));
        s.apply(GateOp::u(target, -theta, controls));
        inverse_err = std::max(inverse_err, max_diff(s, as_state(a)));

        if (!controls.empty()) {
            // Basis states that violate the first control are untouched.
            std::vector<Amplitude> masked = a;
            for (std::size_t k = 0; k < masked.size(); ++k) {
                const bool bit = ((k >> controls[0].qubit) & 1U) == 1U;
                if (bit == controls[0].value) {
                    masked[k] = 0.0;
                }
            }
            StateVector m = as_state(masked);
            m.apply(GateOp::u(target, theta, controls));
            m.apply(GateOp::x(target, controls));
            m.apply(GateOp::h(target, controls));
            for (std::size_t k = 0; k < masked.size(); ++k) {
                noop = noop && m[k] == masked[k];
            }
        }
    }

    std::size_t rejected = 0;
    double worst_stat = 0.0;
    const std::vector<Qubit> all{0, 1, 2};
    for (std::uint64_t trial = 0; trial < 20; ++trial) {
        const StateVector s = as_state(t::random_state(3, rng));
        const auto probs = marginal_probabilities(s, all);
        const std::uint64_t k = 100000;
        const ShotCounts counts = sample_shots(s, all, k, 1000 + trial);
        double stat = 0.0;
        for (std::uint64_t b = 0; b < 8; ++b) {
            const double expected = probs[b] * static_cast<double>(k);
            const double diff = static_cast<double>(counts.count(b)) - expected;
            stat += diff * diff / expected;
        }
        worst_stat = std::max(worst_stat, stat);
        rejected += stat > t::chi_square_critical_999(7) ? 1 : 0;
    }

    o.pass = norm_err <= 1e-10 && inverse_err <= 1e-10 && linear_err <= 1e-10 && noop &&
             rejected == 0;
    o.detail = "norm " + fmt("%.1e", norm_err) + ", inverse " + fmt("%.1e", inverse_err) +
               ", linearity " + fmt("%.1e", linear_err) + ", control no-op " +
               (noop ? "exact" : "BROKEN") + ", chi-square K=100000: " +
               std::to_string(rejected) + "/20 rejected at p=0.001 (max stat " +
               fmt("%.2f", worst_stat) + ", critical " +
               fmt("%.3f", t::chi_square_critical_999(7)) + ")";
    return o;
}

// 7. QASM export, re-import and simulation.
Outcome qasm_validity() {
    Outcome o;
    std::mt19937_64 rng(77);
    std::vector<std::pair<Fingerprint, RssVector>> cases;
    cases.push_back({make_fingerprint({t::unit(t::kExamplePhi0), t::unit(t::kExamplePhi1)}),
                     {t::unit(t::kExamplePsi), RssStage::Normalized}});
    std::vector<std::vector<double>> phis;
    for (int i = 0; i < 4; ++i) {
        phis.push_back(t::random_unit(4, rng));
    }
    cases.push_back({make_fingerprint(phis), {t::random_unit(4, rng), RssStage::Normalized}});

    double worst = 0.0;
    std::size_t lines = 0;
    for (const auto &[fp, test] : cases) {
        const LocalizationCircuit lc = build_localization_circuit(test, fp);
        const std::string text = export_qasm(lc.circuit);
        lines += static_cast<std::size_t>(std::count(text.begin(), text.end(), '\n'));
        const QasmProgram p = parse_qasm(text);
        const StateVector original = apply_circuit(init_state(lc.circuit.num_qubits), lc.circuit);
        const StateVector reimported = apply_circuit(init_state(p.circuit.num_qubits), p.circuit);
        const auto location = lc.circuit.layout->location_qubits();
        for (bool a : {false, true}) {
            const auto x = conditional_distribution(original, {0, a}, location);
            const auto y = conditional_distribution(reimported, {0, a}, location);
            for (std::size_t k = 0; k < x.size(); ++k) {
                worst = std::max(worst, std::abs(x[k] - y[k]));
            }
        }
    }
    o.pass = worst <= 1e-6;
    o.detail = "example and N=4 M=4 instance, " + std::to_string(lines) +
               " QASM lines parsed; max conditional difference=" + fmt("%.2e", worst);
    return o;
}

} // namespace

int main() {
    const std::vector<std::pair<std::string, std::function<Outcome()>>> criteria{
        {"1 worked-example fidelity", worked_example},
        {"2 oracle equivalence", oracle_equivalence},
        {"3 encoding round trip", encoding_round_trip},
        {"4 shots saturation", shots_saturation},
        {"5 resource law", resource_law},
        {"6 simulator core properties", simulator_properties},
        {"7 QASM validity", qasm_validity},
    };
    int failures = 0;
    for (const auto &[name, run] : criteria) {
        const auto start = std::chrono::steady_clock::now();
        Outcome o;
        try {
            o = run();
        } catch (const std::exception &e) {
            o.pass = false;
            o.detail = std::string("exception: ") + e.what();
        }
        const double secs =
            std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
        std::printf("%s criterion %s: %s [%.1f s]\n", o.pass ? "PASS" : "FAIL", name.c_str(),
                    o.detail.c_str(), secs);
        for (const auto &note : o.notes) {
            std::printf("     %s\n", note.c_str());
        }
        std::fflush(stdout);
        failures += o.pass ? 0 : 1;
    }
    std::printf("%d of %zu criteria passed\n", static_cast<int>(criteria.size()) - failures,
                criteria.size());
    return failures == 0 ? 0 : 1;
}
