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

#include "qfp/harness/report.hpp"

#include <cmath>
#include <cstdio>
#include <fstream>
#include <ostream>
#include <sstream>

#include "qfp/errors.hpp"

namespace qfp::harness {

namespace {

std::string num(double v) {
    if (std::isnan(v)) {
        return "nan";
    }
    char buf[40];
    std::snprintf(buf, sizeof buf, "%.10g", v);
    return buf;
}

} // namespace

nlohmann::ordered_json to_json(const LocationDistribution &d) {
    nlohmann::ordered_json j;
    j["mode"] = std::string(to_string(d.mode));
    j["ancilla_outcome"] = d.mode == Mode::Distance ? 1 : 0;
    j["ancilla_prob"] = d.ancilla_prob;
    j["estimate"] = d.estimate;
    j["shots"] = d.shots;
    j["postselected"] = d.postselected;
    nlohmann::ordered_json probs = nlohmann::ordered_json::array();
    for (const auto &[id, p] : d.probs) {
        probs.push_back({{"location", id}, {"probability", p}});
    }
    j["probabilities"] = probs;
    return j;
}

nlohmann::ordered_json summary_json(const EvalReport &report) {
    nlohmann::ordered_json j;
    j["mode"] = std::string(to_string(report.mode));
    j["shots"] = report.shots;
    j["samples"] = report.records.size();
    j["classical"] = {{"median_error_m", report.classical.median_m},
                      {"mean_error_m", report.classical.mean_m}};
    j["quantum"] = {{"median_error_m", report.quantum.median_m},
                    {"mean_error_m", report.quantum.mean_m}};
    j["agreement_rate"] = report.agreement_rate;
    j["untied_agreement_rate"] = report.untied_agreement_rate;
    j["ties"] = report.ties;
    return j;
}

nlohmann::ordered_json sweep_json(std::span<const SweepRow> rows) {
    nlohmann::ordered_json out = nlohmann::ordered_json::array();
    for (const auto &r : rows) {
        out.push_back({{"shots", r.shots},
                       {"median_error_m", r.median_error_m},
                       {"agreement_rate", r.agreement_rate},
                       {"no_estimate_rate", r.no_estimate_rate},
                       {"postselection_rate", r.postselection_rate}});
    }
    return out;
}

nlohmann::ordered_json scaling_json(std::span<const ScalingRow> rows) {
    nlohmann::ordered_json j;
    j["simulator_time_note"] = std::string(kSimulatorTimeNote);
    nlohmann::ordered_json arr = nlohmann::ordered_json::array();
    for (const auto &r : rows) {
        nlohmann::ordered_json row = {{"locations", r.locations},
                                      {"rps", r.rps},
                                      {"locations_x_rps", r.locations * r.rps},
                                      {"qubits", r.qubits},
                                      {"gate_count", r.gate_count},
                                      {"classical_seconds", r.classical_seconds},
                                      {"skipped", r.skipped}};
        if (r.simulator_seconds) {
            row["simulator_seconds"] = *r.simulator_seconds;
        } else {
            row["simulator_seconds"] = nullptr;
        }
        arr.push_back(row);
    }
    j["rows"] = arr;
    if (rows.size() >= 2) {
        std::vector<double> xs;
        std::vector<double> ys;
        for (const auto &r : rows) {
            xs.push_back(static_cast<double>(r.locations * r.rps));
            ys.push_back(r.classical_seconds);
        }
        try {
            const LinearFit fit = fit_linear(xs, ys);
            j["classical_linear_fit"] = {{"slope_seconds_per_element", fit.slope},
                                         {"intercept_seconds", fit.intercept},
                                         {"r_squared", fit.r_squared}};
        } catch (const ContractViolation &) {
            j["classical_linear_fit"] = nullptr;
        }
    }
    return j;
}

void write_records_csv(std::ostream &out, const EvalReport &report) {
    out << "index,true_x_m,true_y_m,classical_estimate,classical_error_m,"
           "quantum_estimate,quantum_error_m,tie\n";
    for (const auto &r : report.records) {
        out << r.index << ',' << num(r.true_x_m) << ',' << num(r.true_y_m) << ','
            << r.classical_estimate << ',' << num(r.classical_error_m) << ','
            << r.quantum_estimate << ',' << num(r.quantum_error_m) << ',' << (r.tie ? 1 : 0)
            << '\n';
    }
}

void write_cdf_csv(std::ostream &out, std::span<const CdfPoint> classical,
                   std::span<const CdfPoint> quantum) {
    out << "matcher,error_m,fraction\n";
    for (const auto &p : classical) {
        out << "classical," << num(p.error_m) << ',' << num(p.fraction) << '\n';
    }
    for (const auto &p : quantum) {
        out << "quantum," << num(p.error_m) << ',' << num(p.fraction) << '\n';
    }
}

void write_sweep_csv(std::ostream &out, std::span<const SweepRow> rows) {
    out << "shots,median_error_m,agreement_rate,no_estimate_rate,postselection_rate\n";
    for (const auto &r : rows) {
        out << r.shots << ',' << num(r.median_error_m) << ',' << num(r.agreement_rate) << ','
            << num(r.no_estimate_rate) << ',' << num(r.postselection_rate) << '\n';
    }
}

void write_scaling_csv(std::ostream &out, std::span<const ScalingRow> rows) {
    out << "locations,rps,locations_x_rps,qubits,gate_count,classical_seconds,"
           "simulator_seconds,skipped\n";
    for (const auto &r : rows) {
        out << r.locations << ',' << r.rps << ',' << r.locations * r.rps << ',' << r.qubits
            << ',' << r.gate_count << ',' << num(r.classical_seconds) << ','
            << (r.simulator_seconds ? num(*r.simulator_seconds) : "") << ','
            << (r.skipped ? 1 : 0) << '\n';
    }
}

void write_text_file(const std::filesystem::path &path, const std::string &text) {
    if (path.has_parent_path()) {
        std::filesystem::create_directories(path.parent_path());
    }
    std::ofstream out(path, std::ios::binary);
    if (!out) {
        throw SchemaError("cannot write '" + path.string() + "'");
    }
    out << text;
}

void write_eval_report(const std::filesystem::path &dir, const EvalReport &report) {
    std::ostringstream records;
    write_records_csv(records, report);
    write_text_file(dir / "records.csv", records.str());
    std::ostringstream cdf;
    write_cdf_csv(cdf, report.classical_cdf, report.quantum_cdf);
    write_text_file(dir / "cdf.csv", cdf.str());
    write_text_file(dir / "summary.json", summary_json(report).dump(2) + "\n");
}

} // namespace qfp::harness
