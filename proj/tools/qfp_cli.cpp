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

// qfp: fingerprint localization with a simulated quantum matcher.
//
// Exit codes: 0 success, 2 input or schema error, 3 simulator resource cap,
// 1 anything else.

#include <cmath>
#include <cstdint>
#include <fstream>
#include <iostream>
#include <limits>
#include <sstream>
#include <string>
#include <utility>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "qfp/circuit_builder.hpp"
#include "qfp/encoding.hpp"
#include "qfp/errors.hpp"
#include "qfp/harness/dataset.hpp"
#include "qfp/harness/evaluation.hpp"
#include "qfp/harness/report.hpp"
#include "qfp/harness/scaling.hpp"
#include "qfp/harness/testbed.hpp"
#include "qfp/localization.hpp"
#include "qfp/qasm.hpp"

namespace {

using namespace qfp;
using namespace qfp::harness;

constexpr int kExitInput = 2;
constexpr int kExitResource = 3;

struct CommonOptions {
    std::string fingerprint;
    std::string tests;
    std::string mode = "similarity";
    std::uint64_t shots = 0;
    std::uint64_t seed = 0;
    std::string out;
    double floor_dbm = kDefaultFloorDbm;
    std::string preprocess = "min-shift";
};

struct QueryOptions {
    long long index = -1;
    std::string rss;
};

PreprocessConfig preprocess_config(const CommonOptions &o) {
    return {parse_preprocess_policy(o.preprocess), o.floor_dbm};
}

std::vector<double> parse_rss_list(const std::string &text) {
    std::vector<double> out;
    std::stringstream ss(text);
    std::string item;
    while (std::getline(ss, item, ',')) {
        if (item.find_first_not_of(" \t") == std::string::npos) {
            out.push_back(std::numeric_limits<double>::quiet_NaN());
            continue;
        }
        std::size_t used = 0;
        double v = 0.0;
        try {
            v = std::stod(item, &used);
        } catch (const std::exception &) {
            throw ParseError("invalid --rss value '" + item + "'", 0);
        }
        if (item.find_first_not_of(" \t", used) != std::string::npos) {
            throw ParseError("invalid --rss value '" + item + "'", 0);
        }
        out.push_back(v);
    }
    if (!text.empty() && text.back() == ',') {
        out.push_back(std::numeric_limits<double>::quiet_NaN());
    }
    return out;
}

template <class T> std::vector<T> parse_list(const std::string &text, const char *flag) {
    std::vector<T> out;
    std::stringstream ss(text);
    std::string item;
    while (std::getline(ss, item, ',')) {
        try {
            std::size_t used = 0;
            const unsigned long long v = std::stoull(item, &used);
            if (used != item.size()) {
                throw std::invalid_argument(item);
            }
            out.push_back(static_cast<T>(v));
        } catch (const std::exception &) {
            throw ParseError(std::string("invalid ") + flag + " entry '" + item + "'", 0);
        }
    }
    return out;
}

std::vector<std::pair<std::size_t, std::size_t>> parse_sizes(const std::string &text) {
    std::vector<std::pair<std::size_t, std::size_t>> out;
    std::stringstream ss(text);
    std::string item;
    while (std::getline(ss, item, ',')) {
        const auto x = item.find('x');
        if (x == std::string::npos) {
            throw ParseError("--sizes entries look like NxM, got '" + item + "'", 0);
        }
        const auto n = parse_list<std::size_t>(item.substr(0, x), "--sizes");
        const auto m = parse_list<std::size_t>(item.substr(x + 1), "--sizes");
        if (n.size() != 1 || m.size() != 1) {
            throw ParseError("--sizes entries look like NxM, got '" + item + "'", 0);
        }
        out.emplace_back(n[0], m[0]);
    }
    return out;
}

void require(const std::string &value, const char *flag) {
    if (value.empty()) {
        throw ContractViolation(std::string(flag) + " is required");
    }
}

// The test vector selected by --rss or by --index into --tests.
RssVector query_vector(const CommonOptions &o, const QueryOptions &q, std::size_t rps) {
    const PreprocessConfig config = preprocess_config(o);
    if (!q.rss.empty()) {
        RssVector raw{parse_rss_list(q.rss), RssStage::Raw};
        if (raw.values.size() != rps) {
            throw SchemaError("--rss has " + std::to_string(raw.values.size()) +
                              " readings, fingerprint has " + std::to_string(rps));
        }
        return normalize(preprocess_rss(raw, config));
    }
    require(o.tests, "--tests or --rss");
    const auto tests = load_tests(o.tests, config, rps);
    if (q.index < 0 || static_cast<std::size_t>(q.index) >= tests.size()) {
        throw ContractViolation("--index out of range (test set has " +
                                std::to_string(tests.size()) + " samples)");
    }
    return tests[static_cast<std::size_t>(q.index)].rss;
}

void emit(const CommonOptions &o, const std::string &file, const std::string &text) {
    if (o.out.empty()) {
        std::cout << text;
    } else {
        write_text_file(std::filesystem::path(o.out) / file, text);
    }
}

void run_localize(const CommonOptions &o, const QueryOptions &q) {
    require(o.fingerprint, "--fingerprint");
    const Fingerprint fp = load_fingerprint(o.fingerprint, preprocess_config(o));
    const RssVector test = query_vector(o, q, fp.rp_count());
    LocalizationConfig config;
    config.mode = parse_mode(o.mode);
    config.shots = o.shots;
    config.seed = o.seed;
    const LocationDistribution d = quantum_localize(fp, test, config);
    const ClassicalResult classical = classical_localize_euclidean(fp, test);
    nlohmann::ordered_json j = to_json(d);
    j["classical_estimate"] = classical.estimate;
    emit(o, "localize.json", j.dump(2) + "\n");
}

void run_evaluate(const CommonOptions &o) {
    require(o.fingerprint, "--fingerprint");
    require(o.tests, "--tests");
    const PreprocessConfig pre = preprocess_config(o);
    const Fingerprint fp = load_fingerprint(o.fingerprint, pre);
    const auto tests = load_tests(o.tests, pre, fp.rp_count());
    LocalizationConfig config;
    config.mode = parse_mode(o.mode);
    config.shots = o.shots;
    config.seed = o.seed;
    const EvalReport report = evaluate(fp, tests, config);
    if (!o.out.empty()) {
        write_eval_report(o.out, report);
    }
    std::cout << summary_json(report).dump(2) << "\n";
}

void run_sweep(const CommonOptions &o, const std::string &shots_list, std::size_t seeds) {
    require(o.fingerprint, "--fingerprint");
    require(o.tests, "--tests");
    const PreprocessConfig pre = preprocess_config(o);
    const Fingerprint fp = load_fingerprint(o.fingerprint, pre);
    const auto tests = load_tests(o.tests, pre, fp.rp_count());
    const auto shots = parse_list<std::uint64_t>(shots_list, "--shots-list");
    SweepConfig config;
    config.mode = parse_mode(o.mode);
    config.seeds = seeds;
    config.base_seed = o.seed;
    const auto rows = shots_sweep(fp, tests, shots, config);
    std::ostringstream csv;
    write_sweep_csv(csv, rows);
    if (!o.out.empty()) {
        write_text_file(std::filesystem::path(o.out) / "sweep.json",
                        sweep_json(rows).dump(2) + "\n");
    }
    emit(o, "sweep.csv", csv.str());
}

void run_scale(const CommonOptions &o, const std::string &sizes_text, std::size_t cap) {
    ScalingOptions options;
    options.seed = o.seed;
    options.simulator_qubit_cap = cap;
    const auto sizes = parse_sizes(sizes_text);
    const auto rows = scaling_report(sizes, options);
    std::ostringstream csv;
    write_scaling_csv(csv, rows);
    if (!o.out.empty()) {
        write_text_file(std::filesystem::path(o.out) / "scaling.json",
                        scaling_json(rows).dump(2) + "\n");
    } else {
        std::cerr << "note: " << kSimulatorTimeNote << "\n";
    }
    emit(o, "scaling.csv", csv.str());
}

void run_gen(const CommonOptions &o, TestbedSpec spec) {
    require(o.out, "--out");
    spec.seed = o.seed;
    spec.floor_dbm = o.floor_dbm;
    const SyntheticTestbed testbed = generate_synthetic_testbed(spec);
    std::ostringstream fp;
    write_fingerprint_csv(fp, testbed.fingerprint);
    std::ostringstream tests;
    write_tests_csv(tests, testbed.tests);
    const std::filesystem::path dir(o.out);
    write_text_file(dir / "fingerprint.csv", fp.str());
    write_text_file(dir / "tests.csv", tests.str());
}

void run_export(const CommonOptions &o, const QueryOptions &q) {
    require(o.fingerprint, "--fingerprint");
    const Fingerprint fp = load_fingerprint(o.fingerprint, preprocess_config(o));
    const RssVector test = query_vector(o, q, fp.rp_count());
    const LocalizationCircuit lc = build_localization_circuit(test, fp);
    emit(o, "circuit.qasm", export_qasm(lc.circuit));
}

void add_common(CLI::App *cmd, CommonOptions &o, bool data = true) {
    if (data) {
        cmd->add_option("--fingerprint", o.fingerprint, "Fingerprint CSV");
        cmd->add_option("--tests", o.tests, "Test-sample CSV");
        cmd->add_option("--floor", o.floor_dbm, "RSS floor in dBm");
        cmd->add_option("--preprocess", o.preprocess, "min-shift|linear-power");
    }
    cmd->add_option("--seed", o.seed, "RNG seed");
    cmd->add_option("--out", o.out, "Output directory");
}

int exit_code_for(std::exception_ptr error) {
    try {
        std::rethrow_exception(std::move(error));
    } catch (const SampleFailure &e) {
        std::cerr << "error: " << e.what() << "\n";
        try {
            std::rethrow_exception(e.cause());
        } catch (const ResourceError &) {
            return kExitResource;
        } catch (const Error &) {
            return kExitInput;
        } catch (...) {
            return 1;
        }
    } catch (const ResourceError &e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitResource;
    } catch (const Error &e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitInput;
    } catch (const std::filesystem::filesystem_error &e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitInput;
    } catch (const std::exception &e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    }
}

} // namespace

int main(int argc, char **argv) {
    CLI::App app{"Fingerprint localization with a simulated quantum Euclidean matcher"};
    app.require_subcommand(1);

    CommonOptions o;
    QueryOptions q;

    auto *localize = app.add_subcommand("localize", "Localize one test vector");
    add_common(localize, o);
    localize->add_option("--mode", o.mode, "similarity|distance");
    localize->add_option("--shots", o.shots, "Shot count, 0 = exact probabilities");
    localize->add_option("--index", q.index, "Row of --tests to localize");
    localize->add_option("--rss", q.rss, "Comma-separated dBm readings (empty = not heard)");

    auto *eval = app.add_subcommand("evaluate", "Error CDFs for the classical and quantum matchers");
    add_common(eval, o);
    eval->add_option("--mode", o.mode, "similarity|distance");
    eval->add_option("--shots", o.shots, "Shot count, 0 = exact probabilities");

    std::string shots_list = "64,128,256,512,1024,2048,4096,8192,16384,32768";
    std::size_t seeds = 5;
    auto *sweep = app.add_subcommand("sweep", "Localization error versus shot count");
    add_common(sweep, o);
    sweep->add_option("--mode", o.mode, "similarity|distance");
    sweep->add_option("--shots-list", shots_list, "Ascending comma-separated shot counts");
    sweep->add_option("--seeds", seeds, "Seeds per shot count");

    std::string sizes = "2x2,4x4,8x8,16x16,32x32,64x64";
    std::size_t cap = kMaxQubits;
    auto *scale = app.add_subcommand("scale", "Resource counts and matcher timings");
    add_common(scale, o, false);
    scale->add_option("--sizes", sizes, "Comma-separated NxM sizes, powers of two");
    scale->add_option("--cap", cap, "Simulator qubit cap");

    TestbedSpec spec;
    auto *gen = app.add_subcommand("gen", "Generate a synthetic testbed");
    add_common(gen, o, false);
    gen->add_option("--floor", o.floor_dbm, "RSS floor in dBm");
    gen->add_option("--locations", spec.locations, "Fingerprint locations N");
    gen->add_option("--rps", spec.rps, "Reference points M");
    gen->add_option("--width", spec.width_m, "Area width in meters");
    gen->add_option("--height", spec.height_m, "Area height in meters");
    gen->add_option("--gamma", spec.path_loss_exponent, "Path-loss exponent");
    gen->add_option("--sigma", spec.shadowing_sigma_db, "Shadowing standard deviation in dB");
    gen->add_option("--test-count", spec.test_count, "Number of test samples");

    auto *qasm = app.add_subcommand("export-qasm", "Write the localization circuit as OpenQASM 2.0");
    add_common(qasm, o);
    qasm->add_option("--index", q.index, "Row of --tests to encode");
    qasm->add_option("--rss", q.rss, "Comma-separated dBm readings (empty = not heard)");

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp &e) {
        return app.exit(e);
    } catch (const CLI::CallForAllHelp &e) {
        return app.exit(e);
    } catch (const CLI::ParseError &e) {
        app.exit(e);
        return kExitInput;
    }

    try {
        if (localize->parsed()) {
            run_localize(o, q);
        } else if (eval->parsed()) {
            run_evaluate(o);
        } else if (sweep->parsed()) {
            run_sweep(o, shots_list, seeds);
        } else if (scale->parsed()) {
            run_scale(o, sizes, cap);
        } else if (gen->parsed()) {
            run_gen(o, spec);
        } else if (qasm->parsed()) {
            run_export(o, q);
        }
    } catch (...) {
        return exit_code_for(std::current_exception());
    }
    return 0;
}
