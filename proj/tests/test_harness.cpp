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

#include <cmath>
#include <filesystem>
#include <fstream>
#include <iterator>
#include <limits>
#include <sstream>
#include <string>
#include <utility>
#include <vector>

#include <catch_amalgamated.hpp>

#include "oracles.hpp"
#include "qfp/errors.hpp"
#include "qfp/harness/dataset.hpp"
#include "qfp/harness/evaluation.hpp"
#include "qfp/harness/report.hpp"
#include "qfp/harness/scaling.hpp"
#include "qfp/harness/testbed.hpp"

using namespace qfp;
using namespace qfp::harness;
using Catch::Matchers::ContainsSubstring;
using Catch::Matchers::WithinAbs;

namespace {

constexpr double kNaN = std::numeric_limits<double>::quiet_NaN();

std::size_t parse_error_line(const std::string &text, bool fingerprint) {
    std::istringstream in(text);
    try {
        if (fingerprint) {
            (void)read_fingerprint_csv(in);
        } else {
            (void)read_tests_csv(in);
        }
    } catch (const ParseError &e) {
        return e.line();
    }
    return 0;
}

Dataset default_dataset(std::uint64_t seed = 1, std::size_t tests = 100) {
    TestbedSpec spec;
    spec.seed = seed;
    spec.test_count = tests;
    return prepare_dataset(generate_synthetic_testbed(spec), {});
}

std::string slurp(const std::filesystem::path &p) {
    std::ifstream in(p, std::ios::binary);
    return {std::istreambuf_iterator<char>(in), std::istreambuf_iterator<char>()};
}

} // namespace

TEST_CASE("fingerprint CSV round trip", "[harness][csv]") {
    const std::vector<RawFingerprintRow> rows{{3, 1.5, 2.0, {-50.0, kNaN, -71.25}},
                                              {8, 0.0, -4.0, {-60.0, -61.0, -62.0}}};
    std::stringstream buf;
    write_fingerprint_csv(buf, rows);
    CHECK(buf.str().rfind("loc_id,x_m,y_m,rss_0,rss_1,rss_2\n", 0) == 0);
    const auto back = read_fingerprint_csv(buf);
    REQUIRE(back.size() == 2);
    CHECK(back[0].location == 3);
    CHECK(back[0].rss_dbm[0] == -50.0);
    CHECK(std::isnan(back[0].rss_dbm[1]));
    CHECK(back[0].rss_dbm[2] == -71.25);
    CHECK(back[1].y_m == -4.0);
    CHECK(back[0].line == 2);
    CHECK(back[1].line == 3);
}

TEST_CASE("tests CSV round trip", "[harness][csv]") {
    const std::vector<RawTestSample> rows{{10.0, 20.0, {-80.0, kNaN}}};
    std::stringstream buf;
    write_tests_csv(buf, rows);
    const auto back = read_tests_csv(buf);
    REQUIRE(back.size() == 1);
    CHECK(back[0].x_m == 10.0);
    CHECK(std::isnan(back[0].rss_dbm[1]));
}

TEST_CASE("CSV schema and parse errors", "[harness][csv]") {
    std::istringstream empty("");
    CHECK_THROWS_AS(read_fingerprint_csv(empty), SchemaError);
    std::istringstream header_only("loc_id,x_m,y_m,rss_0\n");
    CHECK_THROWS_AS(read_fingerprint_csv(header_only), SchemaError);
    std::istringstream bad_header("id,x_m,y_m,rss_0\n1,0,0,-50\n");
    CHECK_THROWS_AS(read_fingerprint_csv(bad_header), SchemaError);
    std::istringstream no_rss("x_m,y_m\n1,2\n");
    CHECK_THROWS_AS(read_tests_csv(no_rss), SchemaError);

    const std::string fp_head = "loc_id,x_m,y_m,rss_0,rss_1\n";
    CHECK(parse_error_line(fp_head + "0,0,0,-50,-60\n1,0,0,abc,-60\n", true) == 3);
    CHECK(parse_error_line(fp_head + "0,0,0,-50\n", true) == 2);
    CHECK(parse_error_line(fp_head + "0,0,0,-50,-60\n0,0,0,-50,-60\nx,0,0,-50,-60\n", true) == 4);
    CHECK(parse_error_line("x_m,y_m,rss_0\n1,2,-50,7\n", false) == 2);
}

TEST_CASE("dataset preparation checks", "[harness][csv]") {
    const std::vector<RawFingerprintRow> fp_rows{{0, 0, 0, {-50.0, -60.0}},
                                                 {1, 0, 0, {kNaN, kNaN}},
                                                 {2, 0, 0, {kNaN, kNaN}}};
    try {
        (void)prepare_fingerprint(fp_rows, {});
        FAIL("expected SchemaError");
    } catch (const SchemaError &e) {
        // Unset line numbers are reported as row positions.
        CHECK_THAT(std::string(e.what()), ContainsSubstring("without a usable RSS reading"));
    }
    CHECK_THROWS_AS(prepare_fingerprint({}, {}), SchemaError);

    const std::vector<RawTestSample> tests{{0, 0, {-50.0, -60.0, -70.0}}};
    CHECK_THROWS_AS(prepare_tests(tests, {}, 2), SchemaError);
    CHECK(prepare_tests(tests, {}, 3).size() == 1);

    const auto prepared = prepare_fingerprint({{4, 1, 2, {-50.0, kNaN}}}, {});
    CHECK(prepared.row(0).phi.stage == RssStage::Normalized);
    CHECK_THAT(prepared.row(0).phi.values[0], WithinAbs(1.0, 1e-15));
    CHECK(prepared.row(0).phi.values[1] == 0.0);

    CHECK_THROWS_AS(load_fingerprint("/nonexistent/fingerprint.csv"), SchemaError);
}

TEST_CASE("synthetic testbed", "[harness][testbed]") {
    TestbedSpec spec;
    CHECK(grid_shape(16) == std::pair<std::size_t, std::size_t>{4, 4});
    CHECK(grid_shape(8).first * grid_shape(8).second == 8);
    const auto grid = grid_points(spec);
    REQUIRE(grid.size() == 16);
    CHECK(grid[0].x_m == Catch::Approx(56.25));
    CHECK_THAT(grid_diagonal_spacing(spec), WithinAbs(112.5 * std::sqrt(2.0), 1e-9));
    const auto rps = ring_rps(spec);
    REQUIRE(rps.size() == 8);
    CHECK_THAT(std::hypot(rps[3].x_m - 225.0, rps[3].y_m - 225.0), WithinAbs(150.0, 1e-9));
    CHECK(mean_rss_dbm(spec, 0.5) == -40.0);
    CHECK_THAT(mean_rss_dbm(spec, 10.0), WithinAbs(-70.0, 1e-12));

    const auto a = generate_synthetic_testbed(spec);
    const auto b = generate_synthetic_testbed(spec);
    REQUIRE(a.tests.size() == 100);
    REQUIRE(a.fingerprint.size() == 16);
    for (std::size_t i = 0; i < a.tests.size(); ++i) {
        CHECK(a.tests[i].x_m == b.tests[i].x_m);
        CHECK(a.tests[i].rss_dbm == b.tests[i].rss_dbm);
    }
    spec.seed = 2;
    CHECK(generate_synthetic_testbed(spec).tests[0].x_m != a.tests[0].x_m);

    TestbedSpec bad;
    bad.locations = 1;
    CHECK_THROWS_AS(validate(bad), ContractViolation);
    bad = {};
    bad.rp_positions = {{0, 0}};
    CHECK_THROWS_AS(validate(bad), ContractViolation);
}

TEST_CASE("noise-free readings at grid points match exactly", "[harness][testbed]") {
    TestbedSpec spec;
    spec.shadowing_sigma_db = 0.0;
    const auto bed = generate_synthetic_testbed(spec);
    std::vector<RawTestSample> at_grid;
    for (const auto &row : bed.fingerprint) {
        at_grid.push_back({row.x_m, row.y_m, row.rss_dbm});
    }
    const Dataset d = prepare_dataset({bed.fingerprint, at_grid, bed.rp_positions}, {});
    const EvalReport r = evaluate(d.fingerprint, d.tests);
    CHECK(r.classical.median_m == 0.0);
    CHECK(r.quantum.median_m == 0.0);
}

TEST_CASE("classical error stays below the grid diagonal", "[harness][testbed]") {
    const Dataset d = default_dataset();
    const EvalReport r = evaluate(d.fingerprint, d.tests);
    CHECK(r.classical.median_m < grid_diagonal_spacing(TestbedSpec{}));
}

TEST_CASE("exact evaluation agrees with the classical baseline", "[harness][eval]") {
    for (std::uint64_t seed : {1U, 2U, 3U}) {
        const Dataset d = default_dataset(seed);
        const EvalReport r = evaluate(d.fingerprint, d.tests);
        CHECK(r.untied_agreement_rate == 1.0);
        CHECK(r.records.size() == 100);
        for (std::size_t i = 0; i < r.records.size(); ++i) {
            CHECK(r.records[i].index == i);
        }
    }
}

TEST_CASE("single-sample evaluation", "[harness][eval]") {
    const Dataset d = default_dataset();
    const auto &row = d.fingerprint.row(5);
    const std::vector<TestSample> one{{row.x_m, row.y_m, row.phi}};
    const EvalReport r = evaluate(d.fingerprint, one);
    CHECK(r.quantum.median_m == 0.0);
    CHECK(r.classical.median_m == 0.0);
    REQUIRE(r.quantum_cdf.size() == 1);
    CHECK(r.quantum_cdf[0].error_m == 0.0);
    CHECK(r.quantum_cdf[0].fraction == 1.0);
    CHECK_THROWS_AS(evaluate(d.fingerprint, std::vector<TestSample>{}), ContractViolation);
}

TEST_CASE("error CDF", "[harness][eval]") {
    const std::vector<double> errors{3.0, 1.0, 2.0, 1.0};
    const auto cdf = error_cdf(errors);
    REQUIRE(cdf.size() == 3);
    CHECK(cdf[0].error_m == 1.0);
    CHECK(cdf[0].fraction == 0.5);
    CHECK(cdf[1].fraction == 0.75);
    CHECK(cdf[2].error_m == 3.0);
    CHECK(cdf[2].fraction == 1.0);
    CHECK(median({4.0, 1.0, 3.0, 2.0}) == 2.5);
    CHECK_THROWS_AS(median({}), ContractViolation);

    const Dataset d = default_dataset();
    const EvalReport r = evaluate(d.fingerprint, d.tests, {Mode::Similarity, 256, 9});
    for (const auto *curve : {&r.classical_cdf, &r.quantum_cdf}) {
        REQUIRE_FALSE(curve->empty());
        CHECK(curve->back().fraction == 1.0);
        for (std::size_t k = 1; k < curve->size(); ++k) {
            CHECK((*curve)[k].error_m > (*curve)[k - 1].error_m);
            CHECK((*curve)[k].fraction > (*curve)[k - 1].fraction);
        }
    }
}

TEST_CASE("sample failures carry the sample index", "[harness][eval]") {
    const Dataset d = default_dataset(1, 4);
    std::vector<TestSample> tests = d.tests;
    tests[2].rss = {{1.0, 0.0}, RssStage::Normalized};
    try {
        (void)evaluate(d.fingerprint, tests);
        FAIL("expected SampleFailure");
    } catch (const SampleFailure &e) {
        CHECK(e.sample_index() == 2);
        CHECK_THROWS_AS(std::rethrow_exception(e.cause()), ContractViolation);
    }
}

TEST_CASE("shots sweep", "[harness][sweep]") {
    const Dataset d = default_dataset(1, 30);
    const std::vector<std::uint64_t> shots{1, 32768};
    const auto rows = shots_sweep(d.fingerprint, d.tests, shots, {Mode::Similarity, 3});
    REQUIRE(rows.size() == 3);
    CHECK(rows[0].shots == 1);
    CHECK(rows[0].agreement_rate < rows[1].agreement_rate - 0.2);
    CHECK(rows[2].shots == 0);
    CHECK(rows[2].agreement_rate == 1.0);
    CHECK(rows[2].no_estimate_rate == 0.0);
    CHECK(rows[1].postselection_rate > 0.5);

    const std::vector<std::uint64_t> unordered{64, 32};
    CHECK_THROWS_AS(shots_sweep(d.fingerprint, d.tests, unordered), ContractViolation);
    const std::vector<std::uint64_t> zero{0};
    CHECK_THROWS_AS(shots_sweep(d.fingerprint, d.tests, zero), ContractViolation);

    // A single shot often lands on the other ancilla value in distance mode.
    const auto distance = shots_sweep(d.fingerprint, d.tests, std::vector<std::uint64_t>{1},
                                      {Mode::Distance, 3, 0, kDefaultTieTolerance, false});
    REQUIRE(distance.size() == 1);
    CHECK(distance[0].no_estimate_rate > 0.3);
}

TEST_CASE("scaling report", "[harness][scaling]") {
    const std::vector<std::pair<std::size_t, std::size_t>> sizes{{2, 4}, {16, 8}};
    ScalingOptions opts;
    opts.min_batch_seconds = 0.001;
    opts.batches = 2;
    const auto rows = scaling_report(sizes, opts);
    REQUIRE(rows.size() == 2);
    CHECK(rows[0].qubits == 5);
    CHECK(rows[1].qubits == 12);
    for (const auto &r : rows) {
        CHECK_FALSE(r.skipped);
        CHECK(r.simulator_seconds.has_value());
        CHECK(r.gate_count == localization_gate_count(r.locations, r.rps));
        CHECK(r.classical_seconds > 0.0);
    }

    opts.simulator_qubit_cap = 4;
    const auto capped = scaling_report(sizes, opts);
    CHECK(capped[0].skipped);
    CHECK_FALSE(capped[0].simulator_seconds.has_value());

    const std::vector<std::pair<std::size_t, std::size_t>> bad{{3, 4}};
    CHECK_THROWS_AS(scaling_report(bad, opts), ContractViolation);

    const auto j = scaling_json(rows);
    CHECK(j.at("simulator_time_note").get<std::string>() == kSimulatorTimeNote);
    CHECK(j.at("rows").size() == 2);
}

TEST_CASE("linear fit", "[harness][scaling]") {
    const std::vector<double> xs{1, 2, 3, 4};
    const std::vector<double> ys{3, 5, 7, 9};
    const LinearFit f = fit_linear(xs, ys);
    CHECK_THAT(f.slope, WithinAbs(2.0, 1e-12));
    CHECK_THAT(f.intercept, WithinAbs(1.0, 1e-12));
    CHECK_THAT(f.r_squared, WithinAbs(1.0, 1e-12));
    const std::vector<double> one{1};
    CHECK_THROWS_AS(fit_linear(one, one), ContractViolation);
}

TEST_CASE("reports are deterministic", "[harness][report]") {
    const Dataset d = default_dataset(4, 40);
    const LocalizationConfig config{Mode::Similarity, 512, 11};
    const auto base = std::filesystem::temp_directory_path() / "qfp_report_test";
    std::filesystem::remove_all(base);
    write_eval_report(base / "a", evaluate(d.fingerprint, d.tests, config));
    write_eval_report(base / "b", evaluate(d.fingerprint, d.tests, config));
    for (const char *name : {"records.csv", "cdf.csv", "summary.json"}) {
        const std::string a = slurp(base / "a" / name);
        CHECK_FALSE(a.empty());
        CHECK(a == slurp(base / "b" / name));
    }
    CHECK(slurp(base / "a" / "records.csv")
              .rfind("index,true_x_m,true_y_m,classical_estimate,classical_error_m,"
                     "quantum_estimate,quantum_error_m,tie\n",
                     0) == 0);
    const auto summary = nlohmann::json::parse(slurp(base / "a" / "summary.json"));
    CHECK(summary.at("samples") == 40);
    CHECK(summary.at("mode") == "similarity");
    std::filesystem::remove_all(base);
}
