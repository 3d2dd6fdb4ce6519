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

#include "qfp/harness/dataset.hpp"

#include <charconv>
#include <cmath>
#include <cstdio>
#include <fstream>
#include <optional>
#include <istream>
#include <limits>
#include <ostream>
#include <string>
#include <string_view>

#include "qfp/errors.hpp"

namespace qfp::harness {

namespace {

struct CsvLine {
    std::size_t line;
    std::vector<std::string> fields;
};

std::vector<std::string> split(const std::string &s) {
    std::vector<std::string> out;
    std::size_t start = 0;
    while (true) {
        const std::size_t comma = s.find(',', start);
        if (comma == std::string::npos) {
            out.push_back(s.substr(start));
            return out;
        }
        out.push_back(s.substr(start, comma - start));
        start = comma + 1;
    }
}

std::string trim(std::string s) {
    const auto first = s.find_first_not_of(" \t\r");
    if (first == std::string::npos) {
        return "";
    }
    const auto last = s.find_last_not_of(" \t\r");
    return s.substr(first, last - first + 1);
}

// Header plus non-blank data lines. Throws SchemaError on an empty file.
std::pair<CsvLine, std::vector<CsvLine>> read_csv(std::istream &in) {
    std::string raw;
    std::size_t line = 0;
    std::optional<CsvLine> header;
    std::vector<CsvLine> rows;
    while (std::getline(in, raw)) {
        ++line;
        const std::string text = trim(raw);
        if (text.empty()) {
            continue;
        }
        auto fields = split(text);
        for (auto &f : fields) {
            f = trim(std::move(f));
        }
        if (!header) {
            header = CsvLine{line, std::move(fields)};
        } else {
            rows.push_back({line, std::move(fields)});
        }
    }
    if (!header) {
        throw SchemaError("file is empty");
    }
    if (rows.empty()) {
        throw SchemaError("file has a header but no data rows");
    }
    return {std::move(*header), std::move(rows)};
}

// Checks the fixed leading columns and returns the RP count.
std::size_t check_header(const CsvLine &header, const std::vector<std::string> &leading) {
    const auto &f = header.fields;
    if (f.size() <= leading.size()) {
        throw SchemaError("header has no rss_ columns");
    }
    for (std::size_t j = 0; j < leading.size(); ++j) {
        if (f[j] != leading[j]) {
            throw SchemaError("header column " + std::to_string(j + 1) + " is '" + f[j] +
                              "', expected '" + leading[j] + "'");
        }
    }
    const std::size_t rps = f.size() - leading.size();
    for (std::size_t j = 0; j < rps; ++j) {
        const std::string want = "rss_" + std::to_string(j);
        if (f[leading.size() + j] != want) {
            throw SchemaError("header column '" + f[leading.size() + j] + "', expected '" +
                              want + "'");
        }
    }
    return rps;
}

double parse_number(const std::string &field, std::size_t line, std::string_view column) {
    double v = 0.0;
    const char *begin = field.data();
    const char *end = field.data() + field.size();
    const auto [ptr, ec] = std::from_chars(begin, end, v);
    if (field.empty() || ec != std::errc() || ptr != end || !std::isfinite(v)) {
        throw ParseError("invalid " + std::string(column) + " value '" + field + "'", line);
    }
    return v;
}

std::vector<double> parse_rss(const CsvLine &row, std::size_t first) {
    std::vector<double> out;
    out.reserve(row.fields.size() - first);
    for (std::size_t j = first; j < row.fields.size(); ++j) {
        if (row.fields[j].empty()) {
            out.push_back(std::numeric_limits<double>::quiet_NaN());
        } else {
            out.push_back(parse_number(row.fields[j], row.line,
                                       "rss_" + std::to_string(j - first)));
        }
    }
    return out;
}

void check_width(const CsvLine &row, std::size_t expected) {
    if (row.fields.size() != expected) {
        throw ParseError("expected " + std::to_string(expected) + " fields, found " +
                             std::to_string(row.fields.size()),
                         row.line);
    }
}

std::string format_number(double v) {
    if (std::isnan(v)) {
        return "";
    }
    char buf[40];
    std::snprintf(buf, sizeof buf, "%.10g", v);
    return buf;
}

void write_rss_header(std::ostream &out, std::size_t rps) {
    for (std::size_t j = 0; j < rps; ++j) {
        out << ",rss_" << j;
    }
    out << '\n';
}

// Preprocess + normalize; returns nullopt if nothing usable remains.
std::optional<RssVector> prepare_vector(const std::vector<double> &dbm,
                                        const PreprocessConfig &config) {
    try {
        return normalize(preprocess_rss(RssVector{dbm, RssStage::Raw}, config));
    } catch (const EmptyMeasurement &) {
        return std::nullopt;
    } catch (const ZeroNorm &) {
        return std::nullopt;
    }
}

std::string describe_rows(const std::vector<std::size_t> &rows) {
    std::string s;
    for (std::size_t k = 0; k < rows.size(); ++k) {
        s += (k == 0 ? "" : ", ") + std::to_string(rows[k]);
    }
    return s;
}

std::ifstream open(const std::filesystem::path &path) {
    std::ifstream in(path);
    if (!in) {
        throw SchemaError("cannot open '" + path.string() + "'");
    }
    return in;
}

} // namespace

std::vector<RawFingerprintRow> read_fingerprint_csv(std::istream &in) {
    const auto [header, rows] = read_csv(in);
    const std::size_t rps = check_header(header, {"loc_id", "x_m", "y_m"});
    std::vector<RawFingerprintRow> out;
    out.reserve(rows.size());
    for (const auto &row : rows) {
        check_width(row, rps + 3);
        LocationId id = 0;
        const auto &f = row.fields[0];
        const auto [ptr, ec] = std::from_chars(f.data(), f.data() + f.size(), id);
        if (f.empty() || ec != std::errc() || ptr != f.data() + f.size()) {
            throw ParseError("invalid loc_id '" + f + "'", row.line);
        }
        out.push_back({id, parse_number(row.fields[1], row.line, "x_m"),
                       parse_number(row.fields[2], row.line, "y_m"), parse_rss(row, 3),
                       row.line});
    }
    return out;
}

std::vector<RawTestSample> read_tests_csv(std::istream &in) {
    const auto [header, rows] = read_csv(in);
    const std::size_t rps = check_header(header, {"x_m", "y_m"});
    std::vector<RawTestSample> out;
    out.reserve(rows.size());
    for (const auto &row : rows) {
        check_width(row, rps + 2);
        out.push_back({parse_number(row.fields[0], row.line, "x_m"),
                       parse_number(row.fields[1], row.line, "y_m"), parse_rss(row, 2),
                       row.line});
    }
    return out;
}

void write_fingerprint_csv(std::ostream &out, const std::vector<RawFingerprintRow> &rows) {
    out << "loc_id,x_m,y_m";
    write_rss_header(out, rows.empty() ? 0 : rows.front().rss_dbm.size());
    for (const auto &r : rows) {
        out << r.location << ',' << format_number(r.x_m) << ',' << format_number(r.y_m);
        for (double v : r.rss_dbm) {
            out << ',' << format_number(v);
        }
        out << '\n';
    }
}

void write_tests_csv(std::ostream &out, const std::vector<RawTestSample> &rows) {
    out << "x_m,y_m";
    write_rss_header(out, rows.empty() ? 0 : rows.front().rss_dbm.size());
    for (const auto &r : rows) {
        out << format_number(r.x_m) << ',' << format_number(r.y_m);
        for (double v : r.rss_dbm) {
            out << ',' << format_number(v);
        }
        out << '\n';
    }
}

Fingerprint prepare_fingerprint(const std::vector<RawFingerprintRow> &rows,
                                const PreprocessConfig &config) {
    if (rows.empty()) {
        throw SchemaError("fingerprint has no rows");
    }
    std::vector<FingerprintRow> out;
    std::vector<std::size_t> rejected;
    for (std::size_t i = 0; i < rows.size(); ++i) {
        const auto &r = rows[i];
        if (r.rss_dbm.size() != rows.front().rss_dbm.size()) {
            throw SchemaError("fingerprint rows disagree on the RP count");
        }
        auto v = prepare_vector(r.rss_dbm, config);
        if (!v) {
            rejected.push_back(r.line != 0 ? r.line : i + 2);
            continue;
        }
        out.push_back({r.location, r.x_m, r.y_m, std::move(*v)});
    }
    if (!rejected.empty()) {
        throw SchemaError("fingerprint rows without a usable RSS reading at lines " +
                          describe_rows(rejected));
    }
    return Fingerprint(std::move(out));
}

std::vector<TestSample> prepare_tests(const std::vector<RawTestSample> &rows,
                                      const PreprocessConfig &config,
                                      std::size_t expected_rps) {
    if (rows.empty()) {
        throw SchemaError("test set has no rows");
    }
    const std::size_t rps = rows.front().rss_dbm.size();
    if (expected_rps != 0 && rps != expected_rps) {
        throw SchemaError("test set has " + std::to_string(rps) +
                          " RPs but the fingerprint has " + std::to_string(expected_rps));
    }
    std::vector<TestSample> out;
    std::vector<std::size_t> rejected;
    for (std::size_t i = 0; i < rows.size(); ++i) {
        const auto &r = rows[i];
        if (r.rss_dbm.size() != rps) {
            throw SchemaError("test rows disagree on the RP count");
        }
        auto v = prepare_vector(r.rss_dbm, config);
        if (!v) {
            rejected.push_back(r.line != 0 ? r.line : i + 2);
            continue;
        }
        out.push_back({r.x_m, r.y_m, std::move(*v)});
    }
    if (!rejected.empty()) {
        throw SchemaError("test rows without a usable RSS reading at lines " +
                          describe_rows(rejected));
    }
    return out;
}

Fingerprint load_fingerprint(const std::filesystem::path &path,
                             const PreprocessConfig &config) {
    auto in = open(path);
    return prepare_fingerprint(read_fingerprint_csv(in), config);
}

std::vector<TestSample> load_tests(const std::filesystem::path &path,
                                   const PreprocessConfig &config, std::size_t expected_rps) {
    auto in = open(path);
    return prepare_tests(read_tests_csv(in), config, expected_rps);
}

} // namespace qfp::harness
