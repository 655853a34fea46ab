// Copyright 2026 The gaussfactor Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.
#include "gaussfactor/report.hpp"

#include <cerrno>
#include <cmath>
#include <cstring>
#include <fstream>
#include <limits>
#include <stdexcept>

#include <fmt/format.h>

#include "gaussfactor/errors.hpp"

namespace gaussfactor {

using nlohmann::json;

namespace {

constexpr double kNaN = std::numeric_limits<double>::quiet_NaN();

std::string fixed9(double v) { return std::isnan(v) ? "nan" : fmt::format("{:.9f}", v); }

std::string_view boolean(bool b) { return b ? "true" : "false"; }

json number_or_null(double v) { return std::isnan(v) ? json(nullptr) : json(v); }

double number_or_nan(const json &v) { return v.is_null() ? kNaN : v.get<double>(); }

} // namespace

OutputFormat parse_format(std::string_view name) {
    if (name == "csv") {
        return OutputFormat::csv;
    }
    if (name == "json") {
        return OutputFormat::json;
    }
    throw ConfigError("unknown output format '" + std::string(name) + "' (expected csv or json)");
}

std::string to_csv(const ScanResult &result) {
    std::string out = "j,normalized,classified,arithmetic_check\n";
    for (const ScanRecord &r : result.records) {
        out += fmt::format("{},{},{},{}\n", r.j, fixed9(r.normalized), boolean(r.classified),
                           boolean(r.arithmetic_check));
    }
    return out;
}

json to_json(const ScanResult &result) {
    json params;
    if (const auto *diff = std::get_if<DifferentialParams>(&result.params)) {
        params = {{"theta_rad", diff->theta}, {"normalize", diff->normalize}};
    } else {
        const auto &sp = std::get<SpatialParams>(result.params);
        params = {{"n_slices", sp.n_slices}, {"windings", sp.windings}};
    }

    json records = json::array();
    for (const ScanRecord &r : result.records) {
        json rec = {{"j", r.j},
                    {"normalized", number_or_null(r.normalized)},
                    {"raw_re", number_or_null(r.raw_transverse.real())},
                    {"raw_im", number_or_null(r.raw_transverse.imag())},
                    {"classified", r.classified},
                    {"arithmetic_check", r.arithmetic_check}};
        if (r.error) {
            rec["error"] = *r.error;
        }
        records.push_back(std::move(rec));
    }

    json doc = {{"N", result.n},
                {"exponent", result.exponent},
                {"method", to_string(result.method())},
                {"M", result.M},
                {"threshold", result.threshold},
                {"j_min", result.j_min},
                {"j_max", result.j_max},
                {"params", params},
                {"warnings", result.warnings},
                {"records", records}};
    if (!result.timestamp.empty()) {
        doc["timestamp"] = result.timestamp;
    }
    return doc;
}

ScanResult scan_result_from_json(const json &doc) {
    ScanResult result;
    result.n = doc.at("N").get<std::uint64_t>();
    result.exponent = doc.at("exponent").get<unsigned>();
    result.M = doc.at("M").get<std::uint64_t>();
    result.threshold = doc.at("threshold").get<double>();
    result.j_min = doc.at("j_min").get<std::uint64_t>();
    result.j_max = doc.at("j_max").get<std::uint64_t>();
    const json &params = doc.at("params");
    if (parse_method(doc.at("method").get<std::string>()) == Method::spatial) {
        result.params = SpatialParams{params.at("n_slices").get<std::uint32_t>(),
                                      params.at("windings").get<std::uint32_t>()};
    } else {
        result.params = DifferentialParams{params.at("theta_rad").get<double>(),
                                           params.at("normalize").get<bool>()};
    }
    result.timestamp = doc.value("timestamp", std::string{});
    result.warnings = doc.at("warnings").get<std::vector<std::string>>();
    for (const json &rec : doc.at("records")) {
        ScanRecord r;
        r.j = rec.at("j").get<std::uint64_t>();
        r.normalized = number_or_nan(rec.at("normalized"));
        r.raw_transverse = {number_or_nan(rec.at("raw_re")), number_or_nan(rec.at("raw_im"))};
        r.classified = rec.at("classified").get<bool>();
        r.arithmetic_check = rec.at("arithmetic_check").get<bool>();
        if (rec.contains("error")) {
            r.error = rec.at("error").get<std::string>();
        }
        result.records.push_back(std::move(r));
    }
    return result;
}

std::string plot_data(const ScanResult &result) {
    std::string out =
        fmt::format("# N={} method={} M={}\n", result.n, to_string(result.method()), result.M);
    out += "# j normalized\n";
    for (const ScanRecord &r : result.records) {
        out += fmt::format("{} {}\n", r.j, fixed9(r.normalized));
    }
    return out;
}

void write_text_file(const std::filesystem::path &path, std::string_view contents) {
    std::ofstream file(path, std::ios::binary | std::ios::trunc);
    if (!file) {
        throw std::runtime_error("cannot open '" + path.string() +
                                 "' for writing: " + std::strerror(errno));
    }
    file.write(contents.data(), static_cast<std::streamsize>(contents.size()));
    file.flush();
    if (!file) {
        throw std::runtime_error("failed writing '" + path.string() +
                                 "': " + std::strerror(errno));
    }
}

void emit_results(const ScanResult &result, OutputFormat format,
                  const std::filesystem::path &path) {
    if (format == OutputFormat::csv) {
        write_text_file(path, to_csv(result));
    } else {
        write_text_file(path, to_json(result).dump(2) + "\n");
    }
}

void emit_plot_data(const ScanResult &result, const std::filesystem::path &path) {
    write_text_file(path, plot_data(result));
}

std::string factors_to_csv(const std::vector<FactorEntry> &factors) {
    std::string out = "factor,multiplicity,prime\n";
    for (const FactorEntry &f : factors) {
        out += fmt::format("{},{},{}\n", f.value, f.multiplicity, boolean(f.prime));
    }
    return out;
}

json factors_to_json(std::uint64_t n, const std::vector<FactorEntry> &factors) {
    json list = json::array();
    for (const FactorEntry &f : factors) {
        list.push_back({{"factor", f.value}, {"multiplicity", f.multiplicity}, {"prime", f.prime}});
    }
    return {{"N", n}, {"factors", list}};
}

} // namespace gaussfactor
