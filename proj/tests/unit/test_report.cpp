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
#include <gtest/gtest.h>

#include <cmath>
#include <filesystem>
#include <fstream>
#include <limits>
#include <sstream>

#include "gaussfactor/errors.hpp"
#include "gaussfactor/report.hpp"

namespace gaussfactor {
namespace {

std::string slurp(const std::filesystem::path &p) {
    std::ifstream in(p, std::ios::binary);
    std::stringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

ScanResult synthetic() {
    ScanResult r;
    r.n = 16637;
    r.params = SpatialParams{256, 1};
    r.M = 12;
    r.threshold = 0.7;
    r.j_min = 126;
    r.j_max = 128;
    r.timestamp = "2026-10-19T00:00:00Z";
    r.warnings = {"example warning"};
    r.records = {
        {126, 0.0911755669807312, {0.05, -0.0751}, false, false, std::nullopt},
        {127, 1.0, {1.0, -2.4e-16}, true, true, std::nullopt},
        {128, std::numeric_limits<double>::quiet_NaN(),
         {std::numeric_limits<double>::quiet_NaN(), std::numeric_limits<double>::quiet_NaN()},
         false, false, std::string("boom")},
    };
    return r;
}

TEST(CsvTest, ExactLayout) {
    EXPECT_EQ(to_csv(synthetic()), "j,normalized,classified,arithmetic_check\n"
                                   "126,0.091175567,false,false\n"
                                   "127,1.000000000,true,true\n"
                                   "128,nan,false,false\n");
}

TEST(JsonTest, RoundTrip) {
    const ScanResult r = synthetic();
    const auto text = to_json(r).dump(2);
    EXPECT_TRUE(scan_result_from_json(nlohmann::json::parse(text)) == r);

    ScanResult d = synthetic();
    d.params = DifferentialParams{0.0174532925199432957, true};
    d.timestamp.clear();
    const auto doc = to_json(d);
    EXPECT_FALSE(doc.contains("timestamp"));
    EXPECT_EQ(doc.at("method"), "differential");
    EXPECT_TRUE(scan_result_from_json(doc) == d);
}

TEST(JsonTest, CarriesMetadata) {
    const auto doc = to_json(synthetic());
    EXPECT_EQ(doc.at("N"), 16637);
    EXPECT_EQ(doc.at("M"), 12);
    EXPECT_EQ(doc.at("method"), "spatial");
    EXPECT_EQ(doc.at("params").at("n_slices"), 256);
    EXPECT_EQ(doc.at("records").size(), 3U);
    EXPECT_TRUE(doc.at("records")[2].at("normalized").is_null());
    EXPECT_EQ(doc.at("records")[2].at("error"), "boom");
}

TEST(PlotDataTest, HeaderAndRows) {
    const std::string text = plot_data(synthetic());
    EXPECT_EQ(text.rfind("# N=16637 method=spatial M=12\n", 0), 0U);
    EXPECT_NE(text.find("\n127 1.000000000\n"), std::string::npos);
    EXPECT_EQ(text.back(), '\n');
}

TEST(EmitTest, WritesFilesWithTrailingNewline) {
    const auto dir = std::filesystem::temp_directory_path() / "gaussfactor_report_test";
    std::filesystem::create_directories(dir);
    const ScanResult r = synthetic();
    emit_results(r, OutputFormat::csv, dir / "r.csv");
    emit_results(r, OutputFormat::json, dir / "r.json");
    emit_plot_data(r, dir / "r.dat");
    EXPECT_EQ(slurp(dir / "r.csv"), to_csv(r));
    const std::string json_text = slurp(dir / "r.json");
    EXPECT_EQ(json_text.back(), '\n');
    EXPECT_TRUE(scan_result_from_json(nlohmann::json::parse(json_text)) == r);
    EXPECT_EQ(slurp(dir / "r.dat"), plot_data(r));
    std::filesystem::remove_all(dir);
}

TEST(EmitTest, ReportsUnwritablePath) {
    try {
        emit_results(synthetic(), OutputFormat::csv, "/nonexistent-dir/sub/r.csv");
        FAIL() << "expected an I/O error";
    } catch (const std::runtime_error &e) {
        EXPECT_NE(std::string(e.what()).find("/nonexistent-dir/sub/r.csv"), std::string::npos);
    }
}

TEST(FormatTest, Parse) {
    EXPECT_EQ(parse_format("csv"), OutputFormat::csv);
    EXPECT_EQ(parse_format("json"), OutputFormat::json);
    EXPECT_THROW((void)parse_format("xml"), ConfigError);
}

TEST(FactorOutputTest, CsvAndJson) {
    const std::vector<FactorEntry> f{{2, 3, true}, {15, 1, false}};
    EXPECT_EQ(factors_to_csv(f), "factor,multiplicity,prime\n2,3,true\n15,1,false\n");
    const auto doc = factors_to_json(120, f);
    EXPECT_EQ(doc.at("N"), 120);
    EXPECT_EQ(doc.at("factors")[0].at("multiplicity"), 3);
}

} // namespace
} // namespace gaussfactor
