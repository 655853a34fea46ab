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
#include "gaussfactor/cli.hpp"

#include <algorithm>
#include <charconv>
#include <iostream>
#include <numbers>
#include <optional>

#include <CLI11.hpp>
#include <fmt/format.h>

#include "gaussfactor/core_math.hpp"
#include "gaussfactor/errors.hpp"
#include "gaussfactor/report.hpp"
#include "gaussfactor/scanner.hpp"

namespace gaussfactor::cli {

namespace {

struct Options {
    std::string n_text;
    std::string method = "differential";
    std::uint64_t M = 0;
    std::uint64_t j = 0;
    std::uint64_t j_min = 0;
    std::uint64_t j_max = 0;
    double theta_deg = 1.0;
    std::uint32_t slices = 256;
    std::uint32_t windings = 1;
    unsigned exponent = 2;
    double threshold = 0.7;
    std::string format = "csv";
    std::string out_path;
    std::string plot_path;
    unsigned jobs = 1;
    bool no_timestamp = false;
};

void add_target_options(CLI::App &cmd, Options &o) {
    cmd.add_option("--n", o.n_text, "Number to factor (decimal, 2 <= N < 2^64)")->required();
    cmd.add_option("--m", o.M, "Truncation number M (M+1 pulses)")->required();
    cmd.add_option("--exponent", o.exponent, "Power of m in the pulse phase")
        ->capture_default_str();
}

void add_method_options(CLI::App &cmd, Options &o) {
    cmd.add_option("--method", o.method, "Simulated measurement scheme")
        ->check(CLI::IsMember({"differential", "spatial"}))
        ->capture_default_str();
    cmd.add_option("--theta-deg", o.theta_deg,
                   "Per-pulse flip angle in degrees (differential only)")
        ->capture_default_str();
    cmd.add_option("--slices", o.slices, "Sample slices (spatial only)")->capture_default_str();
    cmd.add_option("--windings", o.windings, "Full dephasing turns across the sample (spatial only)")
        ->capture_default_str();
    cmd.add_option("--threshold", o.threshold, "Classification threshold in (0, 1)")
        ->capture_default_str();
    cmd.add_option("--format", o.format, "Output file format")
        ->check(CLI::IsMember({"csv", "json"}))
        ->capture_default_str();
    cmd.add_option("--out", o.out_path, "Write results to this file");
    cmd.add_option("--jobs", o.jobs, "Worker threads")->capture_default_str();
    cmd.add_flag("--no-timestamp", o.no_timestamp, "Omit the timestamp from JSON output");
}

ScanConfig scan_config(const Options &o, const CLI::App &cmd) {
    ScanConfig cfg;
    cfg.M = o.M;
    cfg.threshold = o.threshold;
    cfg.jobs = o.jobs;
    if (parse_method(o.method) == Method::spatial) {
        if (cmd.count("--theta-deg") > 0) {
            throw ConfigError("--theta-deg applies to --method differential only; the spatial "
                              "method fixes theta = 180deg/(M+1)");
        }
        cfg.params = SpatialParams{o.slices, o.windings};
    } else {
        if (cmd.count("--slices") > 0 || cmd.count("--windings") > 0) {
            throw ConfigError("--slices/--windings apply to --method spatial only");
        }
        cfg.params = DifferentialParams{o.theta_deg * std::numbers::pi / 180.0, true};
    }
    return cfg;
}

std::string join(const std::vector<std::uint64_t> &values) {
    std::string s;
    for (std::uint64_t v : values) {
        s += (s.empty() ? "" : ", ") + std::to_string(v);
    }
    return s.empty() ? "(none)" : s;
}

int run_scan(const Options &o, const CLI::App &cmd, std::ostream &out, std::ostream &err) {
    const FactorizationTarget target(parse_n(o.n_text), o.exponent);
    ScanConfig cfg = scan_config(o, cmd);
    cfg.j_min = o.j_min;
    cfg.j_max = o.j_max;
    const OutputFormat format = parse_format(o.format);

    ScanResult result = scan(target, cfg);
    if (!o.no_timestamp) {
        result.timestamp = utc_timestamp();
    }

    if (!o.out_path.empty()) {
        emit_results(result, format, o.out_path);
    }
    if (!o.plot_path.empty()) {
        emit_plot_data(result, o.plot_path);
    }

    out << fmt::format("N={} method={} M={} j=[{}, {}]\n", result.n, to_string(result.method()),
                       result.M, result.j_min, result.j_max);
    out << "classified factors: " << join(result.classified_factors()) << '\n';

    const auto failed = std::count_if(result.records.begin(), result.records.end(),
                                      [](const ScanRecord &r) { return r.error.has_value(); });
    for (const std::string &w : result.warnings) {
        err << "warning: " << w << '\n';
    }
    if (failed > 0) {
        err << "error: " << failed << " trial factor(s) could not be evaluated\n";
        return kExitRuntime;
    }
    return kExitOk;
}

int run_factorize(const Options &o, const CLI::App &cmd, std::ostream &out, std::ostream &err) {
    const FactorizationTarget target(parse_n(o.n_text), o.exponent);
    const ScanConfig cfg = scan_config(o, cmd);
    const OutputFormat format = parse_format(o.format);
    if (const auto *diff = std::get_if<DifferentialParams>(&cfg.params)) {
        if (auto warning = small_angle_warning(cfg.M, diff->theta)) {
            err << "warning: " << *warning << '\n';
        }
    }

    const std::vector<FactorEntry> factors = full_factorize(target, cfg);

    if (!o.out_path.empty()) {
        if (format == OutputFormat::csv) {
            write_text_file(o.out_path, factors_to_csv(factors));
        } else {
            write_text_file(o.out_path, factors_to_json(target.n(), factors).dump(2) + "\n");
        }
    }
    out << target.n() << " = " << format_factorization(factors) << '\n';
    for (const FactorEntry &f : factors) {
        if (!f.prime) {
            err << "note: " << f.value << " is composite but no divisor was classified; "
                << "try a larger --m\n";
        }
    }
    return kExitOk;
}

int run_gauss_sum(const Options &o, std::ostream &out) {
    const FactorizationTarget target(parse_n(o.n_text), o.exponent);
    const GaussSumValue a = gauss_sum_exact(target, o.j, o.M);
    out << fmt::format("N={} j={} M={} exponent={}\n", target.n(), o.j, o.M, target.exponent());
    out << fmt::format("re={:.9f} im={:.9f}\n", a.re, a.im);
    out << fmt::format("magnitude {:.6f}\n", a.magnitude);
    out << fmt::format("exact factor: {}\n", is_exact_factor(target.n(), o.j) ? "yes" : "no");
    return kExitOk;
}

} // namespace

std::uint64_t parse_n(std::string_view text) {
    std::uint64_t value = 0;
    const char *first = text.data();
    const char *last = text.data() + text.size();
    const bool digits_only =
        !text.empty() && std::all_of(text.begin(), text.end(), [](char c) {
            return c >= '0' && c <= '9';
        });
    const auto [ptr, ec] = std::from_chars(first, last, value);
    if (!digits_only || ec != std::errc{} || ptr != last) {
        throw ConfigError("--n must be a decimal integer between 2 and 18446744073709551615, got '" +
                          std::string(text) + "'");
    }
    if (value < 2) {
        throw ConfigError("--n must be >= 2, got " + std::string(text));
    }
    return value;
}

int run(const std::vector<std::string> &args, std::ostream &out, std::ostream &err) {
    CLI::App app{"Integer factorization by simulated NMR evaluation of truncated Gauss sums",
                 "gaussfactor"};
    app.require_subcommand(1, 1);

    Options o;

    auto *scan_cmd = app.add_subcommand("scan", "Evaluate the signal for a range of trial factors");
    add_target_options(*scan_cmd, o);
    add_method_options(*scan_cmd, o);
    scan_cmd->add_option("--j-min", o.j_min, "First trial factor (>= 2)")->required();
    scan_cmd->add_option("--j-max", o.j_max, "Last trial factor")->required();
    scan_cmd->add_option("--plot-out", o.plot_path, "Write two-column plot data to this file");

    auto *factor_cmd =
        app.add_subcommand("factorize", "Factor N completely by repeated signal scans");
    add_target_options(*factor_cmd, o);
    add_method_options(*factor_cmd, o);

    auto *gauss_cmd = app.add_subcommand("gauss-sum", "Evaluate the truncated Gauss sum exactly");
    add_target_options(*gauss_cmd, o);
    gauss_cmd->add_option("--j", o.j, "Trial factor (>= 1)")->required();

    try {
        std::vector<std::string> reversed(args.rbegin(), args.rend());
        app.parse(reversed);
    } catch (const CLI::CallForHelp &) {
        out << app.help();
        return kExitOk;
    } catch (const CLI::CallForAllHelp &) {
        out << app.help("", CLI::AppFormatMode::All);
        return kExitOk;
    } catch (const CLI::ParseError &e) {
        err << "error: " << e.what() << '\n';
        err << "run with --help for usage\n";
        return kExitConfig;
    }

    try {
        if (scan_cmd->parsed()) {
            return run_scan(o, *scan_cmd, out, err);
        }
        if (factor_cmd->parsed()) {
            return run_factorize(o, *factor_cmd, out, err);
        }
        return run_gauss_sum(o, out);
    } catch (const ConfigError &e) {
        err << "error: " << e.what() << '\n';
        return kExitConfig;
    } catch (const std::exception &e) {
        err << "error: " << e.what() << '\n';
        return kExitRuntime;
    }
}

int run(int argc, const char *const *argv) {
    std::vector<std::string> args(argv + 1, argv + argc);
    return run(args, std::cout, std::cerr);
}

} // namespace gaussfactor::cli
