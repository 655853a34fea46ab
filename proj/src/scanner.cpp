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
#include "gaussfactor/scanner.hpp"

#include <algorithm>
#include <atomic>
#include <chrono>
#include <cmath>
#include <ctime>
#include <limits>
#include <map>
#include <thread>

#include "gaussfactor/errors.hpp"

namespace gaussfactor {

std::string_view to_string(Method method) noexcept {
    return method == Method::spatial ? "spatial" : "differential";
}

Method parse_method(std::string_view name) {
    if (name == "differential") {
        return Method::differential;
    }
    if (name == "spatial") {
        return Method::spatial;
    }
    throw ConfigError("unknown method '" + std::string(name) +
                      "' (expected differential or spatial)");
}

void validate(const ScanConfig &cfg) {
    if (cfg.j_min < 2) {
        throw ConfigError("j_min must be >= 2");
    }
    if (cfg.j_min > cfg.j_max) {
        throw ConfigError("j_min=" + std::to_string(cfg.j_min) + " exceeds j_max=" +
                          std::to_string(cfg.j_max));
    }
    if (!(cfg.threshold > 0.0 && cfg.threshold < 1.0)) {
        throw ConfigError("threshold must lie strictly between 0 and 1");
    }
    if (cfg.jobs == 0) {
        throw ConfigError("jobs must be >= 1");
    }
    if (cfg.M >= cfg.max_terms) {
        throw ConfigError("truncation M=" + std::to_string(cfg.M) + " exceeds the sequence cap of " +
                          std::to_string(cfg.max_terms) + " terms");
    }
    std::visit([](const auto &p) { validate(p); }, cfg.params);
}

std::vector<std::uint64_t> ScanResult::classified_factors() const {
    std::vector<std::uint64_t> out;
    for (const ScanRecord &r : records) {
        if (r.classified) {
            out.push_back(r.j);
        }
    }
    return out;
}

bool operator==(const ScanRecord &a, const ScanRecord &b) noexcept {
    const bool same_value = (std::isnan(a.normalized) && std::isnan(b.normalized)) ||
                            a.normalized == b.normalized;
    const bool same_raw = (std::isnan(a.raw_transverse.real()) &&
                           std::isnan(b.raw_transverse.real())) ||
                          a.raw_transverse == b.raw_transverse;
    return a.j == b.j && same_value && same_raw && a.classified == b.classified &&
           a.arithmetic_check == b.arithmetic_check && a.error == b.error;
}

bool operator==(const ScanResult &a, const ScanResult &b) noexcept {
    return a.n == b.n && a.exponent == b.exponent && a.params == b.params && a.M == b.M &&
           a.threshold == b.threshold && a.j_min == b.j_min && a.j_max == b.j_max &&
           a.timestamp == b.timestamp && a.warnings == b.warnings && a.records == b.records;
}

bool classify(const SignalSample &sample, double threshold) {
    return sample.normalized >= threshold;
}

SignalSample evaluate(const FactorizationTarget &target, std::uint64_t j, std::uint64_t M,
                      const MethodParams &params, std::size_t max_terms) {
    if (const auto *diff = std::get_if<DifferentialParams>(&params)) {
        return simulate_differential(target, j, M, *diff, max_terms);
    }
    return simulate_spatial(target, j, M, std::get<SpatialParams>(params), max_terms);
}

namespace {

ScanRecord evaluate_record(const FactorizationTarget &target, std::uint64_t j,
                           const ScanConfig &cfg) {
    ScanRecord record;
    record.j = j;
    record.arithmetic_check = is_exact_factor(target.n(), j);
    try {
        const SignalSample sample = evaluate(target, j, cfg.M, cfg.params, cfg.max_terms);
        record.normalized = sample.normalized;
        record.raw_transverse = sample.raw_transverse;
        record.classified = classify(sample, cfg.threshold);
    } catch (const std::exception &e) {
        constexpr double nan = std::numeric_limits<double>::quiet_NaN();
        record.normalized = nan;
        record.raw_transverse = {nan, nan};
        record.classified = false;
        record.error = e.what();
    }
    return record;
}

} // namespace

ScanResult scan(const FactorizationTarget &target, const ScanConfig &cfg) {
    validate(cfg);

    ScanResult result;
    result.n = target.n();
    result.exponent = target.exponent();
    result.params = cfg.params;
    result.M = cfg.M;
    result.threshold = cfg.threshold;
    result.j_min = cfg.j_min;
    result.j_max = cfg.j_max;
    if (const auto *diff = std::get_if<DifferentialParams>(&cfg.params)) {
        if (auto warning = small_angle_warning(cfg.M, diff->theta)) {
            result.warnings.push_back(*warning);
        }
    }

    const std::uint64_t count = cfg.j_max - cfg.j_min + 1;
    result.records.resize(count);

    // Each slot is written by exactly one worker; the output order is fixed by j.
    std::atomic<std::uint64_t> next{0};
    auto worker = [&] {
        for (std::uint64_t i = next.fetch_add(1); i < count; i = next.fetch_add(1)) {
            result.records[i] = evaluate_record(target, cfg.j_min + i, cfg);
        }
    };

    const auto workers = static_cast<unsigned>(std::min<std::uint64_t>(cfg.jobs, count));
    if (workers <= 1) {
        worker();
    } else {
        std::vector<std::jthread> pool;
        pool.reserve(workers);
        for (unsigned t = 0; t < workers; ++t) {
            pool.emplace_back(worker);
        }
    }

    for (const ScanRecord &r : result.records) {
        if (r.error) {
            result.warnings.push_back("j=" + std::to_string(r.j) + ": " + *r.error);
        }
    }
    return result;
}

namespace {

void factorize_into(std::uint64_t n, const FactorizationTarget &target, ScanConfig cfg,
                    std::uint64_t weight, std::map<std::uint64_t, unsigned> &found) {
    std::uint64_t current = n;
    while (current > 1) {
        const std::uint64_t limit = isqrt(current);
        if (limit < 2) {
            found[current] += static_cast<unsigned>(weight);
            return;
        }
        cfg.j_min = 2;
        cfg.j_max = limit;
        const ScanResult result = scan(FactorizationTarget(current, target.exponent()), cfg);

        bool divided = false;
        for (const ScanRecord &record : result.records) {
            // A ghost (classified non-divisor) must never reach the output.
            if (!record.classified || current % record.j != 0) {
                continue;
            }
            std::uint64_t power = 0;
            while (current % record.j == 0) {
                current /= record.j;
                ++power;
            }
            if (record.j > 3 && !is_prime(record.j)) {
                // The signal missed this divisor's own factors; split it separately.
                factorize_into(record.j, target, cfg, weight * power, found);
            } else {
                found[record.j] += static_cast<unsigned>(weight * power);
            }
            divided = true;
        }
        if (!divided) {
            found[current] += static_cast<unsigned>(weight);
            return;
        }
    }
}

} // namespace

std::vector<FactorEntry> full_factorize(const FactorizationTarget &target,
                                        const ScanConfig &cfg_template) {
    ScanConfig cfg = cfg_template;
    cfg.j_min = 2;
    cfg.j_max = 2;
    validate(cfg);
    if (const auto *diff = std::get_if<DifferentialParams>(&cfg.params);
        diff != nullptr && diff->normalize) {
        // Surfaces a degenerate reference once instead of as a silent empty scan.
        if (std::abs(reference_signal(cfg.M, diff->theta)) < kReferenceFloor) {
            throw NormalizationError("reference signal vanishes for M=" + std::to_string(cfg.M) +
                                     ": (M+1)*theta is a multiple of pi");
        }
    }

    std::map<std::uint64_t, unsigned> found;
    factorize_into(target.n(), target, cfg, 1, found);

    std::vector<FactorEntry> out;
    out.reserve(found.size());
    for (const auto &[value, multiplicity] : found) {
        out.push_back({value, multiplicity, is_prime(value)});
    }
    return out;
}

std::string format_factorization(const std::vector<FactorEntry> &factors) {
    std::string out;
    for (const FactorEntry &f : factors) {
        if (!out.empty()) {
            out += " × ";
        }
        out += std::to_string(f.value);
        if (f.multiplicity > 1) {
            out += "^" + std::to_string(f.multiplicity);
        }
    }
    return out;
}

std::string utc_timestamp() {
    const std::time_t now = std::chrono::system_clock::to_time_t(std::chrono::system_clock::now());
    std::tm tm{};
    gmtime_r(&now, &tm);
    char buf[32];
    std::strftime(buf, sizeof buf, "%Y-%m-%dT%H:%M:%SZ", &tm);
    return buf;
}

} // namespace gaussfactor
