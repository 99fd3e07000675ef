/*
   Copyright 2026 The rbb authors

   Licensed under the Apache License, Version 2.0 (the "License");
   you may not use this file except in compliance with the License.
   You may obtain a copy of the License at

        http://www.apache.org/licenses/LICENSE-2.0

   Unless required by applicable law or agreed to in writing, software
   distributed under the License is distributed on an "AS IS" BASIS,
   WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
   See the License for the specific language governing permissions and
   limitations under the License.
*/

#pragma once

#include <iosfwd>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "rbb/identities.hpp"

namespace rbb {

enum class ReportFormat { Text, Json, Csv };

std::optional<ReportFormat> parse_report_format(const std::string& name);

/// One report rendered in the given format (no trailing newline). The
/// body is deterministic except for the elapsed_ms field.
std::string format_report(const VerificationReport& report, ReportFormat format);

/// CSV column header matching format_report's Csv rows.
std::string csv_header();

/**
 * A sweep over one identity (or the whole catalog): per-parameter
 * inclusive ranges, output format, worker count, optional fail-fast and
 * an optional Bernoulli cache file to preload.
 **/
struct SweepConfig {
    std::string identity = "all";
    // parameter name -> inclusive bounds, overriding the default ranges
    std::map<std::string, std::pair<long, long>> range_overrides;
    ReportFormat format = ReportFormat::Text;
    int workers = 1;
    bool fail_fast = false;
    std::optional<std::string> cache_path;
};

struct SweepResult {
    std::size_t passed = 0;
    std::size_t failed = 0;
    bool aborted = false;           // fail-fast stop
    std::map<std::string, double> max_elapsed_ms;  // per identity
    bool all_passed() const { return failed == 0 && !aborted; }
};

/**
 * Enumerates parameter tuples in lexicographic order, runs them (in
 * parallel when workers > 1, after a single-threaded cache warmup) and
 * streams reports to `out` in deterministic tuple order regardless of
 * the worker count. With fail_fast, stops after emitting the first
 * failing report. Returns counts and per-identity maximum wall time.
 *
 * Throws std::invalid_argument for unknown identities or bad ranges and
 * CacheFileError for an invalid cache file.
 **/
SweepResult run_sweep(const SweepConfig& config, std::ostream& out);

/// Tuples for one identity: the default (acceptance) ranges narrowed by
/// overrides, filtered by the identity's constraint and sweep filter.
std::vector<std::vector<long>> sweep_tuples(
    const IdentitySpec& spec,
    const std::map<std::string, std::pair<long, long>>& range_overrides);

/// Runs one identity's tuples with the given worker count; reports come
/// back in tuple order. Used by run_sweep and the acceptance suite.
std::vector<VerificationReport> run_tuples(const IdentitySpec& spec,
                                           const std::vector<std::vector<long>>& tuples,
                                           int workers);

}  // namespace rbb
