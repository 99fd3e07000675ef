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

#include <cstdlib>
#include <iostream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "rbb/bernoulli.hpp"
#include "rbb/identities.hpp"
#include "rbb/sweep.hpp"

namespace {

constexpr int kExitPass = 0;
constexpr int kExitMathFailure = 1;
constexpr int kExitUsage = 2;

int cmd_table(const std::string& kind, long max_n) {
    if (kind == "bernoulli-numbers") {
        for (long n = 0; n <= max_n; ++n)
            std::cout << n << '\t' << rbb::bernoulli_number(n) << '\n';
    } else if (kind == "bernoulli-polys") {
        for (long n = 0; n <= max_n; ++n)
            std::cout << "B_" << n << "(x) = " << rbb::bernoulli_poly(n).text("x") << '\n';
    } else if (kind == "divided") {
        for (long n = 1; n <= max_n; ++n)
            std::cout << n << '\t' << rbb::divided_bernoulli_number(n) << '\t'
                      << rbb::divided_bernoulli_poly(n).text("x") << '\n';
    } else if (kind == "power-sums") {
        for (long n = 0; n <= max_n; ++n)
            std::cout << "F_" << n << " = " << rbb::power_sum_poly(n).text("m") << '\n';
    } else if (kind == "harmonic") {
        for (long n = 1; n <= max_n; ++n) {
            rbb::HarmonicPair row = rbb::harmonic_pair(n);
            std::cout << row.n << '\t' << row.value << '\n';
        }
    }
    return kExitPass;
}

int cmd_verify(const std::string& name, const std::vector<long>& params,
               rbb::ReportFormat format) {
    const rbb::IdentitySpec* spec = rbb::find_identity(name);
    if (!spec) {
        std::cerr << "unknown identity '" << name << "'\n";
        return kExitUsage;
    }
    if (static_cast<int>(params.size()) != spec->arity()) {
        std::cerr << "identity '" << name << "' takes " << spec->arity()
                  << " parameter(s)\n";
        return kExitUsage;
    }
    if (!spec->constraint(params)) {
        std::cerr << "parameters violate the constraint: " << spec->constraint_text << '\n';
        return kExitUsage;
    }
    rbb::VerificationReport report = rbb::run_identity(*spec, params);
    std::cout << rbb::format_report(report, format) << '\n';
    return report.pass ? kExitPass : kExitMathFailure;
}

int cmd_sweep(const rbb::SweepConfig& config) {
    rbb::SweepResult result = rbb::run_sweep(config, std::cout);
    return result.all_passed() ? kExitPass : kExitMathFailure;
}

int cmd_cache(const std::string& action, const std::string& path, long max_n) {
    if (action == "write") {
        rbb::write_bernoulli_cache_file(path, static_cast<std::size_t>(max_n));
        return kExitPass;
    }
    // check: parse and revalidate every record against the recurrence
    try {
        std::vector<rbb::Rational> numbers = rbb::read_bernoulli_cache_file(path);
        std::vector<std::size_t> all(numbers.size());
        for (std::size_t i = 0; i < all.size(); ++i) all[i] = i;
        rbb::validate_bernoulli_entries(numbers, all);
        std::cout << "ok: " << numbers.size() << " entries\n";
        return kExitPass;
    } catch (const rbb::CacheFileError& e) {
        std::cerr << "cache check failed at " << e.what() << '\n';
        return kExitMathFailure;
    }
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"exact Rota-Baxter / Bernoulli identity toolkit"};
    app.require_subcommand(1);

    // table
    auto* table = app.add_subcommand("table", "print exact value tables");
    std::string table_kind;
    long table_max = 0;
    table->add_option("kind", table_kind, "table kind")
        ->required()
        ->check(CLI::IsMember({"bernoulli-numbers", "bernoulli-polys", "divided",
                               "power-sums", "harmonic"}));
    table->add_option("max_n", table_max, "largest index")->required()
        ->check(CLI::NonNegativeNumber);

    // verify
    auto* verify = app.add_subcommand("verify", "verify one identity instance");
    std::string verify_name;
    std::vector<long> verify_params;
    std::string verify_format = "text";
    verify->add_option("identity", verify_name, "identity name")->required();
    verify->add_option("params", verify_params, "integer parameters");
    verify->add_option("--format", verify_format, "text|json|csv")
        ->check(CLI::IsMember({"text", "json", "csv"}));

    // sweep
    auto* sweep = app.add_subcommand("sweep", "run verification sweeps");
    std::string sweep_identity = "all";
    std::vector<std::string> sweep_ranges;
    std::string sweep_format = "text";
    int sweep_workers = 1;
    bool sweep_fail_fast = false;
    std::string sweep_cache;
    sweep->add_option("--identity", sweep_identity, "identity name or 'all'");
    sweep->add_option("--range", sweep_ranges, "PARAM=LO..HI (repeatable)");
    sweep->add_option("--format", sweep_format, "text|json|csv")
        ->check(CLI::IsMember({"text", "json", "csv"}));
    sweep->add_option("--workers", sweep_workers, "worker threads")
        ->check(CLI::PositiveNumber);
    sweep->add_flag("--fail-fast", sweep_fail_fast, "stop at the first failure");
    sweep->add_option("--cache", sweep_cache, "Bernoulli cache file to preload");

    // cache
    auto* cache = app.add_subcommand("cache", "write or check the Bernoulli cache file");
    std::string cache_action, cache_path;
    long cache_max = 0;
    cache->add_option("action", cache_action, "write|check")
        ->required()
        ->check(CLI::IsMember({"write", "check"}));
    cache->add_option("path", cache_path, "cache file path")->required();
    cache->add_option("max_n", cache_max, "largest index (write)")
        ->check(CLI::NonNegativeNumber);

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        int code = app.exit(e);
        return code == 0 ? kExitPass : kExitUsage;
    }

    try {
        if (app.got_subcommand(table)) return cmd_table(table_kind, table_max);
        if (app.got_subcommand(verify))
            return cmd_verify(verify_name, verify_params,
                              *rbb::parse_report_format(verify_format));
        if (app.got_subcommand(sweep)) {
            rbb::SweepConfig config;
            config.identity = sweep_identity;
            config.format = *rbb::parse_report_format(sweep_format);
            config.workers = sweep_workers;
            config.fail_fast = sweep_fail_fast;
            if (!sweep_cache.empty()) {
                config.cache_path = sweep_cache;
            } else if (const char* env = std::getenv("RBB_CACHE")) {
                if (*env) config.cache_path = env;
            }
            for (const std::string& r : sweep_ranges) {
                auto eq = r.find('=');
                auto dots = r.find("..");
                if (eq == std::string::npos || dots == std::string::npos || dots < eq) {
                    std::cerr << "bad --range '" << r << "', expected PARAM=LO..HI\n";
                    return kExitUsage;
                }
                try {
                    config.range_overrides[r.substr(0, eq)] = {
                        std::stol(r.substr(eq + 1, dots - eq - 1)),
                        std::stol(r.substr(dots + 2))};
                } catch (const std::exception&) {
                    std::cerr << "bad --range bounds in '" << r << "'\n";
                    return kExitUsage;
                }
            }
            return cmd_sweep(config);
        }
        if (app.got_subcommand(cache)) return cmd_cache(cache_action, cache_path, cache_max);
    } catch (const rbb::CacheFileError& e) {
        std::cerr << "cache file error: " << e.what() << '\n';
        return kExitUsage;
    } catch (const std::invalid_argument& e) {
        std::cerr << "error: " << e.what() << '\n';
        return kExitUsage;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << '\n';
        return kExitUsage;
    }
    return kExitUsage;
}
