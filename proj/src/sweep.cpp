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

#include "rbb/sweep.hpp"

#include <algorithm>
#include <atomic>
#include <optional>
#include <ostream>
#include <sstream>
#include <stdexcept>
#include <thread>

#include <json.hpp>

#include "rbb/bernoulli.hpp"
#include "rbb/rbop.hpp"

namespace rbb {

std::optional<ReportFormat> parse_report_format(const std::string& name) {
    if (name == "text") return ReportFormat::Text;
    if (name == "json") return ReportFormat::Json;
    if (name == "csv") return ReportFormat::Csv;
    return std::nullopt;
}

namespace {

std::string params_list(const std::vector<long>& params, char sep) {
    std::ostringstream os;
    for (std::size_t i = 0; i < params.size(); ++i) {
        if (i) os << sep;
        os << params[i];
    }
    return os.str();
}

std::string csv_quote(const std::string& s) {
    std::string out = "\"";
    for (char c : s) {
        if (c == '"') out += '"';
        out += c;
    }
    out += '"';
    return out;
}

std::string format_ms(double ms) {
    std::ostringstream os;
    os.setf(std::ios::fixed);
    os.precision(3);
    os << ms;
    return os.str();
}

}  // namespace

std::string csv_header() {
    return "identity,params,class,constant,difference,elapsed_ms,note";
}

std::string format_report(const VerificationReport& r, ReportFormat format) {
    const Discrepancy& d = r.discrepancy;
    switch (format) {
        case ReportFormat::Text: {
            std::ostringstream os;
            os << r.identity << " [" << params_list(r.params, ',') << "] "
               << to_string(d.kind());
            if (d.kind() == Discrepancy::Kind::Constant)
                os << " constant=" << d.constant();
            if (d.kind() == Discrepancy::Kind::NonConstant)
                os << " witness_exponent=" << d.witness_exponent()
                   << " difference=" << d.difference().text();
            os << (r.pass ? " pass" : " FAIL");
            if (!r.note.empty()) os << " note=\"" << r.note << "\"";
            os << " elapsed_ms=" << format_ms(r.elapsed_ms);
            return os.str();
        }
        case ReportFormat::Json: {
            nlohmann::json j;
            j["identity"] = r.identity;
            j["params"] = r.params;
            j["class"] = to_string(d.kind());
            if (d.kind() == Discrepancy::Kind::Constant)
                j["constant"] = d.constant().str();
            if (d.kind() == Discrepancy::Kind::NonConstant)
                j["difference"] = d.difference().coeff_strings();
            j["elapsed_ms"] = r.elapsed_ms;
            if (!r.note.empty()) j["note"] = r.note;
            return j.dump();
        }
        case ReportFormat::Csv: {
            std::ostringstream os;
            os << r.identity << ',' << csv_quote(params_list(r.params, ';')) << ','
               << to_string(d.kind()) << ',';
            if (d.kind() == Discrepancy::Kind::Constant) os << d.constant();
            os << ',';
            if (d.kind() == Discrepancy::Kind::NonConstant)
                os << csv_quote(d.difference().text());
            os << ',' << format_ms(r.elapsed_ms) << ',';
            if (!r.note.empty()) os << csv_quote(r.note);
            return os.str();
        }
    }
    return {};
}

std::vector<std::vector<long>> sweep_tuples(
    const IdentitySpec& spec,
    const std::map<std::string, std::pair<long, long>>& range_overrides) {
    for (const auto& [name, range] : range_overrides) {
        bool known = std::find(spec.param_names.begin(), spec.param_names.end(), name) !=
                     spec.param_names.end();
        if (!known)
            throw std::invalid_argument("identity '" + spec.name +
                                        "' has no parameter named '" + name + "'");
        if (range.first > range.second)
            throw std::invalid_argument("empty range for parameter '" + name + "'");
    }
    std::vector<std::pair<long, long>> ranges = spec.default_ranges;
    for (std::size_t i = 0; i < spec.param_names.size(); ++i) {
        auto it = range_overrides.find(spec.param_names[i]);
        if (it != range_overrides.end()) ranges[i] = it->second;
    }
    std::vector<std::vector<long>> tuples;
    std::vector<long> current(ranges.size());
    std::function<void(std::size_t)> walk = [&](std::size_t dim) {
        if (dim == ranges.size()) {
            if (spec.constraint && !spec.constraint(current)) return;
            if (spec.sweep_filter && !spec.sweep_filter(current)) return;
            tuples.push_back(current);
            return;
        }
        for (long v = ranges[dim].first; v <= ranges[dim].second; ++v) {
            current[dim] = v;
            walk(dim + 1);
        }
    };
    walk(0);
    return tuples;
}

std::vector<VerificationReport> run_tuples(const IdentitySpec& spec,
                                           const std::vector<std::vector<long>>& tuples,
                                           int workers) {
    std::vector<VerificationReport> reports(tuples.size());
    if (tuples.empty()) return reports;
    workers = std::clamp(workers, 1, 64);
    if (workers == 1 || tuples.size() == 1) {
        for (std::size_t i = 0; i < tuples.size(); ++i)
            reports[i] = run_identity(spec, tuples[i]);
        return reports;
    }
    std::atomic<std::size_t> next{0};
    auto worker = [&]() {
        for (;;) {
            std::size_t i = next.fetch_add(1);
            if (i >= tuples.size()) return;
            reports[i] = run_identity(spec, tuples[i]);
        }
    };
    std::vector<std::thread> pool;
    pool.reserve(static_cast<std::size_t>(workers));
    for (int w = 0; w < workers; ++w) pool.emplace_back(worker);
    for (std::thread& t : pool) t.join();
    return reports;
}

namespace {

// Single-threaded cache warmup so that parallel verifiers are pure
// readers. The bound is a crude but safe overestimate: every verifier's
// Bernoulli demand is at most the sum of its parameter maxima plus a
// small shift.
void warm_for(const IdentitySpec& spec,
              const std::vector<std::vector<long>>& tuples) {
    if (tuples.empty()) return;
    long total = 4;
    for (std::size_t i = 0; i < spec.param_names.size(); ++i) {
        long mx = 0;
        for (const auto& t : tuples) mx = std::max(mx, t[i]);
        total += mx;
    }
    global_bernoulli().warm(static_cast<std::size_t>(total));
    if (spec.warm_images) standard_rb().warm(static_cast<std::size_t>(total));
}

void emit_summary(const SweepResult& result, ReportFormat format, std::ostream& out) {
    switch (format) {
        case ReportFormat::Text: {
            out << "summary: passed=" << result.passed << " failed=" << result.failed
                << (result.aborted ? " aborted" : "") << '\n';
            for (const auto& [name, ms] : result.max_elapsed_ms)
                out << "max_ms " << name << "=" << format_ms(ms) << '\n';
            break;
        }
        case ReportFormat::Json: {
            nlohmann::json j;
            j["type"] = "summary";
            j["passed"] = result.passed;
            j["failed"] = result.failed;
            j["aborted"] = result.aborted;
            nlohmann::json m;
            for (const auto& [name, ms] : result.max_elapsed_ms) m[name] = ms;
            j["max_elapsed_ms"] = m;
            out << j.dump() << '\n';
            break;
        }
        case ReportFormat::Csv: {
            out << "# summary passed=" << result.passed << " failed=" << result.failed
                << (result.aborted ? " aborted" : "") << '\n';
            for (const auto& [name, ms] : result.max_elapsed_ms)
                out << "# max_ms " << name << "=" << format_ms(ms) << '\n';
            break;
        }
    }
}

}  // namespace

SweepResult run_sweep(const SweepConfig& config, std::ostream& out) {
    std::vector<const IdentitySpec*> specs;
    if (config.identity == "all") {
        for (const IdentitySpec& s : identity_catalog()) specs.push_back(&s);
    } else {
        const IdentitySpec* s = find_identity(config.identity);
        if (!s) throw std::invalid_argument("unknown identity '" + config.identity + "'");
        specs.push_back(s);
    }
    if (config.workers < 1) throw std::invalid_argument("worker count must be >= 1");

    if (config.cache_path) {
        std::vector<Rational> numbers = read_bernoulli_cache_file(*config.cache_path);
        validate_bernoulli_entries(numbers, bernoulli_validation_sample(numbers.size()));
        if (!numbers.empty()) global_bernoulli().seed(std::move(numbers));
    }

    for (const auto& [name, range] : config.range_overrides) {
        bool known = false;
        for (const IdentitySpec* spec : specs)
            known = known || std::find(spec->param_names.begin(), spec->param_names.end(),
                                       name) != spec->param_names.end();
        if (!known)
            throw std::invalid_argument("no swept identity has a parameter named '" +
                                        name + "'");
    }

    SweepResult result;
    if (config.format == ReportFormat::Csv) out << csv_header() << '\n';

    // Blocked execution: parallel inside a block, emission strictly in
    // tuple order, so output bodies do not depend on the worker count.
    constexpr std::size_t kBlock = 256;
    const bool whole_catalog = specs.size() > 1;
    for (const IdentitySpec* spec : specs) {
        std::map<std::string, std::pair<long, long>> overrides = config.range_overrides;
        if (whole_catalog) {
            // a full-catalog sweep applies each override only where the
            // parameter name exists
            for (auto it = overrides.begin(); it != overrides.end();) {
                bool known = std::find(spec->param_names.begin(), spec->param_names.end(),
                                       it->first) != spec->param_names.end();
                it = known ? std::next(it) : overrides.erase(it);
            }
        }
        std::vector<std::vector<long>> tuples = sweep_tuples(*spec, overrides);
        warm_for(*spec, tuples);
        double max_ms = 0.0;
        for (std::size_t base = 0; base < tuples.size() && !result.aborted; base += kBlock) {
            std::size_t count = std::min(kBlock, tuples.size() - base);
            std::vector<std::vector<long>> block(tuples.begin() + static_cast<long>(base),
                                                 tuples.begin() + static_cast<long>(base + count));
            std::vector<VerificationReport> reports =
                run_tuples(*spec, block, config.workers);
            for (const VerificationReport& r : reports) {
                out << format_report(r, config.format) << '\n';
                max_ms = std::max(max_ms, r.elapsed_ms);
                if (r.pass) {
                    ++result.passed;
                } else {
                    ++result.failed;
                    if (config.fail_fast) {
                        result.aborted = true;
                        break;
                    }
                }
            }
        }
        if (!tuples.empty()) result.max_elapsed_ms[spec->name] = max_ms;
        if (result.aborted) break;
    }
    emit_summary(result, config.format, out);
    return result;
}

}  // namespace rbb
