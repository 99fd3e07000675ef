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

#include <cstddef>
#include <map>
#include <mutex>
#include <string>
#include <vector>

#include "rbb/append_cache.hpp"
#include "rbb/arith.hpp"
#include "rbb/poly.hpp"

namespace rbb {

/// One row of a harmonic-number table: H_{n,s} = sum_{k=1..n} 1/k^s.
struct HarmonicPair {
    long n = 0;
    long s = 1;
    Rational value;
};

/**
 * Growable tables of Bernoulli numbers B_n (convention B_1 = -1/2),
 * Bernoulli polynomials B_n(x), divided polynomials B_n(x)/n and
 * harmonic prefix sums. Entries are computed once via the defining
 * recurrence sum_{j=0..n} C(n+1,j) B_j = 0 and never change; after a
 * warm(N) call all reads up to N are lock-free.
 **/
class BernoulliCache {
public:
    const Rational& number(std::size_t n) const;
    const Poly& poly(std::size_t n) const;

    /// B_n / n and B_n(x)/n; n = 0 is a domain error.
    Rational divided_number(std::size_t n) const;
    const Poly& divided_poly(std::size_t n) const;

    /// H_{n,s}; H_0 = 0. Requires n >= 0 and s >= 1.
    Rational harmonic(long n, long s = 1) const;

    void warm(std::size_t max_n) const;
    std::size_t ready() const { return numbers_.ready(); }

    /// Preload numbers 0..values.size()-1 (from a persistence file).
    /// Only valid on a fresh cache.
    void seed(std::vector<Rational> values) { numbers_.seed(std::move(values)); }

private:
    AppendCache<Rational> numbers_;
    AppendCache<Poly> polys_;
    AppendCache<Poly> divided_;  // slot n holds B_n(x)/n; slot 0 unused
    mutable std::map<long, std::vector<Rational>> harmonics_;  // s -> prefix sums
    mutable std::mutex harmonics_mutex_;
};

/// Process-wide cache used by the free functions below.
BernoulliCache& global_bernoulli();

Rational bernoulli_number(long n);
Poly bernoulli_poly(long n);
Rational divided_bernoulli_number(long n);
Poly divided_bernoulli_poly(long n);
Rational harmonic(long n, long s = 1);
HarmonicPair harmonic_pair(long n, long s = 1);

/// Power-sum (Faulhaber) polynomial F_n with F_n(m) = 1^n + ... + m^n,
/// built from F_n(m) = 1/(n+1) sum_j (-1)^j C(n+1,j) B_j m^{n+1-j}.
Poly power_sum_poly(long n);

/// The literal sum 1^n + 2^n + ... + m^n; brute-force oracle for
/// power_sum_poly.
Rational power_sum_literal(long n, long m);

/// (B_{n+1}(m+1) - B_{n+1}(1)) / (n+1); the subtracted constant equals
/// B_{n+1} for every n >= 1. Must equal power_sum_poly(n) for all n.
Poly power_sum_via_bernoulli(long n);

// --- persistence ("n<TAB>p/q" records) ------------------------------

/// Error in a cache file, carrying the 1-based offending line.
class CacheFileError : public std::runtime_error {
public:
    CacheFileError(std::size_t line, const std::string& message)
        : std::runtime_error("line " + std::to_string(line) + ": " + message),
          line_(line) {}
    std::size_t line() const { return line_; }

private:
    std::size_t line_;
};

void write_bernoulli_cache_file(const std::string& path, std::size_t max_n,
                                const BernoulliCache& cache = global_bernoulli());

/// Parses the file; throws CacheFileError on malformed or non-consecutive
/// records. Performs no value validation.
std::vector<Rational> read_bernoulli_cache_file(const std::string& path);

/// Validates entries at the given indices against the recurrence, using
/// the file's own earlier values. Throws CacheFileError on mismatch.
void validate_bernoulli_entries(const std::vector<Rational>& numbers,
                                const std::vector<std::size_t>& indices);

/// Deterministic 10% sample (at least one index when count > 0) used
/// when loading a cache file; fixed seed so harness runs reproduce.
std::vector<std::size_t> bernoulli_validation_sample(std::size_t count);

}  // namespace rbb
