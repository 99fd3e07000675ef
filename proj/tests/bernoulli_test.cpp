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

#include "rbb/bernoulli.hpp"

#include <doctest.h>

#include <cstdio>
#include <fstream>
#include <string>
#include <thread>
#include <vector>

using rbb::BernoulliCache;
using rbb::Poly;
using rbb::Rational;

namespace {

std::string temp_path(const char* tag) {
    return std::string("/tmp/rbb_test_") + tag + "_" + std::to_string(::getpid());
}

Poly from(std::initializer_list<Rational> ascending) {
    return Poly::from_coeffs(std::vector<Rational>(ascending));
}

}  // namespace

TEST_CASE("bernoulli numbers") {
    CHECK(rbb::bernoulli_number(0) == Rational(1));
    CHECK(rbb::bernoulli_number(1) == Rational(-1, 2));
    CHECK(rbb::bernoulli_number(2) == Rational(1, 6));
    CHECK(rbb::bernoulli_number(12) == Rational(-691, 2730));
    for (long n = 3; n <= 61; n += 2) CHECK(rbb::bernoulli_number(n) == Rational(0));
    CHECK_THROWS_AS(rbb::bernoulli_number(-1), std::domain_error);
}

TEST_CASE("bernoulli polynomials") {
    CHECK(rbb::bernoulli_poly(0) == Poly::constant(1));
    CHECK(rbb::bernoulli_poly(1) == from({Rational(-1, 2), Rational(1)}));
    CHECK(rbb::bernoulli_poly(2) == from({Rational(1, 6), Rational(-1), Rational(1)}));
    for (long n = 0; n <= 60; ++n) {
        const Poly b = rbb::bernoulli_poly(n);
        CHECK(b.degree() == static_cast<int>(n));
        CHECK(b.leading() == Rational(1));
        CHECK(b.eval(Rational(0)) == rbb::bernoulli_number(n));
        Rational at_one = b.eval(Rational(1));
        CHECK(at_one == (n % 2 == 0 ? rbb::bernoulli_number(n) : -rbb::bernoulli_number(n)));
    }
}

TEST_CASE("difference equation B_n(x+1) - B_n(x) = n x^(n-1)") {
    Poly xp1 = Poly::variable() + Poly::constant(1);
    for (long n = 1; n <= 60; ++n) {
        Poly lhs = rbb::bernoulli_poly(n).compose(xp1) - rbb::bernoulli_poly(n);
        CHECK(lhs == Poly::monomial(static_cast<std::size_t>(n - 1), Rational(n)));
    }
}

TEST_CASE("divided quantities") {
    CHECK(rbb::divided_bernoulli_number(1) == Rational(-1, 2));
    CHECK(rbb::divided_bernoulli_number(2) == Rational(1, 12));
    CHECK(rbb::divided_bernoulli_number(3) == Rational(0));
    CHECK(rbb::divided_bernoulli_poly(1) == from({Rational(-1, 2), Rational(1)}));
    CHECK(rbb::divided_bernoulli_poly(2) ==
          from({Rational(1, 12), Rational(-1, 2), Rational(1, 2)}));
    for (long n = 1; n <= 30; ++n)
        CHECK(rbb::divided_bernoulli_poly(n).eval(Rational(0)) ==
              rbb::divided_bernoulli_number(n));
    CHECK_THROWS_AS(rbb::divided_bernoulli_number(0), std::domain_error);
    CHECK_THROWS_AS(rbb::divided_bernoulli_poly(0), std::domain_error);
}

TEST_CASE("derivative ties divided and plain polynomials together") {
    // B_3'(x) = 3 B_2(x); integral of B_2 is the divided B_3 shifted to 0
    CHECK(rbb::bernoulli_poly(3).derivative() == rbb::bernoulli_poly(2) * Rational(3));
    CHECK(rbb::bernoulli_poly(2).integrate_from_zero() ==
          rbb::divided_bernoulli_poly(3) -
              Poly::constant(rbb::divided_bernoulli_number(3)));
}

TEST_CASE("power sum polynomials") {
    CHECK(rbb::power_sum_poly(0) == Poly::variable());
    CHECK(rbb::power_sum_poly(1) == from({Rational(0), Rational(1, 2), Rational(1, 2)}));
    CHECK(rbb::power_sum_poly(2) ==
          from({Rational(0), Rational(1, 6), Rational(1, 2), Rational(1, 3)}));
    for (long n = 0; n <= 20; ++n) {
        const Poly f = rbb::power_sum_poly(n);
        CHECK(f.degree() == static_cast<int>(n + 1));
        CHECK(f.constant_term() == Rational(0));
        CHECK(f.leading() == Rational(1, n + 1));
    }
}

TEST_CASE("power sum literal oracle") {
    CHECK(rbb::power_sum_literal(2, 3) == Rational(14));  // 1 + 4 + 9
    CHECK(rbb::power_sum_literal(9, 0) == Rational(0));
    CHECK(rbb::power_sum_literal(7, 1) == Rational(1));
    for (long n = 0; n <= 15; ++n)
        for (long m = 0; m <= 50; ++m)
            CHECK(rbb::power_sum_poly(n).eval(Rational(m)) ==
                  rbb::power_sum_literal(n, m));
}

TEST_CASE("power sums via bernoulli polynomials") {
    CHECK(rbb::power_sum_via_bernoulli(0) == Poly::variable());
    CHECK(rbb::power_sum_via_bernoulli(1) ==
          from({Rational(0), Rational(1, 2), Rational(1, 2)}));
    CHECK(rbb::power_sum_via_bernoulli(3) ==
          from({Rational(0), Rational(0), Rational(1, 4), Rational(1, 2), Rational(1, 4)}));
    CHECK(rbb::power_sum_via_bernoulli(3).eval(Rational(2)) == Rational(9));
    for (long n = 0; n <= 60; ++n)
        CHECK(rbb::power_sum_via_bernoulli(n) == rbb::power_sum_poly(n));
}

TEST_CASE("harmonic numbers") {
    CHECK(rbb::harmonic(0) == Rational(0));
    CHECK(rbb::harmonic(4) == Rational(25, 12));
    CHECK(rbb::harmonic(10) == Rational(7381, 2520));
    CHECK(rbb::harmonic(3, 2) == Rational(49, 36));
    CHECK(rbb::harmonic(0, 5) == Rational(0));
    CHECK_THROWS_AS(rbb::harmonic(-1), std::domain_error);
    CHECK_THROWS_AS(rbb::harmonic(3, 0), std::domain_error);

    rbb::HarmonicPair pair = rbb::harmonic_pair(3, 2);
    CHECK(pair.n == 3);
    CHECK(pair.s == 2);
    CHECK(pair.value == Rational(49, 36));
}

TEST_CASE("cache instances are independent and seedable") {
    BernoulliCache cache;
    CHECK(cache.number(4) == Rational(-1, 30));
    CHECK(cache.poly(2) == from({Rational(1, 6), Rational(-1), Rational(1)}));
    CHECK(cache.harmonic(4) == Rational(25, 12));

    BernoulliCache seeded;
    seeded.seed({Rational(1), Rational(-1, 2), Rational(1, 5)});  // wrong B_2
    CHECK(seeded.number(2) == Rational(1, 5));
    // growth continues from the seeded prefix
    CHECK(seeded.number(3) != rbb::bernoulli_number(3));

    BernoulliCache used;
    used.number(1);
    CHECK_THROWS_AS(used.seed({Rational(1)}), std::logic_error);
}

TEST_CASE("concurrent reads after warmup") {
    BernoulliCache cache;
    cache.warm(40);
    std::vector<std::thread> pool;
    std::atomic<int> mismatches{0};
    for (int t = 0; t < 4; ++t)
        pool.emplace_back([&cache, &mismatches] {
            for (long n = 0; n <= 40; ++n)
                if (cache.number(static_cast<std::size_t>(n)) != rbb::bernoulli_number(n))
                    ++mismatches;
        });
    for (auto& t : pool) t.join();
    CHECK(mismatches == 0);
}

TEST_CASE("cache file round trip") {
    std::string path = temp_path("roundtrip");
    rbb::write_bernoulli_cache_file(path, 20);
    std::vector<Rational> numbers = rbb::read_bernoulli_cache_file(path);
    REQUIRE(numbers.size() == 21);
    for (long n = 0; n <= 20; ++n)
        CHECK(numbers[static_cast<std::size_t>(n)] == rbb::bernoulli_number(n));
    std::vector<std::size_t> all(numbers.size());
    for (std::size_t i = 0; i < all.size(); ++i) all[i] = i;
    CHECK_NOTHROW(rbb::validate_bernoulli_entries(numbers, all));
    std::remove(path.c_str());
}

TEST_CASE("cache file validation catches a corrupted entry") {
    std::vector<Rational> numbers;
    for (long n = 0; n <= 10; ++n) numbers.push_back(rbb::bernoulli_number(n));
    numbers[2] = Rational(1, 5);
    std::vector<std::size_t> all(numbers.size());
    for (std::size_t i = 0; i < all.size(); ++i) all[i] = i;
    try {
        rbb::validate_bernoulli_entries(numbers, all);
        FAIL("validation should have thrown");
    } catch (const rbb::CacheFileError& e) {
        CHECK(e.line() == 3);  // entry 2 lives on line 3
    }
    // a later sampled index also exposes the corruption through the recurrence
    CHECK_THROWS_AS(rbb::validate_bernoulli_entries(numbers, {4}), rbb::CacheFileError);
}

TEST_CASE("cache file parse errors carry line numbers") {
    std::string path = temp_path("malformed");
    {
        std::ofstream out(path);
        out << "0\t1\n1\t-1/2\nnot-a-record\n";
    }
    try {
        rbb::read_bernoulli_cache_file(path);
        FAIL("parse should have thrown");
    } catch (const rbb::CacheFileError& e) {
        CHECK(e.line() == 3);
    }
    {
        std::ofstream out(path);
        out << "0\t1\n3\t0\n";  // gap in indices
    }
    CHECK_THROWS_AS(rbb::read_bernoulli_cache_file(path), rbb::CacheFileError);
    {
        std::ofstream out(path);  // empty file is vacuous
    }
    CHECK(rbb::read_bernoulli_cache_file(path).empty());
    std::remove(path.c_str());
}

TEST_CASE("validation sample is deterministic and about 10%") {
    auto s1 = rbb::bernoulli_validation_sample(50);
    auto s2 = rbb::bernoulli_validation_sample(50);
    CHECK(s1 == s2);
    CHECK(s1.size() == 5);
    for (std::size_t idx : s1) CHECK(idx < 50);
    CHECK(rbb::bernoulli_validation_sample(0).empty());
    CHECK(rbb::bernoulli_validation_sample(5).size() == 1);
}
