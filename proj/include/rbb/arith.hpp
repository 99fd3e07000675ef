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

#include <gmpxx.h>

#include <cstdint>
#include <iosfwd>
#include <string>
#include <string_view>

namespace rbb {

/// Arbitrary-precision signed integer. Never overflows.
using BigInt = mpz_class;

/**
 * Exact rational number, always kept in lowest terms with a positive
 * denominator. Equality is structural, so two Rationals compare equal
 * iff they denote the same number.
 **/
class Rational {
public:
    Rational() : v_(0) {}
    Rational(long n) : v_(n) {}                // NOLINT: implicit by design
    Rational(const BigInt& n) : v_(n) {}       // NOLINT
    Rational(long num, long den);
    Rational(const BigInt& num, const BigInt& den);

    /// Parses "p" or "p/q" (q > 0 not required in the input; the result
    /// is normalized). Throws std::invalid_argument on malformed text.
    static Rational parse(std::string_view text);

    BigInt num() const { return v_.get_num(); }
    BigInt den() const { return v_.get_den(); }  // always > 0

    bool is_zero() const { return mpq_sgn(v_.get_mpq_t()) == 0; }
    bool is_integer() const { return v_.get_den() == 1; }
    int sign() const { return mpq_sgn(v_.get_mpq_t()); }

    Rational operator-() const;
    Rational& operator+=(const Rational& o) { v_ += o.v_; return *this; }
    Rational& operator-=(const Rational& o) { v_ -= o.v_; return *this; }
    Rational& operator*=(const Rational& o) { v_ *= o.v_; return *this; }
    Rational& operator/=(const Rational& o);

    /// Multiplicative inverse; throws std::domain_error on zero.
    Rational reciprocal() const;

    /// Integer power; negative exponents invert (throws on zero base).
    Rational pow(long e) const;

    Rational abs() const;

    /// "p" when the denominator is 1, otherwise "p/q".
    std::string str() const;

    friend Rational operator+(Rational a, const Rational& b) { return a += b; }
    friend Rational operator-(Rational a, const Rational& b) { return a -= b; }
    friend Rational operator*(Rational a, const Rational& b) { return a *= b; }
    friend Rational operator/(Rational a, const Rational& b) { return a /= b; }
    friend bool operator==(const Rational& a, const Rational& b) {
        return mpq_equal(a.v_.get_mpq_t(), b.v_.get_mpq_t()) != 0;
    }
    friend bool operator!=(const Rational& a, const Rational& b) { return !(a == b); }
    friend bool operator<(const Rational& a, const Rational& b) {
        return mpq_cmp(a.v_.get_mpq_t(), b.v_.get_mpq_t()) < 0;
    }
    friend std::ostream& operator<<(std::ostream& os, const Rational& r);

private:
    mpq_class v_;  // invariant: canonical form
};

/// rat(num, den): normalized fraction in lowest terms, positive
/// denominator. Throws std::domain_error when den = 0.
Rational rat(const BigInt& num, const BigInt& den);
Rational rat(long num, long den);

/**
 * Binomial coefficient C(n, k) as an exact integer. Total: returns 0
 * for k < 0 or k > n, so sums over vanishing binomials need no range
 * bookkeeping. Rows up to the memo limit (default 256) are served from
 * a Pascal-triangle table that is built once and then read lock-free.
 **/
BigInt binomial(unsigned long n, long k);

/// Memo limit used by binomial(); must be called before the first
/// binomial() evaluation to take effect.
void set_binomial_memo_limit(std::size_t rows);
std::size_t binomial_memo_limit();

/// n! as an exact integer.
BigInt factorial(unsigned long n);

}  // namespace rbb
