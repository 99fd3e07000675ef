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
#include <string>
#include <string_view>
#include <vector>

#include "rbb/arith.hpp"

namespace rbb {

/**
 * Dense univariate polynomial over Rational. Coefficients are stored
 * exponent-ascending and trailing zeros are trimmed after every
 * operation, so structural equality equals mathematical equality.
 * The indeterminate is anonymous; printing picks a variable name.
 **/
class Poly {
public:
    Poly() = default;  // the zero polynomial

    static Poly constant(Rational c);
    static Poly variable() { return monomial(1, 1); }
    static Poly monomial(std::size_t exponent, Rational coeff);
    static Poly from_coeffs(std::vector<Rational> ascending);

    /// degree of zero is the distinguished marker -1 (stands in for
    /// minus infinity; no arithmetic is done on it)
    int degree() const { return static_cast<int>(c_.size()) - 1; }
    bool is_zero() const { return c_.empty(); }
    bool is_constant() const { return c_.size() <= 1; }

    /// coefficient of x^k, zero beyond the degree
    const Rational& coeff(std::size_t k) const;
    const Rational& constant_term() const { return coeff(0); }
    const Rational& leading() const;  // pre: not zero

    Poly operator-() const;
    Poly& operator+=(const Poly& o);
    Poly& operator-=(const Poly& o);
    Poly& operator*=(const Poly& o) { return *this = *this * o; }
    Poly& operator*=(const Rational& s);

    /// *this += c * p, without building a temporary polynomial
    Poly& add_scaled(const Poly& p, const Rational& c);

    friend Poly operator+(Poly a, const Poly& b) { return a += b; }
    friend Poly operator-(Poly a, const Poly& b) { return a -= b; }
    friend Poly operator*(const Poly& a, const Poly& b);
    friend Poly operator*(Poly p, const Rational& s) { return p *= s; }
    friend Poly operator*(const Rational& s, Poly p) { return p *= s; }
    friend bool operator==(const Poly& a, const Poly& b) { return a.c_ == b.c_; }
    friend bool operator!=(const Poly& a, const Poly& b) { return !(a == b); }

    Poly pow(unsigned long e) const;

    /// p(q(x)) by Horner composition
    Poly compose(const Poly& inner) const;

    Rational eval(const Rational& v) const;

    Poly derivative() const;

    /// antiderivative q with q(0) = 0 and q' = *this
    Poly integrate_from_zero() const;

    /// "c_k*x^k + ... + c_0" form, descending, zero terms skipped;
    /// unit coefficients print as bare powers ("x^2 - 1").
    std::string text(std::string_view var = "x") const;

    /// coefficient strings c_0..c_deg, exponent-ascending ("0" for the
    /// zero polynomial); the JSON report form
    std::vector<std::string> coeff_strings() const;

private:
    void trim();
    std::vector<Rational> c_;  // invariant: empty, or back() != 0
};

/**
 * Exact classification of an identity's LHS - RHS: Zero, a nonzero
 * Constant, or NonConstant carrying the full difference polynomial and
 * the smallest positive exponent with a nonzero coefficient.
 **/
class Discrepancy {
public:
    enum class Kind { Zero, Constant, NonConstant };

    Discrepancy() = default;  // Zero
    static Discrepancy zero() { return Discrepancy(); }
    static Discrepancy of(Poly difference);

    Kind kind() const { return kind_; }
    bool is_zero() const { return kind_ == Kind::Zero; }

    const Rational& constant() const;        // pre: kind == Constant
    const Poly& difference() const;          // pre: kind == NonConstant
    std::size_t witness_exponent() const;    // pre: kind == NonConstant

private:
    Kind kind_ = Kind::Zero;
    Rational constant_;
    Poly difference_;
    std::size_t witness_ = 0;
};

std::string to_string(Discrepancy::Kind kind);

Poly poly_add(const Poly& p, const Poly& q);
Poly poly_sub(const Poly& p, const Poly& q);
Poly poly_mul(const Poly& p, const Poly& q);
Poly poly_compose(const Poly& p, const Poly& q);
Rational poly_eval(const Poly& p, const Rational& v);
Poly poly_derivative(const Poly& p);
Poly poly_integrate_from_zero(const Poly& p);

/// classification of lhs - rhs
Discrepancy classify_discrepancy(const Poly& lhs, const Poly& rhs);

}  // namespace rbb
