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

#include "rbb/poly.hpp"

#include <sstream>
#include <stdexcept>
#include <utility>

namespace rbb {

namespace {
// function-local so that Poly values constructed during other
// translation units' static initialization see a live object
const Rational& zero_rational() {
    static const Rational z{};
    return z;
}
}  // namespace

void Poly::trim() {
    while (!c_.empty() && c_.back().is_zero()) c_.pop_back();
}

Poly Poly::constant(Rational c) {
    Poly p;
    if (!c.is_zero()) p.c_.push_back(std::move(c));
    return p;
}

Poly Poly::monomial(std::size_t exponent, Rational coeff) {
    Poly p;
    if (!coeff.is_zero()) {
        p.c_.assign(exponent + 1, zero_rational());
        p.c_[exponent] = std::move(coeff);
    }
    return p;
}

Poly Poly::from_coeffs(std::vector<Rational> ascending) {
    Poly p;
    p.c_ = std::move(ascending);
    p.trim();
    return p;
}

const Rational& Poly::coeff(std::size_t k) const {
    return k < c_.size() ? c_[k] : zero_rational();
}

const Rational& Poly::leading() const {
    if (c_.empty()) throw std::domain_error("leading coefficient of zero polynomial");
    return c_.back();
}

Poly Poly::operator-() const {
    Poly r = *this;
    for (Rational& c : r.c_) c = -c;
    return r;
}

Poly& Poly::operator+=(const Poly& o) {
    if (c_.size() < o.c_.size()) c_.resize(o.c_.size(), zero_rational());
    for (std::size_t k = 0; k < o.c_.size(); ++k) c_[k] += o.c_[k];
    trim();
    return *this;
}

Poly& Poly::operator-=(const Poly& o) {
    if (c_.size() < o.c_.size()) c_.resize(o.c_.size(), zero_rational());
    for (std::size_t k = 0; k < o.c_.size(); ++k) c_[k] -= o.c_[k];
    trim();
    return *this;
}

Poly& Poly::operator*=(const Rational& s) {
    if (s.is_zero()) {
        c_.clear();
        return *this;
    }
    for (Rational& c : c_) c *= s;
    return *this;
}

Poly& Poly::add_scaled(const Poly& p, const Rational& c) {
    if (c.is_zero() || p.is_zero()) return *this;
    if (c_.size() < p.c_.size()) c_.resize(p.c_.size(), zero_rational());
    for (std::size_t k = 0; k < p.c_.size(); ++k) c_[k] += p.c_[k] * c;
    trim();
    return *this;
}

Poly operator*(const Poly& a, const Poly& b) {
    if (a.is_zero() || b.is_zero()) return Poly();
    Poly r;
    r.c_.assign(a.c_.size() + b.c_.size() - 1, zero_rational());
    for (std::size_t i = 0; i < a.c_.size(); ++i) {
        if (a.c_[i].is_zero()) continue;
        for (std::size_t j = 0; j < b.c_.size(); ++j)
            r.c_[i + j] += a.c_[i] * b.c_[j];
    }
    r.trim();
    return r;
}

Poly Poly::pow(unsigned long e) const {
    Poly r = constant(1);
    Poly base = *this;
    while (e > 0) {
        if (e & 1UL) r = r * base;
        e >>= 1UL;
        if (e > 0) base = base * base;
    }
    return r;
}

Poly Poly::compose(const Poly& inner) const {
    Poly r;
    for (std::size_t k = c_.size(); k-- > 0;) {
        r = r * inner;
        if (!c_[k].is_zero()) r += constant(c_[k]);
    }
    return r;
}

Rational Poly::eval(const Rational& v) const {
    Rational r;
    for (std::size_t k = c_.size(); k-- > 0;) r = r * v + c_[k];
    return r;
}

Poly Poly::derivative() const {
    Poly r;
    if (c_.size() <= 1) return r;
    r.c_.reserve(c_.size() - 1);
    for (std::size_t k = 1; k < c_.size(); ++k)
        r.c_.push_back(c_[k] * Rational(static_cast<long>(k)));
    r.trim();
    return r;
}

Poly Poly::integrate_from_zero() const {
    Poly r;
    if (c_.empty()) return r;
    r.c_.assign(c_.size() + 1, zero_rational());
    for (std::size_t k = 0; k < c_.size(); ++k)
        r.c_[k + 1] = c_[k] / Rational(static_cast<long>(k + 1));
    r.trim();
    return r;
}

std::string Poly::text(std::string_view var) const {
    if (c_.empty()) return "0";
    std::ostringstream os;
    bool first = true;
    for (std::size_t k = c_.size(); k-- > 0;) {
        const Rational& c = c_[k];
        if (c.is_zero()) continue;
        Rational a = c.abs();
        if (first) {
            if (c.sign() < 0) os << "-";
            first = false;
        } else {
            os << (c.sign() < 0 ? " - " : " + ");
        }
        bool unit = (a == Rational(1)) && k > 0;
        if (!unit) os << a.str();
        if (k > 0) {
            if (!unit) os << "*";
            os << var;
            if (k > 1) os << "^" << k;
        }
    }
    return os.str();
}

std::vector<std::string> Poly::coeff_strings() const {
    if (c_.empty()) return {"0"};
    std::vector<std::string> out;
    out.reserve(c_.size());
    for (const Rational& c : c_) out.push_back(c.str());
    return out;
}

Discrepancy Discrepancy::of(Poly difference) {
    Discrepancy d;
    if (difference.is_zero()) return d;
    if (difference.degree() == 0) {
        d.kind_ = Kind::Constant;
        d.constant_ = difference.constant_term();
        return d;
    }
    d.kind_ = Kind::NonConstant;
    std::size_t w = 1;
    while (difference.coeff(w).is_zero()) ++w;
    d.witness_ = w;
    d.difference_ = std::move(difference);
    return d;
}

const Rational& Discrepancy::constant() const {
    if (kind_ != Kind::Constant) throw std::logic_error("discrepancy is not Constant");
    return constant_;
}

const Poly& Discrepancy::difference() const {
    if (kind_ != Kind::NonConstant) throw std::logic_error("discrepancy is not NonConstant");
    return difference_;
}

std::size_t Discrepancy::witness_exponent() const {
    if (kind_ != Kind::NonConstant) throw std::logic_error("discrepancy is not NonConstant");
    return witness_;
}

std::string to_string(Discrepancy::Kind kind) {
    switch (kind) {
        case Discrepancy::Kind::Zero: return "Zero";
        case Discrepancy::Kind::Constant: return "Constant";
        case Discrepancy::Kind::NonConstant: return "NonConstant";
    }
    return "?";
}

Poly poly_add(const Poly& p, const Poly& q) { return p + q; }
Poly poly_sub(const Poly& p, const Poly& q) { return p - q; }
Poly poly_mul(const Poly& p, const Poly& q) { return p * q; }
Poly poly_compose(const Poly& p, const Poly& q) { return p.compose(q); }
Rational poly_eval(const Poly& p, const Rational& v) { return p.eval(v); }
Poly poly_derivative(const Poly& p) { return p.derivative(); }
Poly poly_integrate_from_zero(const Poly& p) { return p.integrate_from_zero(); }

Discrepancy classify_discrepancy(const Poly& lhs, const Poly& rhs) {
    return Discrepancy::of(lhs - rhs);
}

}  // namespace rbb
