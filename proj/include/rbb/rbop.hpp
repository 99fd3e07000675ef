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

#include <functional>
#include <memory>
#include <optional>
#include <string>

#include "rbb/append_cache.hpp"
#include "rbb/arith.hpp"
#include "rbb/poly.hpp"

namespace rbb {

/// An element of the one-generated algebra F[a]: a polynomial in the
/// generator a.
using AlgebraElement = Poly;

/**
 * A Rota-Baxter operator on F[a], represented extensionally by its
 * weight and the memoized table of basis images a^n -> image(n). This
 * makes the axiom checker uniform across the summation operator, its
 * phi image and its scalings. Copies share the image table.
 **/
class RBOperator {
public:
    /// The summation operator: weight -1, image(n) = F_n(a), image(0) = a.
    static RBOperator standard();

    /// phi(R) = -R - weight * id; same weight, involution.
    RBOperator phi() const;

    /// mu * R, weight mu * weight(R). Throws std::domain_error on mu = 0.
    RBOperator scaled(const Rational& mu) const;

    const Rational& weight() const;
    const std::string& label() const;

    /// Image of the basis monomial a^n; memoized, write-once per degree.
    const Poly& image(std::size_t n) const;

    /// Linear extension over the monomial basis.
    AlgebraElement apply(const AlgebraElement& p) const;

    void warm(std::size_t max_n) const;

private:
    struct Impl;
    explicit RBOperator(std::shared_ptr<const Impl> impl) : impl_(std::move(impl)) {}
    std::shared_ptr<const Impl> impl_;
};

/// Shared standard operator (one image table for the whole process).
const RBOperator& standard_rb();

/// Classifies R(a^n)R(a^m) - R(R(a^n)a^m + a^n R(a^m) + weight * a^{n+m}).
Discrepancy check_axiom(const RBOperator& op, long n, long m);

/**
 * Classifies R(g^n) - (-w)^{n+1} F_n(-g/w) where g = R(1) and w is the
 * weight; the generator substitution a -> R(1) makes the formula apply
 * to scalings of the standard operator. Returns nullopt (inapplicable)
 * when R(1) is not a nonzero scalar multiple of a. Throws
 * std::domain_error for weight 0.
 **/
std::optional<Discrepancy> check_statement2(const RBOperator& op, long n);

/// R(a^n) - a^n vs (-1)^{n+1} (phi(R)(b^n) - b^n) with b = 1 - a, for
/// the standard operator. Requires n >= 1.
Discrepancy check_lemma(long n);

/// The three-factor expansion for the standard operator:
/// R(a^n)R(a^m)R(a^l) against R of the seven-term combination, with the
/// bracketing transcribed literally.
Discrepancy check_triple_expansion(long n, long m, long l);

}  // namespace rbb
