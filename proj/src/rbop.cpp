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

#include "rbb/rbop.hpp"

#include <stdexcept>

#include "rbb/bernoulli.hpp"

namespace rbb {

struct RBOperator::Impl {
    Rational weight;
    std::string label;
    std::function<Poly(std::size_t)> make;
    AppendCache<Poly> images;
};

RBOperator RBOperator::standard() {
    auto impl = std::make_shared<Impl>();
    impl->weight = Rational(-1);
    impl->label = "standard";
    impl->make = [](std::size_t n) { return power_sum_poly(static_cast<long>(n)); };
    return RBOperator(std::move(impl));
}

RBOperator RBOperator::phi() const {
    auto base = impl_;
    auto impl = std::make_shared<Impl>();
    impl->weight = base->weight;
    impl->label = "phi(" + base->label + ")";
    impl->make = [base](std::size_t n) {
        // phi(P)(a^n) = -P(a^n) - weight * a^n
        Poly r = -base->images.get(n, [&](std::size_t k, const std::deque<Poly>&) {
            return base->make(k);
        });
        r.add_scaled(Poly::monomial(n, 1), -base->weight);
        return r;
    };
    return RBOperator(std::move(impl));
}

RBOperator RBOperator::scaled(const Rational& mu) const {
    if (mu.is_zero()) throw std::domain_error("scaling an RB operator by zero");
    auto base = impl_;
    auto impl = std::make_shared<Impl>();
    impl->weight = mu * base->weight;
    impl->label = "scale(" + base->label + "," + mu.str() + ")";
    impl->make = [base, mu](std::size_t n) {
        return base->images.get(n, [&](std::size_t k, const std::deque<Poly>&) {
                   return base->make(k);
               }) *
               mu;
    };
    return RBOperator(std::move(impl));
}

const Rational& RBOperator::weight() const { return impl_->weight; }
const std::string& RBOperator::label() const { return impl_->label; }

const Poly& RBOperator::image(std::size_t n) const {
    return impl_->images.get(
        n, [this](std::size_t k, const std::deque<Poly>&) { return impl_->make(k); });
}

AlgebraElement RBOperator::apply(const AlgebraElement& p) const {
    Poly out;
    for (int k = 0; k <= p.degree(); ++k) {
        const Rational& c = p.coeff(static_cast<std::size_t>(k));
        if (!c.is_zero()) out.add_scaled(image(static_cast<std::size_t>(k)), c);
    }
    return out;
}

void RBOperator::warm(std::size_t max_n) const { image(max_n); }

const RBOperator& standard_rb() {
    static RBOperator op = RBOperator::standard();
    return op;
}

Discrepancy check_axiom(const RBOperator& op, long n, long m) {
    if (n < 0 || m < 0) throw std::domain_error("check_axiom requires n, m >= 0");
    auto un = static_cast<std::size_t>(n);
    auto um = static_cast<std::size_t>(m);
    Poly lhs = op.image(un) * op.image(um);
    Poly arg = op.image(un) * Poly::monomial(um, 1);
    arg += Poly::monomial(un, 1) * op.image(um);
    arg.add_scaled(Poly::monomial(un + um, 1), op.weight());
    return classify_discrepancy(lhs, op.apply(arg));
}

std::optional<Discrepancy> check_statement2(const RBOperator& op, long n) {
    if (n < 0) throw std::domain_error("check_statement2 requires n >= 0");
    const Rational& w = op.weight();
    if (w.is_zero()) throw std::domain_error("check_statement2 requires nonzero weight");
    const Poly& g = op.image(0);  // R(1)
    if (g.degree() != 1 || !g.constant_term().is_zero())
        return std::nullopt;  // R(1) is not a scalar multiple of the generator
    Poly lhs = op.apply(g.pow(static_cast<unsigned long>(n)));
    Poly inner = g * (-w.reciprocal());
    Poly rhs = power_sum_poly(n).compose(inner) * (-w).pow(n + 1);
    return classify_discrepancy(lhs, rhs);
}

Discrepancy check_lemma(long n) {
    if (n < 1) throw std::domain_error("check_lemma requires n >= 1");
    const RBOperator& op = standard_rb();
    RBOperator q = op.phi();
    auto un = static_cast<std::size_t>(n);
    Poly lhs = op.image(un) - Poly::monomial(un, 1);
    Poly bn = (Poly::constant(1) - Poly::variable()).pow(un);
    Poly rhs = (q.apply(bn) - bn) * Rational(n % 2 == 0 ? -1 : 1);
    return classify_discrepancy(lhs, rhs);
}

Discrepancy check_triple_expansion(long n, long m, long l) {
    if (n < 0 || m < 0 || l < 0)
        throw std::domain_error("check_triple_expansion requires n, m, l >= 0");
    const RBOperator& op = standard_rb();
    auto un = static_cast<std::size_t>(n);
    auto um = static_cast<std::size_t>(m);
    auto ul = static_cast<std::size_t>(l);
    const Poly& rn = op.image(un);
    const Poly& rm = op.image(um);
    const Poly& rl = op.image(ul);
    Poly lhs = rn * rm * rl;
    Poly arg = rn * rl * Poly::monomial(um, 1);
    arg += rm * rl * Poly::monomial(un, 1);
    arg += rn * rm * Poly::monomial(ul, 1);
    arg -= rn * Poly::monomial(um + ul, 1);
    arg -= rm * Poly::monomial(un + ul, 1);
    arg -= rl * Poly::monomial(un + um, 1);
    arg += Poly::monomial(un + um + ul, 1);
    return classify_discrepancy(lhs, op.apply(arg));
}

}  // namespace rbb
