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

#include "rbb/arith.hpp"

#include <atomic>
#include <mutex>
#include <ostream>
#include <stdexcept>
#include <vector>

namespace rbb {

namespace {

mpq_class make_canonical(const BigInt& num, const BigInt& den) {
    if (den == 0) throw std::domain_error("rational with zero denominator");
    mpq_class q;
    mpq_set_num(q.get_mpq_t(), num.get_mpz_t());
    mpq_set_den(q.get_mpq_t(), den.get_mpz_t());
    q.canonicalize();  // lowest terms, positive denominator
    return q;
}

}  // namespace

Rational::Rational(long num, long den) : Rational(BigInt(num), BigInt(den)) {}

Rational::Rational(const BigInt& num, const BigInt& den) : v_(make_canonical(num, den)) {}

Rational rat(const BigInt& num, const BigInt& den) { return Rational(num, den); }
Rational rat(long num, long den) { return Rational(num, den); }

Rational Rational::parse(std::string_view text) {
    auto parse_int = [](std::string_view s) {
        if (s.empty()) throw std::invalid_argument("empty integer in rational");
        BigInt z;
        if (mpz_set_str(z.get_mpz_t(), std::string(s).c_str(), 10) != 0)
            throw std::invalid_argument("malformed integer '" + std::string(s) + "'");
        return z;
    };
    auto slash = text.find('/');
    if (slash == std::string_view::npos) return Rational(parse_int(text));
    return Rational(parse_int(text.substr(0, slash)), parse_int(text.substr(slash + 1)));
}

Rational Rational::operator-() const {
    Rational r;
    mpq_neg(r.v_.get_mpq_t(), v_.get_mpq_t());
    return r;
}

Rational& Rational::operator/=(const Rational& o) {
    if (o.is_zero()) throw std::domain_error("rational division by zero");
    v_ /= o.v_;
    return *this;
}

Rational Rational::reciprocal() const {
    if (is_zero()) throw std::domain_error("reciprocal of zero");
    Rational r;
    mpq_inv(r.v_.get_mpq_t(), v_.get_mpq_t());
    return r;
}

Rational Rational::pow(long e) const {
    if (e < 0) return reciprocal().pow(-e);
    Rational r;
    mpz_pow_ui(mpq_numref(r.v_.get_mpq_t()), mpq_numref(v_.get_mpq_t()),
               static_cast<unsigned long>(e));
    mpz_pow_ui(mpq_denref(r.v_.get_mpq_t()), mpq_denref(v_.get_mpq_t()),
               static_cast<unsigned long>(e));
    return r;  // powers of a canonical fraction stay canonical
}

Rational Rational::abs() const {
    Rational r;
    mpq_abs(r.v_.get_mpq_t(), v_.get_mpq_t());
    return r;
}

std::string Rational::str() const {
    if (v_.get_den() == 1) return v_.get_num().get_str();
    return v_.get_num().get_str() + "/" + v_.get_den().get_str();
}

std::ostream& operator<<(std::ostream& os, const Rational& r) { return os << r.str(); }

namespace {

// Pascal-triangle memo. Built row by row under a mutex; reads of rows
// below ready_rows are lock-free afterwards.
struct BinomialTable {
    std::vector<std::vector<BigInt>> rows;
    std::atomic<std::size_t> ready_rows{0};
    std::mutex grow;
};

std::size_t g_memo_limit = 256;

BinomialTable& table() {
    static BinomialTable t;
    return t;
}

const BigInt& memo_binomial(std::size_t n, std::size_t k) {
    BinomialTable& t = table();
    if (n >= t.ready_rows.load(std::memory_order_acquire)) {
        std::lock_guard<std::mutex> lock(t.grow);
        for (std::size_t r = t.rows.size(); r <= n; ++r) {
            std::vector<BigInt> row(r + 1, BigInt(1));
            for (std::size_t c = 1; c < r; ++c)
                row[c] = t.rows[r - 1][c - 1] + t.rows[r - 1][c];
            t.rows.push_back(std::move(row));
        }
        t.ready_rows.store(t.rows.size(), std::memory_order_release);
    }
    return t.rows[n][k];
}

}  // namespace

void set_binomial_memo_limit(std::size_t rows) { g_memo_limit = rows; }
std::size_t binomial_memo_limit() { return g_memo_limit; }

BigInt binomial(unsigned long n, long k) {
    if (k < 0 || static_cast<unsigned long>(k) > n) return BigInt(0);
    if (n < g_memo_limit) return memo_binomial(n, static_cast<std::size_t>(k));
    BigInt r;
    mpz_bin_uiui(r.get_mpz_t(), n, static_cast<unsigned long>(k));
    return r;
}

BigInt factorial(unsigned long n) {
    BigInt r;
    mpz_fac_ui(r.get_mpz_t(), n);
    return r;
}

}  // namespace rbb
