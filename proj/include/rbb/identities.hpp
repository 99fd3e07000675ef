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
#include <string>
#include <utility>
#include <vector>

#include "rbb/poly.hpp"

namespace rbb {

// One verifier per identity. Each expands both sides into a canonical
// Poly (scalar identities use a degree-0 polynomial) and classifies the
// difference. Sum ranges written "sum_{l>=0}" truncate by the rule: a
// term is included iff every binomial in it is nonvanishing and every
// divided index is >= 1; vanishing binomials are checked first.

/// F_n(y) = (-1)^{n+1} F_n(-1-y); n >= 1.
Discrepancy verify_powersum_symmetry(long n);

/// B_n(x) = (-1)^n B_n(1-x); n >= 1.
Discrepancy verify_bernoulli_symmetry(long n);

/// DB_i(x)DB_j(x) - DB_i DB_j as a sum over even shifts, constants kept
/// explicitly on both sides; i, j >= 1. (DB = divided Bernoulli.)
Discrepancy verify_almost_nielsen(long i, long j);

/// The classical product formula for DB_i(x)DB_j(x); i, j >= 1.
Discrepancy verify_nielsen(long i, long j);

/// Scalar convolution of Bernoulli numbers; n, m >= 0.
Discrepancy verify_agoh(long n, long m);

/// sum_r (-1)^r / C(n,r) = (1+(-1)^n)(n+1)/(n+2); n >= 0.
Discrepancy verify_altern_binom(long n);

/// The pair-product summation identity; N >= 2.
Discrepancy verify_gessel(long N);

/// sum_k B_k(x)B_{N-k}(x) = 2/(N+2) sum_t C(N+2,2t+2) B_{2t} B_{N-2t}(x); N >= 0.
Discrepancy verify_kim_pair_sum(long N);

/// Scalar convolution with harmonic weight; N >= 4.
Discrepancy verify_miki(long N);

/// Scalar convolution, integer-weighted form; N >= 4.
Discrepancy verify_matiyasevich(long N);

/// Triple product DB_i(x)DB_j(x)DB_k(x) against the double-sum
/// expansion; stated up to an (unspecified) constant, so Constant
/// passes; i, j, k >= 1.
Discrepancy verify_triple_product(long i, long j, long k);

/// Antiderivative form of the triple product; up to constant;
/// i, j, k >= 1. The companion derivative route is exposed separately.
Discrepancy verify_triple_integral(long i, long j, long k);

/// Independent route for the above: differentiates the transcribed RHS
/// and compares against the direct triple product; expected Zero.
Discrepancy verify_triple_integral_derivative(long i, long j, long k);

/// 1/3! sum_{i+j+k=N} DB_i(x)DB_j(x)DB_k(x) against the closed form;
/// the harmonic arguments are resolved as H_{N-1}; up to constant; N >= 3.
Discrepancy verify_triple_sum(long N);

/// S(r,n) = sum over compositions of n into r parts of
/// B_{i_1}(x)...B_{i_r}(x); positive_only restricts parts to >= 1.
Poly sum_products_direct(long r, long n, bool positive_only = false);

/// S(r,n) against the Bernoulli-basis decomposition; up to constant.
Discrepancy verify_sum_decomposition(long r, long n);

/// S(3,n) against its explicit three-term closed form; up to constant.
Discrepancy verify_kim3(long n);

/// sum_{s=1}^{n-1} C(s,m) H_s = C(n,m+1)(H_n - 1/(m+1)); 1 <= m+1 <= n.
Discrepancy verify_gkp_binomial_harmonic(long n, long m);

/// sum_{s=1}^{n} H_s/s = (H_n^2 + H_{n,2})/2; n >= 1.
Discrepancy verify_gkp_harmonic_square(long n);

/// Both sides of the pair-product identity at x = 0, scaled by 2/N,
/// must equal the corresponding sides of the scalar convolution
/// (even N >= 4).
Discrepancy verify_ladder_miki(long N);

/// Both sides of the Kim pair sum at x = 0, via (N+2)*side - 2(N+2)B_N,
/// must equal the corresponding Matiyasevich sides (even N >= 4).
Discrepancy verify_ladder_matiyasevich(long N);

/// The r = 2 sum decomposition differs from the Kim pair-sum RHS by a
/// constant only; n >= 0.
Discrepancy verify_remark4(long n);

// --- catalog ---------------------------------------------------------

/**
 * Registry entry for one named verifier: arity, parameter constraints,
 * the expected discrepancy class (Constant means Constant-or-Zero), the
 * default sweep ranges (the acceptance ranges) and an optional filter
 * narrowing the default box (e.g. n + m <= 40).
 **/
struct IdentitySpec {
    std::string name;
    std::vector<std::string> param_names;
    std::function<bool(const std::vector<long>&)> constraint;
    std::string constraint_text;
    Discrepancy::Kind expected = Discrepancy::Kind::Zero;
    std::function<Discrepancy(const std::vector<long>&)> run;
    std::vector<std::pair<long, long>> default_ranges;
    std::function<bool(const std::vector<long>&)> sweep_filter;  // may be null
    std::string note;        // documented reading, copied into reports
    bool warm_images = false;  // warm RB operator images before sweeping

    int arity() const { return static_cast<int>(param_names.size()); }
    bool accepts(Discrepancy::Kind kind) const {
        if (kind == Discrepancy::Kind::Zero) return true;
        return expected == Discrepancy::Kind::Constant && kind == Discrepancy::Kind::Constant;
    }
};

/// All registered verifiers, each exactly once; iteration order is the
/// sweep order.
const std::vector<IdentitySpec>& identity_catalog();

/// nullptr when the name is unknown.
const IdentitySpec* find_identity(const std::string& name);

/// One verification outcome: what ran, with which parameters, how the
/// difference classified, and whether that satisfies the expected class.
struct VerificationReport {
    std::string identity;
    std::vector<long> params;
    Discrepancy discrepancy;
    bool pass = false;
    double elapsed_ms = 0.0;
    std::string note;
};

/// Runs one parameter tuple (constraint already checked by the caller).
VerificationReport run_identity(const IdentitySpec& spec, const std::vector<long>& params);

}  // namespace rbb
