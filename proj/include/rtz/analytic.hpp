#pragma once

#include <vector>

#include "rtz/bigfloat.hpp"
#include "rtz/rational.hpp"

namespace rtz {

/* zeta(s) for integer s >= 2 by direct summation with an Euler-Maclaurin
 * tail, accurate to ~2^-(prec) relative. */
BigFloat zeta_int(long s, mpfr_prec_t prec);

/* x^{-k} (zeta(2k+1)/2 + sum_{n=1}^{terms} n^{-2k-1}/(e^{2xn} - 1)) for
 * nonzero integer k, together with an upper bound on the truncation error
 * of the returned value. The n = 0 term of the series is singular, so
 * summation starts at n = 1 (reports flag this convention). For k <= -1
 * the zeta value is the exact rational -B_{2|k|}/(2|k|). */
struct GValue {
    BigFloat value;
    BigFloat tail_bound;
};
GValue eval_G(long k, const BigFloat& x, unsigned long terms, mpfr_prec_t prec);

/* Both sides of the odd-zeta reflection identity
 *   G_k(alpha) = (-1)^k G_k(beta)
 *                - 2^{2k} sum_{j=0}^{k+1} (-1)^j [B_{2j}/(2j)!]
 *                  [B_{2k+2-2j}/((2k+2-2j)!)] alpha^{k+1-j} beta^j
 * with beta = pi^2/alpha. A (-1)^{j-1} sign inside the finite sum would
 * fail already at k = 1, alpha = beta = pi against the classical zeta(3)
 * closed form; (-1)^j is the convention that checks out and is what this
 * uses (see finite_sum_coefficients). */
struct IdentityResidual {
    long k = 0;
    unsigned long terms_used = 0;
    unsigned precision_digits = 0;
    BigFloat alpha, beta;
    BigFloat lhs, rhs;
    BigFloat residual; // |lhs - rhs|
    BigFloat bound;    // truncation + rounding allowance
    bool within_bound = false;
};
IdentityResidual check_ramanujan_identity(unsigned k, const BigFloat& alpha,
                                          unsigned long terms, unsigned precision_digits);

/* The exact rational coefficients (-1)^j B_{2j} B_{2k+2-2j} / ((2j)!(2k+2-2j)!)
 * of the identity's finite sum, j = 0..k+1. Up to the alternating sign these
 * are the classic family's coefficients, which is tested exactly. */
std::vector<BigRational> finite_sum_coefficients(unsigned k);

} // namespace rtz
