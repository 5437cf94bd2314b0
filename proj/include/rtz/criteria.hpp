#pragma once

#include "rtz/families.hpp"
#include "rtz/poly.hpp"

namespace rtz {

/* Coefficient-dominance test for a self-inversive p = sum a_i z^i of
 * degree d: all zeros lie on the unit circle when
 * |a_d| >= sum_{i=0}^{d} |a_i - a_d|, and are simple when strict. */
struct LakatosResult {
    bool holds = false;
    bool strict = false;
    BigRational lhs; // |a_d|
    BigRational sum; // sum |a_i - a_d|
};
LakatosResult lakatos_check(const DensePoly& p);

/* Exact minimum of F(c) = sum_j |c A_j - A_{k-1}| over real c. F is convex
 * piecewise-linear with breakpoints A_{k-1}/A_j, so the minimum sits on a
 * breakpoint; every breakpoint is evaluated. Any A_j = 0 is rejected. */
struct SchinzelMin {
    BigRational min_value;
    BigRational argmin_c;
};
SchinzelMin schinzel_min_over_c(const CoeffTable& A);

/* Diagnostic transcript of the proof's inequality links at a given c > 0:
 * (a) sum_j c|A_j| against the closed-form upper bound
 *     2^{2k+2} c/(2k+2)! * g_bound * (2k+1)(1 - 2^{-2k-2}) |B_{2k+2}|,
 * (b) (1+k)|A_{k-1}| against sum_j c|A_j|,
 * (c) c against c_{n,k}.
 * Never feeds any verdict; the criterion itself is decided by the exact
 * minimization above. */
struct ChainChecks {
    BigRational c;
    BigRational sum_c_abs_A;
    BigRational upper_bound;
    bool sum_below_bound = false; // (a)
    BigRational lhs_dominance;    // (1+k)|A_{k-1}|
    bool dominance_holds = false; // (b)
    BigRational c_nk;
    bool c_below_cnk = false; // (c)
};
ChainChecks inequality_chain_check(unsigned k, unsigned n, const BigRational& c);

struct CriterionReport {
    bool lakatos_holds = false;
    bool lakatos_strict = false;
    BigRational schinzel_min;
    BigRational schinzel_argmin_c;
    bool schinzel_holds = false;
    bool schinzel_strict = false;
    BigRational c_constant_value;
    ChainChecks chain_checks;
};

/* Full criterion evaluation for the table of an H-polynomial: the exact
 * Schinzel minimization, the Lakatos test on H itself, the comparison
 * constant, and the chain transcript at c = c_{n,k}/2. */
CriterionReport schinzel_criterion_check(const CoeffTable& A);

/* Closed form for the absolute convolution sum
 *   sum_{j=0}^{k-1} C(2k+2, 2j+2) |D_{2j+2} D_{2k-2j}|,
 *   D_m = B_m(1/2) - B_m(0):
 * it equals |4 (2k+1)(1 - 2^{-2k-2}) B_{2k+2}|. Both absolute sides are
 * compared exactly; the signed forms are recorded as well (each summand
 * carries the fixed sign (-1)^{k+1}, while the positive closed form
 * carries (-1)^k B_{2k+2} > 0). */
struct Identity515 {
    BigRational lhs; // absolute sum
    BigRational rhs; // absolute closed form
    bool equal = false;
    BigRational signed_sum; // sum without absolute values
    BigRational signed_rhs; // (-1)^k 4(2k+1)(1-2^{-2k-2}) B_{2k+2}
};
Identity515 identity_5_15_check(unsigned k);

} // namespace rtz
