#pragma once

#include <vector>

#include "rtz/rational.hpp"

namespace rtz {

/* Bernoulli number B_m under the B_1 = -1/2 convention, computed from the
 * defining recurrence sum_{j=0}^{m} C(m+1, j) B_j = 0 and memoized in a
 * process-wide cache (safe for concurrent readers). */
BigRational bernoulli_number(unsigned long m);

/* B_m(x) = sum_{j=0}^{m} C(m, j) B_j x^{m-j}.  B_m(0) = B_m. */
BigRational bernoulli_polynomial(unsigned long m, const BigRational& x);

/* Decides, exactly, the two-sided bound
 *     2 (2m)! / (2 pi)^{2m}  <  |B_{2m}|  <  2 (2m)! / ((2 pi)^{2m} (1 - 2^{1-2m}))
 * for m >= 1 using rational enclosures of pi that tighten until both
 * comparisons are strict.  Throws precision_exhausted if the escalation cap
 * is hit while still undecided (cannot happen for true strict inequalities). */
bool check_bernoulli_bounds(unsigned long m);

/* Both sides of the quadratic Bernoulli-polynomial convolution
 *     sum_{j=0}^{m} C(m, j) B_j(a) B_{m-j}(b)
 *       = m (a + b - 1) B_{m-1}(a + b) - (m - 1) B_m(a + b)
 * together with the variant that uses (a + b + 1) in place of (a + b - 1);
 * the variant fails already at m = 2, a = b = 0. */
struct ConvolutionCheck {
    BigRational lhs;
    BigRational rhs;          // (a + b - 1) form
    BigRational rhs_plus_one; // (a + b + 1) form
    bool equal;               // lhs == rhs
    bool equal_plus_one;      // lhs == rhs_plus_one
};

ConvolutionCheck convolution_identity_check(unsigned long m, const BigRational& a,
                                            const BigRational& b);

} // namespace rtz
