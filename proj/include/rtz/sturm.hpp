#pragma once

#include <utility>
#include <vector>

#include "rtz/poly.hpp"

namespace rtz {

/* Sign-variation chain for exact real-root counting.  chain[0] is the
 * squarefree part of the input (integer-primitive), chain[1] its
 * derivative's image, and every later entry equals the negated remainder
 * of its two predecessors times a positive scalar, so the sign-variation
 * count V(x) is the classical one.  V(a) - V(b) = number of distinct
 * real roots in (a, b] whenever a is not a root. */
class SturmChain {
public:
    static SturmChain build(const DensePoly& p); // p nonzero

    const DensePoly& squarefree_part() const { return chain_.front(); }
    const std::vector<DensePoly>& elements() const { return chain_; }

    int variations_at(const BigRational& x) const;
    int variations_at_plus_infinity() const;
    int variations_at_minus_infinity() const;

private:
    std::vector<DensePoly> chain_;
};

/* Number of DISTINCT real roots of q in the open interval (a, b).
 * Requires a < b and q(a) != 0 != q(b); endpoint roots raise domain_error
 * (perturb the endpoints, e.g. with widen_to_nonroots). */
int count_real_roots_in(const DensePoly& q, const BigRational& a, const BigRational& b);

/* Distinct real roots on the whole line. */
int count_distinct_real_roots(const DensePoly& q);

/* Moves each endpoint outward in shrinking steps (starting at (b-a)/10^6)
 * until neither is a root of q, so the closed interval's roots are all
 * interior to the widened one. */
std::pair<BigRational, BigRational> widen_to_nonroots(const DensePoly& q,
                                                      BigRational a, BigRational b);

} // namespace rtz
