#pragma once

#include <cstddef>
#include <string>
#include <utility>
#include <vector>

#include "rtz/rational.hpp"

namespace rtz {

/* Dense univariate polynomial over the rationals, coefficients stored
 * low-order first and kept trimmed (no trailing zeros; the zero
 * polynomial has an empty vector and degree -1). */
class DensePoly {
public:
    DensePoly() = default;
    explicit DensePoly(std::vector<BigRational> coeffs) : c_(std::move(coeffs)) { trim(); }

    static DensePoly zero() { return DensePoly(); }
    static DensePoly constant(const BigRational& a) {
        return DensePoly(std::vector<BigRational>{a});
    }
    static DensePoly monomial(const BigRational& a, size_t power) {
        if (a.is_zero()) return DensePoly();
        std::vector<BigRational> c(power + 1);
        c[power] = a;
        return DensePoly(std::move(c));
    }

    bool is_zero() const { return c_.empty(); }
    int degree() const { return static_cast<int>(c_.size()) - 1; }

    // Coefficient of x^i (zero outside the stored range).
    const BigRational& coeff(size_t i) const {
        static const BigRational kZero(0);
        return i < c_.size() ? c_[i] : kZero;
    }
    const BigRational& leading() const;
    const std::vector<BigRational>& coeffs() const { return c_; }

    BigRational eval(const BigRational& x) const;
    DensePoly derivative() const;

    // p(s * x): coefficient i picks up s^i.
    DensePoly scale_arg(const BigRational& s) const;
    // c * p
    DensePoly scaled(const BigRational& c) const;
    DensePoly monic() const; // leading coefficient forced to 1 (p nonzero)

    // Multiplicity of the root x = 0 (index of first nonzero coefficient);
    // 0 for the zero polynomial by convention.
    size_t order_at_zero() const;
    // p with x^{order_at_zero()} divided out.
    DensePoly shifted_down(size_t k) const;

    DensePoly operator-() const;
    friend DensePoly operator+(const DensePoly& a, const DensePoly& b);
    friend DensePoly operator-(const DensePoly& a, const DensePoly& b);
    friend DensePoly operator*(const DensePoly& a, const DensePoly& b);
    friend bool operator==(const DensePoly& a, const DensePoly& b) { return a.c_ == b.c_; }
    friend bool operator!=(const DensePoly& a, const DensePoly& b) { return a.c_ != b.c_; }

    std::string to_string(const std::string& var = "z") const;

private:
    void trim() {
        while (!c_.empty() && c_.back().is_zero()) c_.pop_back();
    }
    std::vector<BigRational> c_;
};

/* Quotient and remainder of a by b over Q (b nonzero). */
std::pair<DensePoly, DensePoly> divrem(const DensePoly& a, const DensePoly& b);
/* Exact division; throws domain_error when the remainder is nonzero. */
DensePoly divide_exact(const DensePoly& a, const DensePoly& b);

/* Monic gcd over Q via a primitive pseudo-remainder sequence over Z
 * (no rational blow-up mid-chain). gcd(p, 0) = monic(p); (0,0) rejected. */
DensePoly poly_gcd(const DensePoly& p, const DensePoly& q);

bool is_squarefree(const DensePoly& p); // p nonzero

/* Yun decomposition: returns [(f_1, 1), (f_2, 2), ...] with each f_i monic
 * squarefree, pairwise coprime, and p = lc * prod f_i^i. Factors with
 * f_i = 1 are omitted. */
std::vector<std::pair<DensePoly, unsigned>> squarefree_decomposition(const DensePoly& p);

/* x^d p(1/x) == p  /  == -p  (d = deg p).  p nonzero. */
bool is_self_inversive(const DensePoly& p);
bool is_anti_self_inversive(const DensePoly& p);

/* For p with only even-degree terms, the G with p(x) = G(x^2).
 * Throws domain_error if an odd coefficient is nonzero. */
DensePoly halve_even_poly(const DensePoly& p);

/* Strict upper bound on |root| for all complex roots (1 + max|c_i/c_n|);
 * never itself a root. deg p >= 1. */
BigRational cauchy_root_bound(const DensePoly& p);

/* Unit-circle localization for a (anti-)self-inversive g:
 * after dividing out all roots at w = 1 and w = -1 the remainder is
 * self-inversive of even degree 2s, and
 *     reduced(w) / w^s = q(w + 1/w)
 * for a real q of degree s. Roots of `reduced` on |w| = 1 (necessarily
 * simple pairs w, conj(w) if q is squarefree) correspond two-to-one to
 * roots of q in the open interval (-2, 2); roots of q outside [-2, 2]
 * correspond to reciprocal pairs (w, 1/w) off the circle. q(2) and q(-2)
 * are nonzero by construction. */
struct CircleToInterval {
    DensePoly q;
    unsigned mult_at_plus_one = 0;
    unsigned mult_at_minus_one = 0;
    DensePoly reduced;
};
CircleToInterval circle_to_interval(const DensePoly& g);

namespace detail {
/* Signed primitive pseudo-remainder chain starting from (f0, f1):
 * each successive element is the previous pair's remainder times a
 * positive scalar, negated, then divided by its (positive) content.
 * Both inputs are converted to primitive integer form first. The chain
 * ends before the first zero remainder. Used by gcd and the root counter. */
std::vector<DensePoly> signed_prs(const DensePoly& f0, const DensePoly& f1);
/* Integer-primitive form: p scaled by a positive rational so the
 * coefficients are coprime integers (sign of leading coeff preserved). */
DensePoly primitive_integer_form(const DensePoly& p);
} // namespace detail

} // namespace rtz
