#include "rtz/criteria.hpp"

#include <stdexcept>

#include "rtz/bernoulli.hpp"

namespace rtz {

LakatosResult lakatos_check(const DensePoly& p) {
    if (p.is_zero() || !is_self_inversive(p))
        throw std::domain_error("lakatos_check: polynomial must be self-inversive");
    LakatosResult r;
    const BigRational& lead = p.leading();
    r.lhs = abs(lead);
    r.sum = BigRational(0);
    for (size_t i = 0; i < p.coeffs().size(); ++i)
        r.sum += abs(p.coeff(i) - lead);
    r.holds = r.lhs >= r.sum;
    r.strict = r.lhs > r.sum;
    return r;
}

namespace {

BigRational schinzel_objective(const CoeffTable& A, const BigRational& c) {
    const BigRational& last = A.A.back();
    BigRational f(0);
    for (const auto& a : A.A) f += abs(c * a - last);
    return f;
}

} // namespace

SchinzelMin schinzel_min_over_c(const CoeffTable& A) {
    if (A.A.empty()) throw std::domain_error("schinzel_min_over_c: empty coefficient table");
    for (const auto& a : A.A)
        if (a.is_zero())
            throw std::domain_error("schinzel_min_over_c: zero coefficient has no breakpoint");
    const BigRational& last = A.A.back();
    SchinzelMin best;
    bool first = true;
    for (const auto& a : A.A) {
        const BigRational c = last / a;
        const BigRational v = schinzel_objective(A, c);
        if (first || v < best.min_value || (v == best.min_value && c < best.argmin_c)) {
            best.min_value = v;
            best.argmin_c = c;
            first = false;
        }
    }
    return best;
}

ChainChecks inequality_chain_check(unsigned k, unsigned n, const BigRational& c) {
    if (c.sign() <= 0) throw std::domain_error("inequality_chain_check: c must be > 0");
    const CoeffTable table = build_H(k, n).table;

    ChainChecks out;
    out.c = c;
    out.sum_c_abs_A = BigRational(0);
    for (const auto& a : table.A) out.sum_c_abs_A += c * abs(a);

    const unsigned long e = 2ul * k + 2;
    out.upper_bound = pow_rat(BigRational(2), static_cast<long>(e)) * c /
                      BigRational(factorial(e)) * g_n_bound(k, n) *
                      BigRational(2L * k + 1) *
                      (BigRational(1) - pow_rat(BigRational(2), -static_cast<long>(e))) *
                      abs(bernoulli_number(e));
    out.sum_below_bound = out.sum_c_abs_A <= out.upper_bound;

    out.lhs_dominance = BigRational(1L + k) * abs(table.A.back());
    out.dominance_holds = out.lhs_dominance > out.sum_c_abs_A;

    out.c_nk = c_constant(k, n);
    out.c_below_cnk = c < out.c_nk;
    return out;
}

CriterionReport schinzel_criterion_check(const CoeffTable& A) {
    if (A.k < 1 || A.n < 2)
        throw std::domain_error("schinzel_criterion_check: table lacks valid (k, n)");
    CriterionReport rep;

    // H has only even-degree terms; the dominance test is run on its
    // compressed w = z^2 form so the zero gap coefficients don't dilute it.
    const auto lak = lakatos_check(halve_even_poly(build_H(A.k, A.n).H));
    rep.lakatos_holds = lak.holds;
    rep.lakatos_strict = lak.strict;

    const auto mn = schinzel_min_over_c(A);
    rep.schinzel_min = mn.min_value;
    rep.schinzel_argmin_c = mn.argmin_c;
    const BigRational target = abs(A.A.back());
    rep.schinzel_holds = rep.schinzel_min <= target;
    rep.schinzel_strict = rep.schinzel_min < target;

    rep.c_constant_value = c_constant(A.k, A.n);
    rep.chain_checks = inequality_chain_check(A.k, A.n, rep.c_constant_value / 2);
    return rep;
}

Identity515 identity_5_15_check(unsigned k) {
    if (k < 1) throw std::domain_error("identity_5_15_check: k must be >= 1");
    const BigRational half(1, 2);

    Identity515 out;
    out.lhs = BigRational(0);
    out.signed_sum = BigRational(0);
    for (unsigned long j = 0; j < k; ++j) {
        const unsigned long m1 = 2 * j + 2;
        const unsigned long m2 = 2ul * k - 2 * j;
        const BigRational d1 = bernoulli_polynomial(m1, half) - bernoulli_number(m1);
        const BigRational d2 = bernoulli_polynomial(m2, half) - bernoulli_number(m2);
        const BigRational term = BigRational(binomial(2ul * k + 2, m1)) * d1 * d2;
        out.lhs += abs(term);
        out.signed_sum += term;
    }

    const BigRational factor = BigRational(4) * BigRational(2L * k + 1) *
                               (BigRational(1) - pow_rat(BigRational(2), -(2L * k + 2)));
    out.signed_rhs = factor * bernoulli_number(2ul * k + 2);
    if (k % 2 != 0) out.signed_rhs = -out.signed_rhs;
    out.rhs = abs(out.signed_rhs);
    out.equal = out.lhs == out.rhs;
    return out;
}

} // namespace rtz
