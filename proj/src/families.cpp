#include "rtz/families.hpp"

#include <stdexcept>

#include "rtz/bernoulli.hpp"

namespace rtz {

namespace {

void require_k(unsigned k) {
    if (k < 1) throw std::domain_error("family: k must be >= 1");
}
void require_n(unsigned n) {
    if (n < 2) throw std::domain_error("family: n must be >= 2");
}

// B_{2j} / (2j)!
BigRational scaled_bernoulli(unsigned long two_j) {
    return bernoulli_number(two_j) / BigRational(factorial(two_j));
}

BigInt npow(unsigned n, unsigned long e) { return pow_int(BigInt(n), e); }

} // namespace

std::string variant_name(FamilyVariant v) {
    switch (v) {
        case FamilyVariant::Classic: return "classic";
        case FamilyVariant::RamanujanType: return "ramanujan_type";
        case FamilyVariant::LalinRogers: return "lalin_rogers";
        case FamilyVariant::Generalized: return "generalized";
    }
    return "?";
}

std::string FamilySpec::label() const {
    std::string s = variant_name(variant) + "(k=" + std::to_string(k);
    if (n) s += ", n=" + std::to_string(*n);
    if (ell) s += ", l=" + std::to_string(*ell);
    return s + ")";
}

DensePoly build_classic(unsigned k) {
    require_k(k);
    const unsigned long d = 2ul * k + 2;
    std::vector<BigRational> c(d + 1);
    for (unsigned long j = 0; j <= k + 1; ++j)
        c[d - 2 * j] = scaled_bernoulli(2 * j) * scaled_bernoulli(d - 2 * j);
    return DensePoly(std::move(c));
}

DensePoly build_ramanujan_type(unsigned k, unsigned n) {
    require_k(k);
    require_n(n);
    const unsigned long d = 2ul * k + 2;
    std::vector<BigRational> c(d + 1);
    for (unsigned long j = 0; j <= k + 1; ++j) {
        const unsigned long e = d - 2 * j; // z-exponent
        const BigRational factor{BigInt((npow(n, 2 * j) - 1) * (npow(n, e) - 1))};
        if (factor.is_zero()) continue;
        c[e] = factor * scaled_bernoulli(2 * j) * scaled_bernoulli(e) *
               BigRational(npow(n, e));
    }
    return DensePoly(std::move(c));
}

DensePoly build_lalin_rogers(unsigned k) {
    require_k(k);
    const unsigned long d = 2ul * k + 2;
    std::vector<BigRational> c(d + 1);
    for (unsigned long j = 0; j <= k + 1; ++j) {
        const unsigned long e = d - 2 * j;
        const BigRational factor{BigInt((npow(2, 2 * j) - 1) * (npow(2, e) - 1))};
        if (factor.is_zero()) continue;
        c[e] = factor * scaled_bernoulli(2 * j) * scaled_bernoulli(e);
    }
    return DensePoly(std::move(c));
}

HBuild build_H(unsigned k, unsigned n) {
    require_k(k);
    require_n(n);
    HBuild out;
    out.table.k = k;
    out.table.n = n;
    out.table.A.resize(k);
    std::vector<BigRational> h(2ul * k - 1);
    for (unsigned long j = 0; j < k; ++j) {
        BigRational a = BigRational{BigInt((npow(n, 2 * j + 2) - 1) * (npow(n, 2ul * k - 2 * j) - 1))} *
                        scaled_bernoulli(2 * j + 2) * scaled_bernoulli(2ul * k - 2 * j);
        out.table.A[j] = a;
        h[2ul * k - 2 - 2 * j] = std::move(a);
    }
    out.H = DensePoly(std::move(h));
    // expected common sign of the A_j; certification re-checks it per entry
    out.table.sign = (k % 2 == 0) ? -1 : 1;
    return out;
}

DensePoly build_generalized(unsigned k, unsigned ell) {
    require_k(k);
    if (ell < 1) throw std::domain_error("family: l must be >= 1");
    std::vector<BigRational> c(k + 2);
    for (unsigned long j = 0; j <= k + 1; ++j) {
        BigRational base = scaled_bernoulli(2 * j) * scaled_bernoulli(2ul * k + 2 - 2 * j);
        BigRational t = pow_rat(base, static_cast<long>(ell));
        if (((ell + 1) * j) % 2 != 0) t = -t;
        c[j] = std::move(t);
    }
    return DensePoly(std::move(c));
}

PolySymmetry poly_symmetry(const DensePoly& p) {
    if (p.is_zero()) throw std::domain_error("poly_symmetry: zero polynomial");
    if (is_self_inversive(p)) return PolySymmetry::Reciprocal;
    if (is_anti_self_inversive(p)) return PolySymmetry::AntiReciprocal;
    return PolySymmetry::Neither;
}

namespace {

void require_f_domain(unsigned k, const BigRational& x) {
    require_k(k);
    if (x.sign() < 0 || x > BigRational(2L * k - 2))
        throw std::domain_error("f_n: x outside [0, 2k-2]");
}

} // namespace

BigRational f_n_eval(unsigned k, unsigned n, const BigRational& x) {
    require_n(n);
    require_f_domain(k, x);
    if (!x.is_integer())
        throw std::domain_error("f_n_eval: exact evaluation needs integer x (use f_n_eval_ball)");
    const long xi = static_cast<long>(mpz_get_si(x.num().get_mpz_t()));
    const BigRational a{BigInt(npow(n, static_cast<unsigned long>(xi) + 2) - 1)};
    const BigRational b{BigInt(npow(n, 2ul * k - static_cast<unsigned long>(xi)) - 1)};
    return a * b;
}

std::pair<BigFloat, BigFloat> f_n_eval_ball(unsigned k, unsigned n, const BigRational& x,
                                            mpfr_prec_t prec) {
    require_n(n);
    require_f_domain(k, x);
    const BigFloat base = BigFloat::from(static_cast<long>(n), prec);
    const BigFloat one = BigFloat::from(1L, prec);

    auto dir_pow = [&](const BigRational& e, mpfr_rnd_t rnd) {
        BigFloat ef = BigFloat::from(e, prec, rnd);
        BigFloat r(prec);
        mpfr_pow(r.raw(), base.raw(), ef.raw(), rnd);
        return r;
    };
    const BigRational e1 = x + 2;
    const BigRational e2 = BigRational(2L * k) - x;
    // both factors are >= n^2 - 1 > 0, so endpoint products bound the ball
    BigFloat lo1(prec), lo2(prec), hi1(prec), hi2(prec), lo(prec), hi(prec);
    mpfr_sub(lo1.raw(), dir_pow(e1, MPFR_RNDD).raw(), one.raw(), MPFR_RNDD);
    mpfr_sub(lo2.raw(), dir_pow(e2, MPFR_RNDD).raw(), one.raw(), MPFR_RNDD);
    mpfr_sub(hi1.raw(), dir_pow(e1, MPFR_RNDU).raw(), one.raw(), MPFR_RNDU);
    mpfr_sub(hi2.raw(), dir_pow(e2, MPFR_RNDU).raw(), one.raw(), MPFR_RNDU);
    mpfr_mul(lo.raw(), lo1.raw(), lo2.raw(), MPFR_RNDD);
    mpfr_mul(hi.raw(), hi1.raw(), hi2.raw(), MPFR_RNDU);
    return {lo, hi};
}

BigRational g_n_bound(unsigned k, unsigned n) {
    require_k(k);
    require_n(n);
    const BigInt top = npow(n, k + 1) - 1;
    return BigRational(top * top, 3 * (npow(2, 2ul * k) - 1));
}

BigRational g_n_at(unsigned k, unsigned n, unsigned x) {
    return f_n_eval(k, n, BigRational(static_cast<long>(x))) /
           f_n_eval(k, 2, BigRational(static_cast<long>(x)));
}

BigRational c_constant(unsigned k, unsigned n) {
    require_k(k);
    require_n(n);
    const BigInt nk1 = npow(n, k + 1) - 1;
    const BigInt num = 3 * (1 + BigInt(k)) * (npow(n, 2ul * k) - 1) * (BigInt(n) * n - 1) *
                       (npow(2, 2ul * k) - 1) * (npow(2, 2ul * k + 1) - 1);
    const BigInt den = npow(2, 2ul * k) * (2 * BigInt(k) + 1) * nk1 * nk1 *
                       (npow(2, 2ul * k + 2) - 1);
    return BigRational(num, den);
}

} // namespace rtz
