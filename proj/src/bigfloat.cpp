#include "rtz/bigfloat.hpp"

#include <cstdio>
#include <mutex>
#include <stdexcept>
#include <vector>

namespace rtz {

BigFloat BigFloat::pi(mpfr_prec_t prec, mpfr_rnd_t rnd) {
    static std::mutex mu;
    std::lock_guard<std::mutex> lock(mu);
    BigFloat r(prec);
    mpfr_const_pi(r.v_, rnd);
    return r;
}

std::string BigFloat::to_string(int digits) const {
    if (digits < 2) digits = 2;
    // "%.*Re" prints a correctly rounded scientific representation.
    int need = mpfr_snprintf(nullptr, 0, "%.*Re", digits, v_);
    std::vector<char> buf(static_cast<size_t>(need) + 1);
    mpfr_snprintf(buf.data(), buf.size(), "%.*Re", digits, v_);
    return std::string(buf.data());
}

BigFloat abs(const BigFloat& x) {
    BigFloat r(x.prec());
    mpfr_abs(r.raw(), x.raw(), MPFR_RNDN);
    return r;
}

BigFloat sqrt(const BigFloat& x) {
    BigFloat r(x.prec());
    mpfr_sqrt(r.raw(), x.raw(), MPFR_RNDN);
    return r;
}

BigFloat exp(const BigFloat& x) {
    BigFloat r(x.prec());
    mpfr_exp(r.raw(), x.raw(), MPFR_RNDN);
    return r;
}

BigFloat log(const BigFloat& x) {
    BigFloat r(x.prec());
    mpfr_log(r.raw(), x.raw(), MPFR_RNDN);
    return r;
}

BigFloat pow_ui(const BigFloat& x, unsigned long e) {
    BigFloat r(x.prec());
    mpfr_pow_ui(r.raw(), x.raw(), e, MPFR_RNDN);
    return r;
}

BigFloat ldexp2(const BigFloat& x, long e) {
    BigFloat r(x.prec());
    mpfr_mul_2si(r.raw(), x.raw(), e, MPFR_RNDN);
    return r;
}

BigRational to_rational(const BigFloat& x) {
    if (!x.is_finite())
        throw std::domain_error("to_rational: value is not finite");
    mpq_class q;
    mpfr_get_q(q.get_mpq_t(), x.raw());
    return BigRational(q);
}

std::pair<BigRational, BigRational> pi_bounds(mpfr_prec_t prec) {
    BigFloat lo = BigFloat::pi(prec, MPFR_RNDD);
    BigFloat hi = BigFloat::pi(prec, MPFR_RNDU);
    // pi is irrational, so the directed roundings straddle it strictly.
    return {to_rational(lo), to_rational(hi)};
}

} // namespace rtz
