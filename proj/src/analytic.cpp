#include "rtz/analytic.hpp"

#include <stdexcept>

#include "rtz/bernoulli.hpp"
#include "rtz/errors.hpp"

namespace rtz {

BigFloat zeta_int(long s, mpfr_prec_t prec) {
    if (s < 2) throw std::domain_error("zeta_int: s must be >= 2");
    const mpfr_prec_t wp = prec + 48;

    unsigned long cut = 16 + static_cast<unsigned long>(prec) / 3;
    BigFloat thresh(wp);
    mpfr_set_ui_2exp(thresh.raw(), 1, -static_cast<mpfr_exp_t>(prec + 24), MPFR_RNDN);

    for (int attempt = 0; attempt < 6; ++attempt, cut *= 2) {
        // sum_{n < cut} n^{-s} + cut^{-s}/2 + cut^{1-s}/(s-1)
        //   + sum_r B_{2r}/(2r)! (s)(s+1)...(s+2r-2) cut^{1-s-2r}
        BigFloat acc(wp);
        for (unsigned long n = 1; n < cut; ++n) {
            BigFloat t(wp);
            mpfr_ui_pow_ui(t.raw(), n, static_cast<unsigned long>(s), MPFR_RNDN);
            acc += BigFloat::from(1L, wp) / t;
        }
        BigFloat cs(wp);
        mpfr_ui_pow_ui(cs.raw(), cut, static_cast<unsigned long>(s), MPFR_RNDN);
        cs = BigFloat::from(1L, wp) / cs; // cut^{-s}
        acc += ldexp2(cs, -1);
        const BigFloat cutf = BigFloat::from(static_cast<long>(cut), wp);
        acc += cs * cutf / BigFloat::from(s - 1, wp);

        // ascending-factorial correction terms; the series is asymptotic, so
        // stop at the smallest term and require it under the threshold
        BigFloat poch = BigFloat::from(s, wp);      // (s)_{2r-1} for r = 1
        BigFloat cpow = cs / cutf;                  // cut^{-s-2r+1} for r = 1
        const BigFloat cut2 = cutf * cutf;
        bool converged = false;
        BigFloat prev_mag(wp);
        for (unsigned long r = 1; r <= 400; ++r) {
            const BigRational b = bernoulli_number(2 * r) / BigRational(factorial(2 * r));
            const BigFloat term = BigFloat::from(b, wp) * poch * cpow;
            const BigFloat mag = abs(term);
            if (r > 1 && mag > prev_mag) break; // divergence onset
            acc += term;
            if (mag < thresh) {
                converged = true;
                break;
            }
            prev_mag = mag;
            poch = poch * BigFloat::from(s + 2 * static_cast<long>(r) - 1, wp) *
                   BigFloat::from(s + 2 * static_cast<long>(r), wp);
            cpow = cpow / cut2;
        }
        if (converged) {
            BigFloat out(prec);
            mpfr_set(out.raw(), acc.raw(), MPFR_RNDN);
            return out;
        }
    }
    throw precision_exhausted("zeta_int: tail correction did not reach threshold");
}

GValue eval_G(long k, const BigFloat& x, unsigned long terms, mpfr_prec_t prec) {
    if (k == 0) throw std::domain_error("eval_G: k must be nonzero");
    if (!(x > BigFloat::from(0L, prec))) throw std::domain_error("eval_G: x must be > 0");
    if (terms < 1) throw std::domain_error("eval_G: terms must be >= 1");
    const mpfr_prec_t wp = prec + 32;
    const long s = 2 * k + 1; // n-exponent is -s

    BigFloat zeta_half(wp);
    if (k >= 1) {
        zeta_half = ldexp2(zeta_int(s, wp), -1);
    } else {
        // zeta(1 - 2m) = -B_{2m}/(2m) exactly, m = -k
        const unsigned long m = static_cast<unsigned long>(-k);
        zeta_half = ldexp2(
            BigFloat::from(-bernoulli_number(2 * m) / BigRational(2L * static_cast<long>(m)), wp),
            -1);
    }

    const BigFloat one = BigFloat::from(1L, wp);
    const BigFloat two_x = ldexp2(BigFloat::from(0L, wp) + x, 1);
    BigFloat sum(wp);
    for (unsigned long n = 1; n <= terms; ++n) {
        const BigFloat nf = BigFloat::from(static_cast<long>(n), wp);
        BigFloat npow(wp);
        mpfr_pow_si(npow.raw(), nf.raw(), -s, MPFR_RNDN);
        sum += npow / (exp(two_x * nf) - one);
    }

    // tail: each term is <= n^{-s} e^{-2xn} / (1 - e^{-2x}); successive bound
    // terms shrink by at least rho = (1 + 1/(T+1))^{max(-s,0)} e^{-2x}
    const BigFloat t1 = BigFloat::from(static_cast<long>(terms + 1), wp);
    BigFloat first(wp);
    mpfr_pow_si(first.raw(), t1.raw(), -s, MPFR_RNDN);
    const BigFloat em2x = exp(-two_x);
    first = first * exp(-two_x * t1) / (one - em2x);
    BigFloat rho = em2x;
    if (s < 0) {
        BigFloat growth = one + one / t1;
        mpfr_pow_si(growth.raw(), growth.raw(), -s, MPFR_RNDN);
        rho = rho * growth;
    }
    BigFloat tail(wp);
    if (rho < one) {
        tail = ldexp2(first / (one - rho), 1); // factor-2 slack for rounding
    } else {
        mpfr_set_inf(tail.raw(), 1);
    }

    BigFloat xpk(wp);
    mpfr_pow_si(xpk.raw(), x.raw(), -k, MPFR_RNDN);
    GValue out;
    out.value = xpk * (zeta_half + sum);
    out.tail_bound = xpk * tail;
    return out;
}

std::vector<BigRational> finite_sum_coefficients(unsigned k) {
    std::vector<BigRational> c(k + 2);
    for (unsigned long j = 0; j <= k + 1; ++j) {
        c[j] = bernoulli_number(2 * j) * bernoulli_number(2ul * k + 2 - 2 * j) /
               BigRational(BigInt(factorial(2 * j) * factorial(2ul * k + 2 - 2 * j)));
        if (j % 2 != 0) c[j] = -c[j];
    }
    return c;
}

IdentityResidual check_ramanujan_identity(unsigned k, const BigFloat& alpha,
                                          unsigned long terms, unsigned precision_digits) {
    if (k < 1) throw std::domain_error("check_ramanujan_identity: k must be >= 1");
    if (precision_digits < 1)
        throw std::domain_error("check_ramanujan_identity: precision_digits must be >= 1");
    const mpfr_prec_t wp =
        static_cast<mpfr_prec_t>((precision_digits + 12) * 3.3219280948873626) + 32;
    if (!(alpha > BigFloat::from(0L, wp)))
        throw std::domain_error("check_ramanujan_identity: alpha must be > 0");

    IdentityResidual out;
    out.k = k;
    out.terms_used = terms;
    out.precision_digits = precision_digits;
    out.alpha = BigFloat::from(0L, wp) + alpha; // lift to working precision

    const BigFloat pi = BigFloat::pi(wp);
    out.beta = pi * pi / out.alpha;

    const GValue ga = eval_G(static_cast<long>(k), out.alpha, terms, wp);
    const GValue gb = eval_G(static_cast<long>(k), out.beta, terms, wp);

    const auto coeffs = finite_sum_coefficients(k);
    BigFloat fsum(wp);
    for (unsigned long j = 0; j <= k + 1; ++j) {
        BigFloat apow(wp), bpow(wp);
        mpfr_pow_ui(apow.raw(), out.alpha.raw(), k + 1 - j, MPFR_RNDN);
        mpfr_pow_ui(bpow.raw(), out.beta.raw(), j, MPFR_RNDN);
        fsum += BigFloat::from(coeffs[j], wp) * apow * bpow;
    }

    out.lhs = ga.value;
    const BigFloat signed_g = (k % 2 != 0) ? -gb.value : gb.value;
    out.rhs = signed_g - ldexp2(fsum, 2 * static_cast<long>(k));
    out.residual = abs(out.lhs - out.rhs);

    // truncation bounds from both series plus a rounding allowance
    BigFloat scale = abs(out.lhs) + abs(out.rhs) + BigFloat::from(1L, wp);
    BigFloat round_allow = ldexp2(scale, -(static_cast<long>(wp) - 24));
    out.bound = ga.tail_bound + gb.tail_bound + round_allow;
    out.within_bound = out.residual < out.bound;
    if (!out.within_bound)
        throw precision_exhausted(
            "check_ramanujan_identity: residual " + out.residual.to_string(8) +
            " exceeds bound " + out.bound.to_string(8) +
            " (increase terms or precision)");
    return out;
}

} // namespace rtz
