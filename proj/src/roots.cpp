#include "rtz/roots.hpp"

#include <algorithm>
#include <stdexcept>

namespace rtz {

namespace {

mpfr_prec_t bits_for_digits(long digits) {
    return static_cast<mpfr_prec_t>(static_cast<double>(digits) * 3.3219280948873626 + 64);
}

long max_coeff_digits(const DensePoly& p) {
    size_t m = 0;
    for (const auto& c : p.coeffs()) {
        m = std::max(m, mpz_sizeinbase(c.num().get_mpz_t(), 10));
        m = std::max(m, mpz_sizeinbase(c.den().get_mpz_t(), 10));
    }
    return static_cast<long>(m);
}

BigComplex eval_complex(const std::vector<BigFloat>& cf, const BigComplex& z) {
    BigComplex acc(z.prec());
    for (size_t i = cf.size(); i-- > 0;) {
        acc = acc * z;
        acc.re += cf[i];
    }
    return acc;
}

/* Initial points: scattered on circles near the Fujiwara-style magnitude
 * bound, with a fixed angular offset so symmetric polynomials do not get a
 * symmetric (stall-prone) start. Everything is computed in MPFR, so runs
 * are reproducible. */
std::vector<BigComplex> initial_points(const std::vector<BigFloat>& cf, mpfr_prec_t prec) {
    const size_t n = cf.size() - 1;
    double log2r = -1e9;
    const double en = static_cast<double>(mpfr_get_exp(cf[n].raw()));
    for (size_t i = 0; i < n; ++i) {
        if (cf[i].is_zero()) continue;
        const double ei = static_cast<double>(mpfr_get_exp(cf[i].raw()));
        log2r = std::max(log2r, (ei - en) / static_cast<double>(n - i));
    }
    if (log2r < -1e8) log2r = 0; // all lower coefficients zero
    BigFloat r(prec);
    mpfr_set_ui_2exp(r.raw(), 1, static_cast<mpfr_exp_t>(log2r) + 1, MPFR_RNDN);

    const BigFloat two_pi = ldexp2(BigFloat::pi(prec), 1);
    std::vector<BigComplex> z;
    z.reserve(n);
    for (size_t j = 0; j < n; ++j) {
        BigFloat theta = two_pi * BigFloat::from(static_cast<long>(j), prec) /
                             BigFloat::from(static_cast<long>(n), prec) +
                         BigFloat::from(0.45, prec);
        BigFloat s(prec), c(prec);
        mpfr_sin_cos(s.raw(), c.raw(), theta.raw(), MPFR_RNDN);
        // radius varied per point: r * (0.8 + 0.4 (j+1)/n)
        BigFloat rj = r * (BigFloat::from(0.8, prec) +
                           BigFloat::from(0.4, prec) *
                               BigFloat::from(static_cast<long>(j + 1), prec) /
                               BigFloat::from(static_cast<long>(n), prec));
        z.emplace_back(rj * BigComplex(c, s));
    }
    return z;
}

} // namespace

NumericRootsResult numeric_roots(const DensePoly& p, unsigned precision_digits) {
    if (p.degree() < 1)
        throw std::domain_error("numeric_roots: degree must be >= 1");

    const size_t m0 = p.order_at_zero();
    const DensePoly f = p.shifted_down(m0);
    const size_t n = static_cast<size_t>(f.degree());

    long digits = std::max({30L, static_cast<long>(precision_digits) + 10,
                            max_coeff_digits(f) / 4});

    NumericRootsResult last;
    std::vector<BigComplex> z;
    bool have_seed = false;

    for (int rung = 0; rung <= 10; ++rung, digits *= 2) {
        const mpfr_prec_t prec = bits_for_digits(digits);

        std::vector<BigFloat> cf, df;
        cf.reserve(n + 1);
        for (size_t i = 0; i <= n; ++i) cf.push_back(BigFloat::from(f.coeff(i), prec));
        df.reserve(n);
        for (size_t i = 1; i <= n; ++i)
            cf[i].is_zero() ? df.push_back(BigFloat(prec))
                            : df.push_back(cf[i] * BigFloat::from(static_cast<long>(i), prec));

        if (!have_seed) {
            z = initial_points(cf, prec);
            have_seed = true;
        } else {
            for (auto& zi : z) zi = BigComplex(BigFloat::from(0L, prec) + zi.re,
                                               BigFloat::from(0L, prec) + zi.im);
        }

        // Simultaneous (Aberth-style) iteration, sweeping in place.
        BigFloat stall_threshold(prec);
        mpfr_set_ui_2exp(stall_threshold.raw(), 1,
                         -static_cast<mpfr_exp_t>(prec - prec / 4), MPFR_RNDN);
        const int max_sweeps = 40 + 10 * static_cast<int>(n);
        for (int sweep = 0; sweep < max_sweeps; ++sweep) {
            BigFloat max_rel(prec);
            for (size_t i = 0; i < n; ++i) {
                BigComplex pv = eval_complex(cf, z[i]);
                if (pv.is_zero()) continue;
                BigComplex dv = eval_complex(df, z[i]);
                if (dv.is_zero()) {
                    z[i].re += BigFloat::from(0.001, prec) * (BigFloat::from(1L, prec) + z[i].abs());
                    continue;
                }
                BigComplex nwt = pv / dv;
                BigComplex s(prec);
                for (size_t j = 0; j < n; ++j) {
                    if (j == i) continue;
                    BigComplex d = z[i] - z[j];
                    if (d.is_zero()) {
                        d.re = BigFloat::from(0.0005, prec);
                        z[i].re += d.re;
                    }
                    s += BigComplex(BigFloat::from(1L, prec), BigFloat(prec)) / d;
                }
                BigComplex den = BigComplex(BigFloat::from(1L, prec), BigFloat(prec)) - nwt * s;
                BigComplex step = den.is_zero() ? nwt : nwt / den;
                z[i] -= step;
                BigFloat rel = step.abs() / (BigFloat::from(1L, prec) + z[i].abs());
                if (rel > max_rel) max_rel = rel;
            }
            if (max_rel < stall_threshold) break;
        }

        // A-posteriori disks: each |z - z_i| <= n |W_i| contains a true root,
        // with W_i the Weierstrass correction. The numerator p(z_i) is padded
        // by a Horner rounding bound BEFORE dividing by the same product of
        // separations; near a cluster that product is tiny, so an absolute
        // noise floor added after the division would vanish from the radius
        // and falsely certify a multiple root.
        BigFloat target(prec);
        mpfr_ui_pow_ui(target.raw(), 10, precision_digits, MPFR_RNDN);
        target = BigFloat::from(1L, prec) / target;

        BigFloat guard = BigFloat::from(1L, prec);
        mpfr_nextabove(guard.raw());
        guard = guard + BigFloat::from(1e-6, prec);
        BigFloat eps(prec);
        mpfr_set_ui_2exp(eps.raw(), 1, -static_cast<mpfr_exp_t>(prec - 2), MPFR_RNDN);
        BigFloat floor_term(prec);
        mpfr_set_ui_2exp(floor_term.raw(), static_cast<unsigned long>(n + 1),
                         -static_cast<mpfr_exp_t>(prec - 8), MPFR_RNDN);

        NumericRootsResult res;
        res.working_digits = digits;
        bool radii_ok = true;
        for (size_t i = 0; i < n; ++i) {
            BigComplex denom(BigFloat::from(1L, prec), BigFloat(prec));
            for (size_t j = 0; j < n; ++j)
                if (j != i) denom = denom * (z[i] - z[j]);
            denom = denom * BigComplex(cf[n], BigFloat(prec));
            BigFloat radius;
            if (denom.is_zero()) {
                radii_ok = false;
                radius = BigFloat::from(1L, prec);
            } else {
                const BigFloat zmag = z[i].abs();
                BigFloat smag(prec); // sum |c_k| |z|^k, a Horner error scale
                for (size_t c = cf.size(); c-- > 0;) smag = smag * zmag + abs(cf[c]);
                const BigFloat noise =
                    BigFloat::from(static_cast<long>(4 * n + 4), prec) * eps * smag;
                const BigFloat wmag =
                    (eval_complex(cf, z[i]).abs() + noise) / denom.abs();
                radius = BigFloat::from(static_cast<long>(n), prec) * wmag * guard +
                         floor_term * (BigFloat::from(1L, prec) + zmag);
            }
            if (!(radius < target)) radii_ok = false;
            res.roots.push_back(NumericRoot{z[i], radius});
        }

        bool disjoint = true;
        for (size_t i = 0; i < n && disjoint; ++i)
            for (size_t j = i + 1; j < n; ++j) {
                BigFloat dist = (z[i] - z[j]).abs();
                if (!(dist > res.roots[i].radius + res.roots[j].radius)) {
                    disjoint = false;
                    break;
                }
            }

        for (size_t i = 0; i < m0; ++i)
            res.roots.push_back(NumericRoot{BigComplex(prec), BigFloat(prec)});

        std::sort(res.roots.begin(), res.roots.end(),
                  [](const NumericRoot& a, const NumericRoot& b) {
                      int c = mpfr_cmp(a.center.re.raw(), b.center.re.raw());
                      if (c != 0) return c < 0;
                      return mpfr_cmp(a.center.im.raw(), b.center.im.raw()) < 0;
                  });

        res.certified = radii_ok && disjoint;
        if (res.certified) return res;
        last = std::move(res);
    }

    throw root_convergence_error(
        "numeric_roots: could not certify disjoint error disks at the precision-ladder cap "
        "(multiple or pathologically clustered roots?)",
        std::move(last));
}

} // namespace rtz
