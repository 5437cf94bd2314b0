#include "rtz/certify.hpp"

#include <stdexcept>

#include "rtz/roots.hpp"
#include "rtz/sturm.hpp"

namespace rtz {

std::string verdict_name(Verdict v) {
    switch (v) {
        case Verdict::TheoremHolds: return "theorem_holds";
        case Verdict::VacuouslyTrue: return "vacuously_true";
        case Verdict::Failed: return "failed";
    }
    return "?";
}

std::string probe_verdict_name(ProbeVerdict v) {
    return v == ProbeVerdict::ConsistentWithConjecture ? "consistent_with_conjecture"
                                                       : "counterexample_candidate";
}

RootPartition partition_unit_circle_roots(const DensePoly& p) {
    if (p.is_zero()) throw std::domain_error("partition_unit_circle_roots: zero polynomial");
    if (p.coeff(0).is_zero())
        throw std::domain_error("partition_unit_circle_roots: root at 0 breaks inversion symmetry");
    if (!is_self_inversive(p) && !is_anti_self_inversive(p))
        throw std::domain_error("partition_unit_circle_roots: needs (anti-)self-inversive input");

    RootPartition part;
    part.degree = static_cast<unsigned>(p.degree());
    if (p.degree() == 0) return part;

    for (const auto& [f, mult] : squarefree_decomposition(p)) {
        // Each multiplicity class of a (anti-)self-inversive polynomial has
        // an inversion-closed root set, so the factor is itself subject to
        // the circle-to-interval reduction.
        const auto cti = circle_to_interval(f);
        part.at_plus_one += mult * cti.mult_at_plus_one;
        part.at_minus_one += mult * cti.mult_at_minus_one;
        const DensePoly& red = cti.reduced;
        if (red.degree() == 0) continue;

        const int pairs = count_real_roots_in(cti.q, BigRational(-2), BigRational(2));
        part.on_circle_other += mult * 2u * static_cast<unsigned>(pairs);

        // Remaining roots of `red` are off the circle: real ones come in
        // (r, 1/r) pairs of one sign, the rest are non-real quadruples.
        const BigRational bound = cauchy_root_bound(red);
        const int pos = count_real_roots_in(red, BigRational(0), bound);
        const int neg = count_real_roots_in(red, -bound, BigRational(0));
        part.real_positive += mult * static_cast<unsigned>(pos);
        part.real_negative += mult * static_cast<unsigned>(neg);
        const int leftover = red.degree() - 2 * pairs - pos - neg;
        if (leftover < 0)
            throw std::logic_error("partition_unit_circle_roots: negative residual count");
        part.complex_off += mult * static_cast<unsigned>(leftover);
    }
    if (!part.conserved())
        throw std::logic_error("partition_unit_circle_roots: counts do not sum to the degree");
    return part;
}

namespace {

/* Numeric witness: how far the certified non-real roots sit from |z| = 1.
 * Returns nothing when the finder cannot certify (e.g. repeated roots). */
std::optional<NumericCrossCheck> modulus_crosscheck(const DensePoly& p, unsigned digits) {
    if (p.degree() < 1 || digits == 0) return std::nullopt;
    NumericRootsResult res;
    try {
        res = numeric_roots(p, digits);
    } catch (const root_convergence_error&) {
        return std::nullopt;
    }
    const mpfr_prec_t prec = 128;
    BigFloat one = BigFloat::from(1L, prec);
    BigFloat max_dev(prec), max_rad(prec);
    for (const auto& r : res.roots) {
        if (r.radius > max_rad) max_rad = r.radius;
        if (!(abs(r.center.im) > r.radius)) continue; // not certified non-real
        BigFloat dev = abs(r.center.abs() - one) + r.radius;
        if (dev > max_dev) max_dev = dev;
    }
    BigFloat threshold(prec);
    const unsigned long t = digits > 10 ? digits - 10 : 1;
    mpfr_ui_pow_ui(threshold.raw(), 10, t, MPFR_RNDN);
    threshold = one / threshold;

    NumericCrossCheck out;
    out.precision_digits = digits;
    out.working_digits = res.working_digits;
    out.max_modulus_deviation = max_dev.to_string(20);
    out.max_radius = max_rad.to_string(20);
    out.within = max_dev < threshold;
    const int rd = static_cast<int>(digits);
    out.roots.reserve(res.roots.size());
    for (const auto& r : res.roots)
        out.roots.push_back(
            {r.center.re.to_string(rd), r.center.im.to_string(rd), r.radius.to_string(8)});
    return out;
}

} // namespace

Certificate certify_ramanujan_type(unsigned k, unsigned n, const CertifyOptions& opt) {
    if (k < 1 || n < 2)
        throw std::domain_error("certify_ramanujan_type: requires k >= 1 and n >= 2");

    Certificate cert;
    cert.family = FamilySpec::ramanujan_type(k, n);
    auto fail = [&cert](const char* stage, std::string witness) -> Certificate& {
        cert.verdict = Verdict::Failed;
        cert.failed_stage = stage;
        cert.witness = std::move(witness);
        return cert;
    };

    // (1) construction: double root at the origin and the even cofactor
    const DensePoly big_r = build_ramanujan_type(k, n);
    const HBuild hb = build_H(k, n);
    const DensePoly& h = hb.H;
    cert.origin_multiplicity = static_cast<unsigned>(big_r.order_at_zero());
    if (cert.origin_multiplicity != 2)
        return fail("origin_multiplicity",
                    "order at z = 0 is " + std::to_string(cert.origin_multiplicity) +
                        ", expected 2");
    if (big_r.scale_arg(BigRational(1, static_cast<long>(n))) !=
        DensePoly::monomial(BigRational(1), 2) * h)
        return fail("factorization", "rescaled polynomial does not equal z^2 * H(z)");

    // (2) coefficient table: reciprocity and the common-sign law
    const auto& a = hb.table.A;
    cert.reciprocal = true;
    for (size_t j = 0; j < a.size(); ++j)
        if (a[j] != a[a.size() - 1 - j]) cert.reciprocal = false;
    cert.sign_pattern_ok = true;
    for (const auto& coeff : a)
        if (coeff.sign() != hb.table.sign) cert.sign_pattern_ok = false;
    if (!cert.reciprocal)
        return fail("coefficient_reciprocity", "A_j != A_{k-1-j} for some j");
    if (!cert.sign_pattern_ok)
        return fail("sign_pattern", "some A_j deviates from the common sign " +
                                        std::to_string(hb.table.sign));

    // (3) H(+-1) != 0 (else z = +-1/n would be real nonzero roots)
    cert.h_at_1 = h.eval(BigRational(1));
    cert.h_at_minus1 = h.eval(BigRational(-1));
    if (cert.h_at_1.is_zero() || cert.h_at_minus1.is_zero())
        return fail("boundary_values", "H(1) = " + cert.h_at_1.to_string() +
                                           ", H(-1) = " + cert.h_at_minus1.to_string());

    // (4) simplicity
    cert.squarefree_H = is_squarefree(h);
    if (!cert.squarefree_H)
        return fail("squarefree", "gcd(H, H') has positive degree");

    // (5) all roots of H on the unit circle, counted exactly
    if (h.degree() > 0) {
        const DensePoly g = halve_even_poly(h);
        if (!is_self_inversive(g))
            return fail("transform", "compressed polynomial is not self-inversive");
        const auto cti = circle_to_interval(g);
        if (cti.mult_at_plus_one != 0)
            return fail("real_boundary_root",
                        "w = 1 root of multiplicity " + std::to_string(cti.mult_at_plus_one) +
                            " implies real roots z = +-1/n");
        const int pairs = count_real_roots_in(cti.q, BigRational(-2), BigRational(2));
        const unsigned g_circle = 2u * static_cast<unsigned>(pairs) + cti.mult_at_minus_one;
        cert.circle_count = 2 * g_circle;
        if (cert.circle_count != 2 * k - 2)
            return fail("circle_count",
                        "certified " + std::to_string(cert.circle_count) + " of expected " +
                            std::to_string(2 * k - 2) + " circle roots (interval count " +
                            std::to_string(pairs) + ", w = -1 multiplicity " +
                            std::to_string(cti.mult_at_minus_one) + ")");
    } else {
        cert.circle_count = 0;
    }

    cert.verdict = (k == 1) ? Verdict::VacuouslyTrue : Verdict::TheoremHolds;

    // (6) optional numeric witness on H (roots expected on |z| = 1)
    if (opt.with_numeric)
        cert.numeric_crosscheck = modulus_crosscheck(h, opt.precision_digits);
    return cert;
}

ClassicReport certify_classic(unsigned k, unsigned precision_digits) {
    if (k < 1) throw std::domain_error("certify_classic: k must be >= 1");

    ClassicReport rep;
    rep.k = k;
    const DensePoly r = build_classic(k);
    rep.degree = static_cast<unsigned>(r.degree());
    rep.r_at_1 = r.eval(BigRational(1));
    rep.r_at_minus1 = r.eval(BigRational(-1));

    // Work in w = z^2: every w-root yields the z-pair +-sqrt(w).
    //   w > 0       -> two real z        (on circle iff w = 1)
    //   w = 1       -> z = +-1           (real and on the circle)
    //   |w| = 1, w != 1 -> two z on the circle (non-real)
    //   w < 0, w != -1  -> two non-real z off the circle
    //   w non-real off the circle -> two non-real z off the circle
    const DensePoly e = halve_even_poly(r);
    const RootPartition part = partition_unit_circle_roots(e);
    rep.real_count = 2 * (part.real_positive + part.at_plus_one);
    rep.circle_count = 2 * part.on_circle_total();
    rep.overlap_pm1 = 2 * part.at_plus_one;
    rep.off_circle_nonreal_count = 2 * (part.real_negative + part.complex_off);
    rep.partition_ok = rep.off_circle_nonreal_count == 0;

    if (rep.real_count + rep.circle_count - rep.overlap_pm1 + rep.off_circle_nonreal_count !=
        rep.degree)
        throw std::logic_error("certify_classic: root accounting failed");

    if (precision_digits > 0 && is_squarefree(r))
        rep.numeric_crosscheck = modulus_crosscheck(r, precision_digits);
    return rep;
}

ConjectureReport probe_generalized(unsigned k, unsigned ell, unsigned precision_digits) {
    if (k < 1 || ell < 1)
        throw std::domain_error("probe_generalized: requires k >= 1 and ell >= 1");

    ConjectureReport rep;
    rep.k = k;
    rep.ell = ell;
    const DensePoly p = build_generalized(k, ell);
    rep.degree = static_cast<unsigned>(p.degree());
    rep.symmetry = poly_symmetry(p);
    rep.squarefree = is_squarefree(p);

    const RootPartition part = partition_unit_circle_roots(p);
    rep.root_at_plus_one = part.at_plus_one;
    rep.root_at_minus_one = part.at_minus_one;
    rep.real_count = part.real_total();
    rep.circle_nonreal_count = part.on_circle_other;
    rep.off_circle_nonreal_count = part.complex_off;

    rep.nonreal_all_simple = true;
    if (!rep.squarefree) {
        for (const auto& [f, mult] : squarefree_decomposition(p)) {
            if (mult < 2) continue;
            const RootPartition sub = partition_unit_circle_roots(f);
            if (sub.on_circle_other + sub.complex_off > 0) rep.nonreal_all_simple = false;
        }
    }

    if (rep.off_circle_nonreal_count > 0) {
        rep.verdict = ProbeVerdict::CounterexampleCandidate;
        rep.witness = std::to_string(rep.off_circle_nonreal_count) +
                      " non-real root(s) certified off |Z| = 1";
    } else if (!rep.nonreal_all_simple) {
        rep.verdict = ProbeVerdict::CounterexampleCandidate;
        rep.witness = "repeated non-real root on |Z| = 1";
    } else {
        rep.verdict = ProbeVerdict::ConsistentWithConjecture;
    }

    rep.numeric_crosscheck = modulus_crosscheck(p, precision_digits);
    if (!rep.numeric_crosscheck && precision_digits > 0 && p.degree() >= 1) {
        if (!rep.witness.empty()) rep.witness += "; ";
        rep.witness += "numeric stage could not certify disjoint root disks";
    }
    return rep;
}

} // namespace rtz
