#pragma once

#include <optional>
#include <string>
#include <vector>

#include "rtz/families.hpp"
#include "rtz/poly.hpp"

namespace rtz {

/* Exact multiplicity-aware split of the roots of a (anti-)self-inversive
 * polynomial P with P(0) != 0: every root is at +1, at -1, elsewhere on the
 * unit circle, real off the circle, or complex off the circle. Counts carry
 * multiplicity. Powered by squarefree decomposition + the circle-to-interval
 * transform + Sturm counting; no floating point anywhere. */
struct RootPartition {
    unsigned at_plus_one = 0;
    unsigned at_minus_one = 0;
    unsigned on_circle_other = 0; // |w| = 1, w != +-1 (necessarily non-real)
    unsigned real_positive = 0;   // real, > 0, off circle
    unsigned real_negative = 0;   // real, < 0, off circle
    unsigned complex_off = 0;     // non-real, off circle
    unsigned degree = 0;

    unsigned on_circle_total() const { return at_plus_one + at_minus_one + on_circle_other; }
    unsigned real_total() const { return at_plus_one + at_minus_one + real_positive + real_negative; }
    bool conserved() const {
        return at_plus_one + at_minus_one + on_circle_other + real_positive + real_negative +
                   complex_off == degree;
    }
};
RootPartition partition_unit_circle_roots(const DensePoly& p);

/* One numeric root enclosure: a disk of the given radius around re + im*i,
 * rendered as decimal strings. */
struct RootWitness {
    std::string re, im, radius;
};

/* Numeric cross-check summary. Never feeds a verdict: the exact pipeline
 * decides everything; this only witnesses agreement. */
struct NumericCrossCheck {
    unsigned precision_digits = 0;
    long working_digits = 0;
    std::string max_modulus_deviation; // over certified non-real roots
    std::string max_radius;
    bool within = false; // deviation < 10^{-(precision_digits - 10)}
    std::vector<RootWitness> roots;    // every root, sorted by (re, im)
};

enum class Verdict { TheoremHolds, VacuouslyTrue, Failed };
std::string verdict_name(Verdict v);

struct Certificate {
    FamilySpec family;
    unsigned origin_multiplicity = 0;
    bool reciprocal = false;      // A_j == A_{k-1-j}
    bool sign_pattern_ok = false; // all A_j carry sign (-1)^{k+1}
    bool squarefree_H = false;
    BigRational h_at_1;
    BigRational h_at_minus1;
    unsigned circle_count = 0; // roots of H on |z| = 1, with multiplicity
    Verdict verdict = Verdict::Failed;
    std::string failed_stage; // empty unless verdict == Failed
    std::string witness;      // exact values explaining a failure
    std::optional<NumericCrossCheck> numeric_crosscheck;
};

struct CertifyOptions {
    bool with_numeric = true;
    unsigned precision_digits = 30;
};

/* Runs the full exact pipeline for one (k, n): origin multiplicity and the
 * z^2 H(z) factorization, coefficient reciprocity and sign pattern, H(+-1),
 * squarefreeness, and the circle count via the interval transform. Any
 * contradiction yields verdict Failed with stage tag and witness. k = 1
 * (constant H) passes vacuously. */
Certificate certify_ramanujan_type(unsigned k, unsigned n, const CertifyOptions& opt = {});

/* Exact root partition of the degree-(2k+2) classic polynomial: its real
 * roots and unit-circle roots are counted exactly and must exhaust the
 * degree (no off-circle non-real roots); z = +-1 overlap is classified. */
struct ClassicReport {
    unsigned k = 0;
    unsigned degree = 0;
    unsigned real_count = 0;   // with multiplicity
    unsigned circle_count = 0; // with multiplicity
    unsigned overlap_pm1 = 0;  // roots at z = +-1, in both counts above
    unsigned off_circle_nonreal_count = 0;
    BigRational r_at_1;
    BigRational r_at_minus1;
    bool partition_ok = false; // off-circle non-real count is 0 and z=+-1 absent
    std::optional<NumericCrossCheck> numeric_crosscheck;
};
ClassicReport certify_classic(unsigned k, unsigned precision_digits = 30);

/* Conjecture probe for the exponent-generalized family in Z. The exact
 * pipeline counts everything; numeric roots are attached as a witness. The
 * verdict is observational: never "proved". */
enum class ProbeVerdict { ConsistentWithConjecture, CounterexampleCandidate };
std::string probe_verdict_name(ProbeVerdict v);

struct ConjectureReport {
    unsigned k = 0;
    unsigned ell = 0;
    unsigned degree = 0;
    PolySymmetry symmetry = PolySymmetry::Neither;
    bool squarefree = false;
    unsigned root_at_plus_one = 0;  // multiplicity
    unsigned root_at_minus_one = 0; // multiplicity
    unsigned real_count = 0;        // all real roots, with multiplicity
    unsigned circle_nonreal_count = 0;
    unsigned off_circle_nonreal_count = 0;
    bool nonreal_all_simple = true;
    ProbeVerdict verdict = ProbeVerdict::ConsistentWithConjecture;
    std::string witness;
    std::optional<NumericCrossCheck> numeric_crosscheck;
};
ConjectureReport probe_generalized(unsigned k, unsigned ell, unsigned precision_digits = 30);

} // namespace rtz
