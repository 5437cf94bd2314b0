#pragma once

#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "rtz/bigfloat.hpp"
#include "rtz/poly.hpp"

namespace rtz {

enum class FamilyVariant { Classic, RamanujanType, LalinRogers, Generalized };

std::string variant_name(FamilyVariant v);

/* Identifies one member of the four coefficient families. */
struct FamilySpec {
    FamilyVariant variant = FamilyVariant::Classic;
    unsigned k = 1;
    std::optional<unsigned> n;   // RamanujanType only
    std::optional<unsigned> ell; // Generalized only

    static FamilySpec classic(unsigned k) { return {FamilyVariant::Classic, k, {}, {}}; }
    static FamilySpec ramanujan_type(unsigned k, unsigned n) {
        return {FamilyVariant::RamanujanType, k, n, {}};
    }
    static FamilySpec lalin_rogers(unsigned k) { return {FamilyVariant::LalinRogers, k, {}, {}}; }
    static FamilySpec generalized(unsigned k, unsigned ell) {
        return {FamilyVariant::Generalized, k, {}, ell};
    }
    std::string label() const;
};

/* deg 2k+2, even, palindromic after halving:
 *   sum_{j=0}^{k+1} [B_{2j}/(2j)!] [B_{2k+2-2j}/((2k+2-2j)!)] z^{2k+2-2j} */
DensePoly build_classic(unsigned k);

/* deg 2k with a double root at the origin (the j = 0 and j = k+1 terms
 * carry a vanishing n^0 - 1):
 *   sum_{j=0}^{k+1} (n^{2j}-1)(n^{2k+2-2j}-1) [B_{2j}/(2j)!] [B_{2k+2-2j}/((2k+2-2j)!)] (nz)^{2k+2-2j} */
DensePoly build_ramanujan_type(unsigned k, unsigned n); // k >= 1, n >= 2

/* Same coefficients as build_ramanujan_type(k, 2) but on plain powers of z,
 * i.e. equal to that polynomial with z replaced by z/2. */
DensePoly build_lalin_rogers(unsigned k);

/* The even cofactor of the origin roots, on plain powers:
 *   build_ramanujan_type(k,n) with z -> z/n equals z^2 H(z),
 *   H(z) = sum_{j=0}^{k-1} A_j z^{2k-2-2j},
 *   A_j  = (n^{2j+2}-1)(n^{2k-2j}-1) B_{2j+2} B_{2k-2j} / ((2j+2)! (2k-2j)!).
 * All A_j share the sign (-1)^{k+1}. */
struct CoeffTable {
    std::vector<BigRational> A; // A[0..k-1], A[0] multiplies z^{2k-2}
    int sign = 0;               // common sign of the A_j
    unsigned k = 0;
    unsigned n = 0;
};
struct HBuild {
    DensePoly H;
    CoeffTable table;
};
HBuild build_H(unsigned k, unsigned n); // k >= 1, n >= 2

/* Exponent-generalized family in the variable Z (deg k+1):
 *   sum_{j=0}^{k+1} (-1)^{(l+1) j} [B_{2j}/(2j)!]^l [B_{2k+2-2j}/((2k+2-2j)!)]^l Z^j
 * Palindromic when l is odd or k is odd; anti-palindromic when l and k are
 * both even (so Z = 1 is then forced as a root). */
DensePoly build_generalized(unsigned k, unsigned ell); // k >= 1, ell >= 1

enum class PolySymmetry { Reciprocal, AntiReciprocal, Neither };
PolySymmetry poly_symmetry(const DensePoly& p);

/* f_n(x) = (n^{x+2} - 1)(n^{2k-x} - 1) on 0 <= x <= 2k-2; exact rational
 * value for integer x. */
BigRational f_n_eval(unsigned k, unsigned n, const BigRational& x);
/* Certified enclosure of f_n(x) for any rational x in the domain. */
std::pair<BigFloat, BigFloat> f_n_eval_ball(unsigned k, unsigned n, const BigRational& x,
                                            mpfr_prec_t prec);

/* Upper bound for g_n = f_n / f_2 on the domain: max f_n over min f_2,
 *   (n^{k+1} - 1)^2 / (3 (2^{2k} - 1)). */
BigRational g_n_bound(unsigned k, unsigned n);
/* Exact g_n(x) at integer x. */
BigRational g_n_at(unsigned k, unsigned n, unsigned x);

/* The comparison constant
 *   c_{n,k} = 3 (1+k)(n^{2k}-1)(n^2-1)(2^{2k}-1)(2^{2k+1}-1)
 *             / (2^{2k} (2k+1) (n^{k+1}-1)^2 (2^{2k+2}-1)). */
BigRational c_constant(unsigned k, unsigned n);

} // namespace rtz
