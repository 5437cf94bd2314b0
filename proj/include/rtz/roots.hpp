#pragma once

#include <vector>

#include "rtz/bigfloat.hpp"
#include "rtz/poly.hpp"

namespace rtz {

/* One approximate root with an a-posteriori error radius: the disk
 * |z - center| <= radius contains a true root of the input. When the disks
 * are pairwise disjoint each holds exactly one root. */
struct NumericRoot {
    BigComplex center;
    BigFloat radius;
};

struct NumericRootsResult {
    std::vector<NumericRoot> roots; // deg(p) entries, sorted by (re, im)
    long working_digits = 0;        // decimal digits of the final ladder rung
    bool certified = false;         // radii below target and disks disjoint
};

/* All complex roots of p (deg >= 1) by simultaneous iteration, refined on a
 * rising precision ladder until every error radius is below
 * 10^{-precision_digits} and the disks are pairwise disjoint (so p must be
 * squarefree up to roots at 0, which are emitted exactly with radius 0).
 * Throws root_convergence_error with partial results if the ladder cap is
 * reached uncertified. */
struct root_convergence_error;
NumericRootsResult numeric_roots(const DensePoly& p, unsigned precision_digits);

struct root_convergence_error : std::runtime_error {
    root_convergence_error(const std::string& what, NumericRootsResult partial_results)
        : std::runtime_error(what), partial(std::move(partial_results)) {}
    NumericRootsResult partial;
};

} // namespace rtz
