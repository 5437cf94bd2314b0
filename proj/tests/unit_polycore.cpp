#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <algorithm>
#include <random>
#include <vector>

#include "rtz/poly.hpp"
#include "rtz/roots.hpp"
#include "rtz/sturm.hpp"
#include "test_util.hpp"

using rtz::BigFloat;
using rtz::BigRational;
using rtz::DensePoly;

TEST_CASE("arithmetic agrees with pointwise evaluation") {
    std::mt19937 rng(1001u);
    for (int t = 0; t < 40; ++t) {
        const DensePoly p = tu::rnd_poly(rng), q = tu::rnd_poly(rng);
        const BigRational x = tu::rnd_rat(rng);
        CHECK((p + q).eval(x) == p.eval(x) + q.eval(x));
        CHECK((p - q).eval(x) == p.eval(x) - q.eval(x));
        CHECK((p * q).eval(x) == p.eval(x) * q.eval(x));
        CHECK((-p).eval(x) == -p.eval(x));
        const BigRational s = tu::rnd_nonzero_rat(rng);
        CHECK(p.scale_arg(s).eval(x) == p.eval(s * x));
        CHECK(p.scaled(s).eval(x) == s * p.eval(x));
    }
}

TEST_CASE("product rule for the derivative") {
    std::mt19937 rng(1002u);
    for (int t = 0; t < 25; ++t) {
        const DensePoly p = tu::rnd_poly(rng), q = tu::rnd_poly(rng);
        CHECK((p * q).derivative() == p.derivative() * q + p * q.derivative());
    }
}

TEST_CASE("degree, trim, order at zero") {
    CHECK(DensePoly::zero().degree() == -1);
    CHECK(DensePoly(std::vector<BigRational>{BigRational(0), BigRational(0)}).is_zero());
    DensePoly p(std::vector<BigRational>{BigRational(0), BigRational(0), BigRational(3),
                                         BigRational(-1)});
    CHECK(p.degree() == 3);
    CHECK(p.order_at_zero() == 2);
    const DensePoly down = p.shifted_down(2);
    CHECK(down.degree() == 1);
    CHECK(down.coeff(0) == BigRational(3));
    CHECK(p.monic().leading() == BigRational(1));
}

TEST_CASE("division: a = qb + r with deg r < deg b") {
    std::mt19937 rng(1003u);
    for (int t = 0; t < 40; ++t) {
        const DensePoly a = tu::rnd_poly(rng, 8);
        DensePoly b = tu::rnd_poly(rng, 4);
        if (b.is_zero()) b = DensePoly::constant(BigRational(1));
        const auto [q, r] = rtz::divrem(a, b);
        CHECK(q * b + r == a);
        CHECK(r.degree() < b.degree());
    }
}

TEST_CASE("exact division round trip, and rejection of inexact division") {
    std::mt19937 rng(1004u);
    for (int t = 0; t < 25; ++t) {
        const DensePoly p = tu::rnd_poly(rng, 5);
        DensePoly q = tu::rnd_poly(rng, 4);
        if (q.is_zero()) q = DensePoly::constant(BigRational(2));
        CHECK(rtz::divide_exact(p * q, q) == p);
    }
    const DensePoly x2(std::vector<BigRational>{BigRational(0), BigRational(0), BigRational(1)});
    const DensePoly xp1(std::vector<BigRational>{BigRational(1), BigRational(1)});
    CHECK_THROWS_AS(rtz::divide_exact(x2, xp1), std::domain_error);
}

TEST_CASE("gcd pulls out a planted common factor") {
    std::mt19937 rng(1005u);
    int done = 0;
    while (done < 20) {
        const DensePoly p = tu::rnd_poly(rng, 4), q = tu::rnd_poly(rng, 4);
        if (p.is_zero() || q.is_zero()) continue;
        if (rtz::poly_gcd(p, q).degree() != 0) continue; // want coprime p, q
        DensePoly g = tu::rnd_poly(rng, 3);
        if (g.degree() < 1) continue;
        const DensePoly got = rtz::poly_gcd(p * g, q * g);
        CHECK(got == g.monic());
        ++done;
    }
    const DensePoly p = tu::rnd_poly(rng, 4);
    CHECK(rtz::poly_gcd(p + DensePoly::constant(BigRational(1)), DensePoly::zero()) ==
          (p + DensePoly::constant(BigRational(1))).monic());
}

TEST_CASE("squarefree decomposition reconstructs planted multiplicities") {
    // p = lc * f1 * f2^2 * f3^3 with distinct linear factors.
    std::mt19937 rng(1006u);
    for (int t = 0; t < 15; ++t) {
        std::vector<BigRational> roots;
        while (roots.size() < 6) {
            BigRational r = tu::rnd_rat(rng, 10, 4);
            if (std::find(roots.begin(), roots.end(), r) == roots.end()) roots.push_back(r);
        }
        const DensePoly f1 = tu::poly_from_roots({roots[0], roots[1]});
        const DensePoly f2 = tu::poly_from_roots({roots[2], roots[3]});
        const DensePoly f3 = tu::poly_from_roots({roots[4], roots[5]});
        const DensePoly p = f1 * f2 * f2 * f3 * f3 * f3;

        CHECK_FALSE(rtz::is_squarefree(p));
        CHECK(rtz::is_squarefree(f1 * f2 * f3));

        const auto parts = rtz::squarefree_decomposition(p.scaled(BigRational(-7, 3)));
        DensePoly recon = DensePoly::constant(BigRational(-7, 3)); // leading coefficient
        for (const auto& [f, mult] : parts) {
            CHECK(rtz::is_squarefree(f));
            CHECK(f.leading() == BigRational(1));
            for (unsigned i = 0; i < mult; ++i) recon = recon * f;
        }
        CHECK(recon == p.scaled(BigRational(-7, 3)));
        // Factors are pairwise coprime.
        for (size_t i = 0; i < parts.size(); ++i)
            for (size_t j = i + 1; j < parts.size(); ++j)
                CHECK(rtz::poly_gcd(parts[i].first, parts[j].first).degree() == 0);
    }
}

TEST_CASE("Sturm counting on planted real roots") {
    std::mt19937 rng(1007u);
    for (int t = 0; t < 20; ++t) {
        std::vector<BigRational> roots;
        while (roots.size() < 5) {
            BigRational r = tu::rnd_rat(rng, 8, 3);
            if (std::find(roots.begin(), roots.end(), r) == roots.end()) roots.push_back(r);
        }
        // An irreducible quadratic contributes no real roots.
        const DensePoly w2p1(
            std::vector<BigRational>{BigRational(1), BigRational(0), BigRational(1)});
        const DensePoly p = tu::poly_from_roots(roots) * w2p1;
        CHECK(rtz::count_distinct_real_roots(p) == 5);

        const BigRational a(-9), b(9); // all planted roots lie inside
        CHECK(rtz::count_real_roots_in(p, a, b) == 5);

        // Nothing lies left of the smallest planted root.
        BigRational below_all = *std::min_element(roots.begin(), roots.end()) - BigRational(1);
        CHECK(rtz::count_real_roots_in(p, BigRational(-100), below_all) == 0);
    }
}

TEST_CASE("Sturm worked interval and endpoint handling") {
    // t^3 - 3t: roots 0, +-sqrt(3); all three in (-2, 2).
    const DensePoly p(std::vector<BigRational>{BigRational(0), BigRational(-3), BigRational(0),
                                               BigRational(1)});
    CHECK(rtz::count_real_roots_in(p, BigRational(-2), BigRational(2)) == 3);
    CHECK(rtz::count_distinct_real_roots(p) == 3);

    // Endpoint roots are rejected, widen_to_nonroots repairs the interval.
    CHECK_THROWS_AS(rtz::count_real_roots_in(p, BigRational(0), BigRational(2)),
                    std::domain_error);
    const auto [a, b] = rtz::widen_to_nonroots(p, BigRational(0), BigRational(2));
    CHECK(a < BigRational(0));
    CHECK(!p.eval(a).is_zero());
    CHECK(!p.eval(b).is_zero());
    // The nudged interval picks up 0 and sqrt(3) but stays right of -sqrt(3).
    CHECK(rtz::count_real_roots_in(p, a, b) == 2);
}

TEST_CASE("Sturm counts distinct roots, not multiplicity") {
    const DensePoly p = tu::poly_from_roots({BigRational(1), BigRational(1), BigRational(2)});
    CHECK(rtz::count_distinct_real_roots(p) == 2);
    const rtz::SturmChain ch = rtz::SturmChain::build(p);
    CHECK(ch.squarefree_part().degree() == 2);
}

TEST_CASE("self-inversive recognition") {
    const DensePoly pal(std::vector<BigRational>{BigRational(1), BigRational(-5, 2),
                                                 BigRational(21, 4), BigRational(-5, 2),
                                                 BigRational(1)});
    CHECK(rtz::is_self_inversive(pal));
    CHECK_FALSE(rtz::is_anti_self_inversive(pal));
    const DensePoly anti(std::vector<BigRational>{BigRational(-1), BigRational(2), BigRational(0),
                                                  BigRational(-2), BigRational(1)});
    CHECK(rtz::is_anti_self_inversive(anti));
    CHECK_FALSE(rtz::is_self_inversive(anti));
    const DensePoly plain(std::vector<BigRational>{BigRational(1), BigRational(2)});
    CHECK_FALSE(rtz::is_self_inversive(plain));
    CHECK_FALSE(rtz::is_anti_self_inversive(plain));
}

TEST_CASE("halve_even_poly") {
    // -z^4/12 - z^2/48  ->  -y^2/12 - y/48
    DensePoly p = DensePoly::monomial(BigRational(-1, 12), 4) +
                  DensePoly::monomial(BigRational(-1, 48), 2);
    const DensePoly g = rtz::halve_even_poly(p);
    CHECK(g.degree() == 2);
    CHECK(g.coeff(2) == BigRational(-1, 12));
    CHECK(g.coeff(1) == BigRational(-1, 48));
    CHECK(g.coeff(0).is_zero());
    CHECK_THROWS_AS(
        rtz::halve_even_poly(DensePoly(std::vector<BigRational>{BigRational(1), BigRational(1)})),
        std::domain_error);
}

TEST_CASE("Cauchy bound dominates every planted root") {
    std::mt19937 rng(1008u);
    for (int t = 0; t < 20; ++t) {
        std::vector<BigRational> roots;
        for (int i = 0; i < 5; ++i) roots.push_back(tu::rnd_rat(rng, 40, 3));
        const DensePoly p = tu::poly_from_roots(roots).scaled(tu::rnd_nonzero_rat(rng));
        const BigRational bound = rtz::cauchy_root_bound(p);
        for (const auto& r : roots) CHECK(rtz::abs(r) < bound);
    }
}

TEST_CASE("circle_to_interval splits planted circle and reciprocal pairs") {
    std::mt19937 rng(1009u);
    for (int t = 0; t < 25; ++t) {
        // Distinct on-circle cosines and distinct off-circle radii.
        std::vector<BigRational> cosines;
        while (cosines.size() < 3) {
            BigRational c = tu::rnd_rat(rng, 9, 10);
            if (rtz::abs(c) < BigRational(1) &&
                std::find(cosines.begin(), cosines.end(), c) == cosines.end())
                cosines.push_back(c);
        }
        std::vector<BigRational> radii;
        while (radii.size() < 2) {
            BigRational r = BigRational(1) + tu::rnd_rat(rng, 5, 3) * tu::rnd_rat(rng, 1, 1);
            if (r > BigRational(1) &&
                std::find(radii.begin(), radii.end(), r) == radii.end())
                radii.push_back(r);
        }
        std::uniform_int_distribution<int> m01(0, 2);
        const int mp = m01(rng), mm = m01(rng);

        DensePoly g = DensePoly::constant(BigRational(1));
        for (const auto& c : cosines) g = g * tu::circle_pair(c);
        for (const auto& r : radii) g = g * tu::recip_real_pair(r);
        for (int i = 0; i < mp; ++i)
            g = g * DensePoly(std::vector<BigRational>{BigRational(-1), BigRational(1)});
        for (int i = 0; i < mm; ++i)
            g = g * DensePoly(std::vector<BigRational>{BigRational(1), BigRational(1)});

        CHECK((rtz::is_self_inversive(g) || rtz::is_anti_self_inversive(g)));
        const auto ct = rtz::circle_to_interval(g);
        CHECK(ct.mult_at_plus_one == static_cast<unsigned>(mp));
        CHECK(ct.mult_at_minus_one == static_cast<unsigned>(mm));
        CHECK(ct.q.degree() == 5); // 3 circle pairs + 2 reciprocal pairs
        CHECK_FALSE(ct.q.eval(BigRational(2)).is_zero());
        CHECK_FALSE(ct.q.eval(BigRational(-2)).is_zero());
        // q picks up each on-circle pair as a root 2cos(theta) in (-2, 2) ...
        CHECK(rtz::count_real_roots_in(ct.q, BigRational(-2), BigRational(2)) == 3);
        for (const auto& c : cosines) CHECK(ct.q.eval(BigRational(2) * c).is_zero());
        // ... and each reciprocal pair as a root r + 1/r outside [-2, 2].
        for (const auto& r : radii)
            CHECK(ct.q.eval(r + BigRational(1) / r).is_zero());
    }
}

TEST_CASE("circle_to_interval on an anti-self-inversive input") {
    // (w - 1) times a circle pair: anti-self-inversive overall.
    DensePoly g = tu::circle_pair(BigRational(1, 3)) *
                  DensePoly(std::vector<BigRational>{BigRational(-1), BigRational(1)});
    CHECK(rtz::is_anti_self_inversive(g));
    const auto ct = rtz::circle_to_interval(g);
    CHECK(ct.mult_at_plus_one == 1);
    CHECK(ct.mult_at_minus_one == 0);
    CHECK(ct.q.degree() == 1);
    CHECK(ct.q.eval(BigRational(2, 3)).is_zero());
}

TEST_CASE("numeric roots recover planted rational roots with certified disks") {
    std::mt19937 rng(1010u);
    for (int t = 0; t < 6; ++t) {
        std::vector<BigRational> roots;
        while (roots.size() < 7) {
            BigRational r = tu::rnd_rat(rng, 12, 5);
            if (std::find(roots.begin(), roots.end(), r) == roots.end()) roots.push_back(r);
        }
        const DensePoly p = tu::poly_from_roots(roots).scaled(BigRational(3, 7));
        const auto res = rtz::numeric_roots(p, 30);
        CHECK(res.certified);
        CHECK(res.roots.size() == 7);
        std::sort(roots.begin(), roots.end());
        for (size_t i = 0; i < roots.size(); ++i) {
            const auto& nr = res.roots[i];
            // |center - true root| <= radius, radius <= 1e-30.
            const BigFloat err =
                (nr.center - rtz::BigComplex(BigFloat::from(roots[i], 256), BigFloat(256)))
                    .abs();
            CHECK(err <= nr.radius);
            CHECK(nr.radius.to_double() <= 1e-30);
        }
    }
}

TEST_CASE("numeric roots of z^2 + 1 and of origin-heavy input") {
    const DensePoly p(std::vector<BigRational>{BigRational(1), BigRational(0), BigRational(1)});
    const auto res = rtz::numeric_roots(p, 40);
    CHECK(res.certified);
    REQUIRE(res.roots.size() == 2);
    CHECK(res.roots[0].center.im.to_double() == doctest::Approx(-1.0));
    CHECK(res.roots[1].center.im.to_double() == doctest::Approx(1.0));
    CHECK(std::abs(res.roots[0].center.re.to_double()) < 1e-30);

    // z^3 (z - 2): origin roots come out exact with zero radius.
    const DensePoly q = DensePoly::monomial(BigRational(1), 4) -
                        DensePoly::monomial(BigRational(2), 3);
    const auto r2 = rtz::numeric_roots(q, 30);
    CHECK(r2.certified);
    REQUIRE(r2.roots.size() == 4);
    int zero_count = 0;
    bool saw_two = false;
    for (const auto& nr : r2.roots) {
        if (nr.center.is_zero() && nr.radius.is_zero()) ++zero_count;
        if (nr.center.re.to_double() == doctest::Approx(2.0)) saw_two = true;
    }
    CHECK(zero_count == 3);
    CHECK(saw_two);
}

TEST_CASE("numeric roots refuse a repeated nonzero root") {
    const DensePoly p = tu::poly_from_roots({BigRational(1), BigRational(1)});
    CHECK_THROWS_AS(rtz::numeric_roots(p, 30), rtz::root_convergence_error);
}
