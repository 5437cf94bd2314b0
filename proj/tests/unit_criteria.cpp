#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <algorithm>
#include <random>
#include <vector>

#include "rtz/bernoulli.hpp"
#include "rtz/certify.hpp"
#include "rtz/criteria.hpp"
#include "rtz/families.hpp"
#include "test_util.hpp"

using rtz::BigRational;
using rtz::CoeffTable;
using rtz::DensePoly;

namespace {

// F(c) = sum_j |c A_j - A_{k-1}| straight from the definition.
BigRational F_of_c(const CoeffTable& t, const BigRational& c) {
    BigRational s(0);
    for (const auto& a : t.A) s += rtz::abs(c * a - t.A.back());
    return s;
}

CoeffTable fake_table(std::vector<BigRational> A) {
    CoeffTable t;
    t.k = static_cast<unsigned>(A.size());
    t.n = 2;
    t.sign = A.front().sign();
    t.A = std::move(A);
    return t;
}

// Self-inversive polynomial of even degree d whose coefficients hug the
// leading one closely enough for the dominance test to hold strictly.
DensePoly dominant_self_inversive(std::mt19937& rng, int half_deg) {
    const int d = 2 * half_deg;
    std::uniform_int_distribution<long> num(-1, 1);
    std::vector<BigRational> c(static_cast<size_t>(d) + 1, BigRational(1));
    const long den = 4 * static_cast<long>(d + 1);
    for (int i = 1; i <= half_deg; ++i) {
        const BigRational wobble(num(rng), den);
        c[static_cast<size_t>(i)] = BigRational(1) + wobble;
        c[static_cast<size_t>(d - i)] = c[static_cast<size_t>(i)]; // mirror
    }
    return DensePoly(std::move(c));
}

} // namespace

TEST_CASE("dominance check certifies planted near-constant coefficient polynomials") {
    std::mt19937 rng(555001u);
    int strict_seen = 0;
    for (int t = 0; t < 200; ++t) {
        std::uniform_int_distribution<int> hd(1, 4);
        const DensePoly p = dominant_self_inversive(rng, hd(rng));
        const auto lr = rtz::lakatos_check(p);
        REQUIRE(lr.holds);
        // Exact transcript: lhs and sum match direct recomputation.
        CHECK(lr.lhs == rtz::abs(p.leading()));
        BigRational s(0);
        for (int i = 0; i <= p.degree(); ++i)
            s += rtz::abs(p.coeff(static_cast<size_t>(i)) - p.leading());
        CHECK(lr.sum == s);
        // Soundness against the exact pipeline: all roots on the unit circle,
        // simple whenever the inequality is strict.
        const auto part = rtz::partition_unit_circle_roots(p);
        CHECK(part.conserved());
        CHECK(part.on_circle_total() == static_cast<unsigned>(p.degree()));
        if (lr.strict) {
            ++strict_seen;
            CHECK(rtz::is_squarefree(p));
        }
    }
    CHECK(strict_seen > 150); // the corpus is built to be strict almost always
}

TEST_CASE("dominance check rejects a polynomial with off-circle roots") {
    // (w - 3)(w - 1/3) x (w^2 + w + 1): self-inversive, two roots off circle.
    const DensePoly p = tu::recip_real_pair(BigRational(3)) *
                        DensePoly(std::vector<BigRational>{BigRational(1), BigRational(1),
                                                           BigRational(1)});
    CHECK(rtz::is_self_inversive(p));
    const auto lr = rtz::lakatos_check(p);
    CHECK_FALSE(lr.holds); // contrapositive of soundness
    const auto part = rtz::partition_unit_circle_roots(p);
    CHECK(part.real_positive == 2);
    CHECK(part.on_circle_other == 2);
}

TEST_CASE("piecewise-linear minimization: worked table") {
    // A = (6, 2, 3): F(c) = |6c-3| + |2c-3| + |3c-3|, breakpoints 1/2, 3/2, 1.
    const auto t = fake_table({BigRational(6), BigRational(2), BigRational(3)});
    const auto m = rtz::schinzel_min_over_c(t);
    // F(1/2) = 0 + 2 + 3/2 = 7/2; F(1) = 3 + 1 + 0 = 4; F(3/2) = 6 + 0 + 3/2 = 15/2.
    CHECK(m.min_value == BigRational(7, 2));
    CHECK(m.argmin_c == BigRational(1, 2));
}

TEST_CASE("minimization against brute force over breakpoints, random tables") {
    std::mt19937 rng(555002u);
    for (int t = 0; t < 120; ++t) {
        std::uniform_int_distribution<int> sz(1, 10);
        const int len = sz(rng);
        std::vector<BigRational> A;
        const int sgn = (t % 2) ? 1 : -1;
        for (int i = 0; i < len; ++i) {
            BigRational v = tu::rnd_nonzero_rat(rng, 40, 12);
            A.push_back(sgn > 0 ? rtz::abs(v) : -rtz::abs(v));
        }
        const auto tab = fake_table(A);
        const auto m = rtz::schinzel_min_over_c(tab);

        // Brute force: the convex piecewise-linear F attains its minimum at a
        // breakpoint A_{k-1}/A_j.
        BigRational best = F_of_c(tab, tab.A.back() / tab.A.front());
        for (const auto& a : tab.A) best = std::min(best, F_of_c(tab, tab.A.back() / a));
        CHECK(m.min_value == best);
        CHECK(F_of_c(tab, m.argmin_c) == m.min_value);

        // No sampled point beats it: breakpoints, their midpoints, and noise.
        std::vector<BigRational> samples;
        for (const auto& a : tab.A) samples.push_back(tab.A.back() / a);
        std::sort(samples.begin(), samples.end());
        std::vector<BigRational> probes = samples;
        for (size_t i = 0; i + 1 < samples.size(); ++i)
            probes.push_back((samples[i] + samples[i + 1]) / BigRational(2));
        probes.push_back(samples.front() - BigRational(3, 2));
        probes.push_back(samples.back() + BigRational(3, 2));
        for (int i = 0; i < 25; ++i) probes.push_back(tu::rnd_rat(rng, 60, 14));
        for (const auto& c : probes) CHECK(F_of_c(tab, c) >= m.min_value);
    }
}

TEST_CASE("minimization rejects a vanishing table entry") {
    CHECK_THROWS_AS(rtz::schinzel_min_over_c(
                        fake_table({BigRational(1), BigRational(0), BigRational(2)})),
                    std::domain_error);
}

TEST_CASE("criterion worked values at k = 3, n = 2") {
    const auto hb = rtz::build_H(3, 2);
    const auto rep = rtz::schinzel_criterion_check(hb.table);
    CHECK(rep.schinzel_min == BigRational(1, 11520));
    CHECK(rtz::abs(hb.table.A.back()) == BigRational(1, 1920));
    CHECK(rep.schinzel_holds);
    CHECK(rep.schinzel_strict);
    CHECK(rep.lakatos_holds);
    CHECK(rep.lakatos_strict);
    CHECK(rep.c_constant_value == rtz::c_constant(3, 2));
    CHECK(rep.c_constant_value == BigRational(24003, 34000));
    // The transcript is taken at c = c_{3,2}/2 and is fully consistent.
    const auto& ch = rep.chain_checks;
    CHECK(ch.c == rep.c_constant_value / BigRational(2));
    BigRational s(0);
    for (const auto& a : hb.table.A) s += rtz::abs(a);
    CHECK(ch.sum_c_abs_A == ch.c * s);
    CHECK(ch.lhs_dominance == BigRational(4) * rtz::abs(hb.table.A.back()));
    CHECK(ch.dominance_holds == (ch.lhs_dominance > ch.sum_c_abs_A));
    CHECK(ch.c_nk == rep.c_constant_value);
    CHECK(ch.c_below_cnk);
}

TEST_CASE("criterion verdict region over the full grid") {
    // The d = 1 dominance criterion provably fails off this region even
    // though the circle statement itself holds everywhere (the exact
    // pipeline certifies that separately). First failing point: k=5, n=7.
    const auto passes = [](unsigned k, unsigned n) {
        if (k <= 4) return true;
        if (k == 5) return n <= 6;
        if (k == 6) return n <= 4;
        if (k <= 8) return n <= 3;
        return n == 2;
    };
    for (unsigned k = 1; k <= 30; ++k)
        for (unsigned n = 2; n <= 10; ++n) {
            const auto hb = rtz::build_H(k, n);
            const auto rep = rtz::schinzel_criterion_check(hb.table);
            const BigRational target = rtz::abs(hb.table.A.back());
            CHECK(rep.schinzel_holds == (rep.schinzel_min <= target));
            CHECK(rep.schinzel_strict == (rep.schinzel_min < target));
            CHECK((rep.schinzel_holds && rep.schinzel_strict) == passes(k, n));
        }
}

TEST_CASE("first criterion failure carries exact witness values") {
    const auto hb = rtz::build_H(5, 7);
    const auto rep = rtz::schinzel_criterion_check(hb.table);
    CHECK_FALSE(rep.schinzel_holds);
    CHECK(rep.schinzel_min == BigRational(6312751, 264600));
    CHECK(rtz::abs(hb.table.A.back()) == BigRational(534991, 22680));
}

TEST_CASE("criterion success implies the certified circle statement") {
    for (unsigned k = 1; k <= 30; ++k)
        for (unsigned n = 2; n <= 10; ++n) {
            const auto rep = rtz::schinzel_criterion_check(rtz::build_H(k, n).table);
            if (!(rep.schinzel_holds && rep.schinzel_strict)) continue;
            rtz::CertifyOptions opt;
            opt.with_numeric = false;
            const auto cert = rtz::certify_ramanujan_type(k, n, opt);
            CHECK(cert.verdict != rtz::Verdict::Failed);
        }
}

TEST_CASE("coefficient-sum identity for k = 1..50") {
    for (unsigned k = 1; k <= 50; ++k) {
        const auto id = rtz::identity_5_15_check(k);
        CHECK(id.equal);
        CHECK(id.lhs == id.rhs);
        CHECK(id.lhs.sign() > 0);
        // Signed forms: the summands all carry (-1)^{k+1}; the closed form's
        // (-1)^k B_{2k+2} is |B_{2k+2}|, so the signed rhs stays positive.
        CHECK(id.signed_rhs == id.rhs);
        CHECK(id.signed_sum == (k % 2 ? id.lhs : -id.lhs));

        // Independent recomputation of the absolute sum from first principles.
        BigRational s(0);
        for (unsigned j = 0; j < k; ++j) {
            const auto D = [](unsigned long m) {
                return rtz::bernoulli_polynomial(m, BigRational(1, 2)) -
                       rtz::bernoulli_number(m);
            };
            s += BigRational(rtz::binomial(2 * k + 2, 2 * j + 2)) *
                 rtz::abs(D(2 * j + 2) * D(2 * k - 2 * j));
        }
        CHECK(s == id.lhs);
        // And of the closed form.
        const BigRational closed =
            rtz::abs(BigRational(4 * (2 * static_cast<long>(k) + 1)) *
                     (BigRational(1) - rtz::pow_rat(BigRational(2),
                                                    -2 * static_cast<long>(k) - 2)) *
                     rtz::bernoulli_number(2 * k + 2));
        CHECK(closed == id.rhs);
    }
}

TEST_CASE("inequality transcript stands alone at arbitrary c") {
    const auto ch = rtz::inequality_chain_check(4, 3, BigRational(1, 5));
    const auto hb = rtz::build_H(4, 3);
    BigRational s(0);
    for (const auto& a : hb.table.A) s += rtz::abs(a);
    CHECK(ch.c == BigRational(1, 5));
    CHECK(ch.sum_c_abs_A == BigRational(1, 5) * s);
    CHECK(ch.lhs_dominance == BigRational(5) * rtz::abs(hb.table.A.back()));
    CHECK(ch.sum_below_bound == (ch.sum_c_abs_A < ch.upper_bound));
    CHECK(ch.c_nk == rtz::c_constant(4, 3));
    CHECK(ch.c_below_cnk == (BigRational(1, 5) < ch.c_nk));
}
