#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <random>
#include <vector>

#include "rtz/bernoulli.hpp"
#include "rtz/bigfloat.hpp"
#include "rtz/rational.hpp"
#include "test_util.hpp"

using rtz::BigFloat;
using rtz::BigInt;
using rtz::BigRational;

namespace {

// Independent oracle: the explicit double sum
//   B_m = sum_{k=0}^{m} 1/(k+1) sum_{j=0}^{k} (-1)^j C(k,j) j^m   (0^0 = 1),
// which shares nothing with the defining recurrence used by the library.
BigRational bernoulli_double_sum(unsigned long m) {
    BigRational total(0);
    for (unsigned long k = 0; k <= m; ++k) {
        BigRational inner(0);
        for (unsigned long j = 0; j <= k; ++j) {
            BigInt term = rtz::binomial(k, j) * (j == 0 ? BigInt(m == 0 ? 1 : 0)
                                                        : rtz::pow_int(BigInt(j), m));
            if (j % 2) term = -term;
            inner += BigRational(term);
        }
        total += inner / BigRational(static_cast<long>(k + 1));
    }
    return total;
}

std::vector<unsigned long> primes_up_to(unsigned long n) {
    std::vector<bool> sieve(n + 1, true);
    std::vector<unsigned long> ps;
    for (unsigned long p = 2; p <= n; ++p)
        if (sieve[p]) {
            ps.push_back(p);
            for (unsigned long q = p * p; q <= n; q += p) sieve[q] = false;
        }
    return ps;
}

} // namespace

TEST_CASE("rational canonical form and parsing") {
    CHECK(BigRational(6, 4) == BigRational(3, 2));
    CHECK(BigRational(-6, -4) == BigRational(3, 2));
    CHECK(BigRational(6, -4).to_string() == "-3/2");
    CHECK(BigRational::from_string("-3/2") == BigRational(-3, 2));
    CHECK(BigRational::from_string("7").to_string() == "7");
    CHECK_THROWS(BigRational(BigInt(1), BigInt(0)));
    CHECK(rtz::abs(BigRational(-5, 3)) == BigRational(5, 3));
    CHECK(rtz::pow_rat(BigRational(2, 3), -2) == BigRational(9, 4));
    CHECK(rtz::factorial(6) == 720);
    CHECK(rtz::binomial(10, 3) == 120);
}

TEST_CASE("first Bernoulli numbers") {
    CHECK(rtz::bernoulli_number(0) == BigRational(1));
    CHECK(rtz::bernoulli_number(1) == BigRational(-1, 2));
    CHECK(rtz::bernoulli_number(2) == BigRational(1, 6));
    CHECK(rtz::bernoulli_number(4) == BigRational(-1, 30));
    CHECK(rtz::bernoulli_number(6) == BigRational(1, 42));
    CHECK(rtz::bernoulli_number(8) == BigRational(-1, 30));
    CHECK(rtz::bernoulli_number(10) == BigRational(5, 66));
    CHECK(rtz::bernoulli_number(12) == BigRational(-691, 2730));
}

TEST_CASE("Bernoulli numbers against the explicit double sum") {
    for (unsigned long m = 0; m <= 40; ++m)
        CHECK(rtz::bernoulli_number(m) == bernoulli_double_sum(m));
}

TEST_CASE("odd Bernoulli numbers vanish") {
    for (unsigned long m = 3; m <= 199; m += 2) CHECK(rtz::bernoulli_number(m).is_zero());
}

TEST_CASE("sign of B_{2m} alternates") {
    for (unsigned long m = 1; m <= 100; ++m)
        CHECK(rtz::bernoulli_number(2 * m).sign() == (m % 2 ? 1 : -1));
}

TEST_CASE("von Staudt-Clausen denominators") {
    const auto primes = primes_up_to(202);
    for (unsigned long m = 1; m <= 100; ++m) {
        BigInt expected(1);
        for (unsigned long p : primes)
            if ((2 * m) % (p - 1) == 0) expected *= static_cast<long>(p);
        CHECK(rtz::bernoulli_number(2 * m).den() == expected);
    }
}

TEST_CASE("Bernoulli polynomial basics") {
    // B_m(0) = B_m; B_m(1) = B_m for m != 1; B_1(1) = 1/2.
    for (unsigned long m = 0; m <= 30; ++m) {
        CHECK(rtz::bernoulli_polynomial(m, BigRational(0)) == rtz::bernoulli_number(m));
        const BigRational at1 = rtz::bernoulli_polynomial(m, BigRational(1));
        if (m == 1)
            CHECK(at1 == BigRational(1, 2));
        else
            CHECK(at1 == rtz::bernoulli_number(m));
    }
}

TEST_CASE("forward difference B_m(x+1) - B_m(x) = m x^{m-1}") {
    std::mt19937 rng(20260819u);
    for (int t = 0; t < 12; ++t) {
        const BigRational x = tu::rnd_rat(rng, 20, 9);
        for (unsigned long m = 1; m <= 24; ++m) {
            const BigRational diff = rtz::bernoulli_polynomial(m, x + BigRational(1)) -
                                     rtz::bernoulli_polynomial(m, x);
            CHECK(diff == BigRational(static_cast<long>(m)) *
                              rtz::pow_rat(x, static_cast<long>(m) - 1));
        }
    }
}

TEST_CASE("reflection B_m(1-x) = (-1)^m B_m(x)") {
    std::mt19937 rng(77001u);
    for (int t = 0; t < 12; ++t) {
        const BigRational x = tu::rnd_rat(rng, 20, 9);
        for (unsigned long m = 0; m <= 24; ++m) {
            const BigRational lhs = rtz::bernoulli_polynomial(m, BigRational(1) - x);
            const BigRational rhs = rtz::bernoulli_polynomial(m, x);
            CHECK(lhs == (m % 2 ? -rhs : rhs));
        }
    }
}

TEST_CASE("half-argument value B_m(1/2) = (2^{1-m} - 1) B_m") {
    for (unsigned long m = 0; m <= 60; ++m) {
        const BigRational factor =
            rtz::pow_rat(BigRational(2), 1 - static_cast<long>(m)) - BigRational(1);
        CHECK(rtz::bernoulli_polynomial(m, BigRational(1, 2)) ==
              factor * rtz::bernoulli_number(m));
    }
}

TEST_CASE("two-sided factorial bounds on |B_{2m}|") {
    for (unsigned long m = 1; m <= 200; ++m) CHECK(rtz::check_bernoulli_bounds(m));
}

TEST_CASE("quadratic convolution identity, worked value") {
    const auto c = rtz::convolution_identity_check(2, BigRational(0), BigRational(0));
    CHECK(c.lhs == BigRational(5, 6));
    CHECK(c.rhs == BigRational(5, 6));
    CHECK(c.rhs_plus_one == BigRational(-7, 6));
    CHECK(c.equal);
    CHECK_FALSE(c.equal_plus_one);
}

TEST_CASE("quadratic convolution identity on a random grid") {
    std::mt19937 rng(424242u);
    for (int t = 0; t < 50; ++t) {
        const BigRational a = tu::rnd_rat(rng, 15, 8);
        const BigRational b = tu::rnd_rat(rng, 15, 8);
        for (unsigned long m = 1; m <= 40; ++m) {
            const auto c = rtz::convolution_identity_check(m, a, b);
            CHECK(c.equal);
            // Independent recomputation of the left side.
            BigRational lhs(0);
            for (unsigned long j = 0; j <= m; ++j)
                lhs += BigRational(rtz::binomial(m, j)) * rtz::bernoulli_polynomial(j, a) *
                       rtz::bernoulli_polynomial(m - j, b);
            CHECK(lhs == c.lhs);
        }
    }
}

TEST_CASE("the (a+b+1) convolution variant differs whenever B_{m-1}(a+b) != 0") {
    std::mt19937 rng(99031u);
    for (int t = 0; t < 20; ++t) {
        const BigRational a = tu::rnd_rat(rng, 15, 8);
        const BigRational b = tu::rnd_rat(rng, 15, 8);
        for (unsigned long m = 1; m <= 12; ++m) {
            const auto c = rtz::convolution_identity_check(m, a, b);
            const bool mid_zero = rtz::bernoulli_polynomial(m - 1, a + b).is_zero();
            // rhs_plus_one - rhs = 2m B_{m-1}(a+b)
            CHECK(c.rhs_plus_one - c.rhs ==
                  BigRational(2 * static_cast<long>(m)) *
                      rtz::bernoulli_polynomial(m - 1, a + b));
            CHECK(c.equal_plus_one == (c.equal && mid_zero));
        }
    }
}

TEST_CASE("pi enclosure is exact, ordered, and tight") {
    const BigRational pi_ref(BigInt("314159265358979323846264338327950288"),
                             rtz::pow_int(BigInt(10), 35));
    const BigRational pi_ref_hi = pi_ref + BigRational(BigInt(1), rtz::pow_int(BigInt(10), 34));
    for (mpfr_prec_t p : {64, 128, 256, 512}) {
        const auto [lo, hi] = rtz::pi_bounds(p);
        CHECK(lo < hi);
        CHECK(lo < pi_ref_hi);
        CHECK(hi > pi_ref);
        // Width shrinks like 2^{-prec} up to a small constant.
        const BigRational width = hi - lo;
        CHECK(width * rtz::pow_rat(BigRational(2), p - 4) < BigRational(1));
    }
    // Enclosures at different precisions must be mutually consistent.
    const auto [lo1, hi1] = rtz::pi_bounds(80);
    const auto [lo2, hi2] = rtz::pi_bounds(300);
    CHECK(lo1 < hi2);
    CHECK(lo2 < hi1);
}

TEST_CASE("BigFloat basics") {
    const BigFloat a = BigFloat::from(3L, 128);
    const BigFloat b = BigFloat::from(0.5, 64);
    CHECK((a + b).prec() == 128);
    CHECK((a * b).to_double() == doctest::Approx(1.5));
    CHECK((-a).sign() == -1);
    CHECK(BigFloat::from(0L, 64).is_zero());

    // Exact rational round trip (floats are binary rationals).
    const BigFloat x = BigFloat::from(BigRational(-7, 16), 96);
    CHECK(rtz::to_rational(x) == BigRational(-7, 16));
    CHECK(rtz::to_rational(rtz::ldexp2(x, 3)) == BigRational(-7, 2));

    // pi agrees with the rational enclosure.
    const BigFloat pi = BigFloat::pi(256);
    const auto [lo, hi] = rtz::pi_bounds(256);
    CHECK(rtz::to_rational(pi) > lo - (hi - lo));
    CHECK(rtz::to_rational(pi) < hi + (hi - lo));

    // Deterministic string rendering.
    CHECK(pi.to_string(20) == BigFloat::pi(256).to_string(20));
    CHECK(rtz::abs(BigFloat::from(-2.0, 64)).to_double() == 2.0);
    CHECK(rtz::sqrt(BigFloat::from(BigRational(9, 4), 128)).to_double() ==
          doctest::Approx(1.5));
}
