#include "rtz/bernoulli.hpp"

#include <mutex>
#include <shared_mutex>
#include <stdexcept>

#include "rtz/bigfloat.hpp"
#include "rtz/errors.hpp"

namespace rtz {

namespace {

class BernoulliCache {
public:
    BigRational get(unsigned long m) {
        {
            std::shared_lock rd(mu_);
            if (m < vals_.size()) return vals_[m];
        }
        std::unique_lock wr(mu_);
        extend_locked(m);
        return vals_[m];
    }

private:
    void extend_locked(unsigned long m) {
        if (vals_.empty()) vals_.emplace_back(1);
        for (unsigned long t = vals_.size(); t <= m; ++t) {
            // sum_{j=0}^{t} C(t+1, j) B_j = 0  =>  B_t = -sum_{j<t} ... / (t+1)
            BigRational s(0);
            for (unsigned long j = 0; j < t; ++j)
                s += BigRational(binomial(t + 1, j)) * vals_[j];
            s /= BigRational(BigInt(t + 1));
            vals_.push_back(-s);
        }
    }

    std::shared_mutex mu_;
    std::vector<BigRational> vals_;
};

BernoulliCache& cache() {
    static BernoulliCache c;
    return c;
}

} // namespace

BigRational bernoulli_number(unsigned long m) { return cache().get(m); }

BigRational bernoulli_polynomial(unsigned long m, const BigRational& x) {
    if (x.is_zero()) return bernoulli_number(m);
    cache().get(m); // warm once so the Horner loop only takes shared locks
    // Coefficient of x^d is C(m, m-d) B_{m-d}; evaluate by Horner.
    BigRational acc(0);
    for (unsigned long d = m + 1; d-- > 0;)
        acc = acc * x + BigRational(binomial(m, m - d)) * bernoulli_number(m - d);
    return acc;
}

bool check_bernoulli_bounds(unsigned long m) {
    if (m == 0) throw std::domain_error("check_bernoulli_bounds: m must be >= 1");
    const unsigned long e = 2 * m;

    const BigRational q = abs(bernoulli_number(e));
    // lower bound L = r1 / pi^{2m}, upper U = r2 / pi^{2m} with
    //   r1 = 2 (2m)! / 2^{2m},   r2 = r1 / (1 - 2^{1-2m}).
    const BigRational r1 =
        BigRational(2 * factorial(e), pow_int(BigInt(2), e));
    const BigRational r2 =
        r1 / (BigRational(1) - BigRational(BigInt(2), pow_int(BigInt(2), e)));

    // L < q  <=>  pi^{2m} > r1/q ;  q < U  <=>  pi^{2m} < r2/q.
    const BigRational t1 = r1 / q;
    const BigRational t2 = r2 / q;

    // The two thresholds differ from pi^{2m} by a relative margin no finer
    // than ~2^{-2m}, so start with enough bits to usually decide in one pass.
    mpfr_prec_t prec = static_cast<mpfr_prec_t>(e + 96);
    const mpfr_prec_t cap = 1 << 22;

    int lower_ok = -1, upper_ok = -1; // -1 undecided
    while (prec <= cap) {
        auto [plo, phi] = pi_bounds(prec);
        const BigRational pow_lo = pow_rat(plo, static_cast<long>(e));
        const BigRational pow_hi = pow_rat(phi, static_cast<long>(e));
        if (lower_ok < 0) {
            if (pow_lo > t1) lower_ok = 1;
            else if (pow_hi < t1) lower_ok = 0;
            else if (pow_lo == t1 && pow_hi == t1) lower_ok = 0; // exact tie: not strict
        }
        if (upper_ok < 0) {
            if (pow_hi < t2) upper_ok = 1;
            else if (pow_lo > t2) upper_ok = 0;
            else if (pow_lo == t2 && pow_hi == t2) upper_ok = 0;
        }
        if (lower_ok >= 0 && upper_ok >= 0) return lower_ok == 1 && upper_ok == 1;
        prec *= 2;
    }
    throw precision_exhausted("check_bernoulli_bounds: comparison undecided at precision cap");
}

ConvolutionCheck convolution_identity_check(unsigned long m, const BigRational& a,
                                            const BigRational& b) {
    if (m == 0) throw std::domain_error("convolution_identity_check: m must be >= 1");

    BigRational lhs(0);
    for (unsigned long j = 0; j <= m; ++j)
        lhs += BigRational(binomial(m, j)) * bernoulli_polynomial(j, a) *
               bernoulli_polynomial(m - j, b);

    const BigRational s = a + b;
    const BigRational bm1 = bernoulli_polynomial(m - 1, s);
    const BigRational bm = bernoulli_polynomial(m, s);
    const BigRational mq{BigInt(m)};
    const BigRational rhs = mq * (s - 1) * bm1 - (mq - 1) * bm;
    const BigRational rhs_plus = mq * (s + 1) * bm1 - (mq - 1) * bm;

    return ConvolutionCheck{lhs, rhs, rhs_plus, lhs == rhs, lhs == rhs_plus};
}

} // namespace rtz
