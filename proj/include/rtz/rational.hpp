#pragma once

#include <gmpxx.h>

#include <compare>
#include <stdexcept>
#include <string>
#include <utility>

namespace rtz {

using BigInt = mpz_class;

/* Exact arbitrary-precision rational, always in canonical form:
 * denominator > 0 and gcd(|num|, den) = 1. The only scalar allowed in
 * any verdict path. */
class BigRational {
public:
    BigRational() : q_(0) {}
    BigRational(long n) : q_(n) {}
    BigRational(const BigInt& n) : q_(n) {}
    BigRational(const BigInt& num, const BigInt& den) {
        if (den == 0) throw std::domain_error("BigRational: zero denominator");
        q_ = mpq_class(num, den);
        q_.canonicalize();
    }
    BigRational(long num, long den) : BigRational(BigInt(num), BigInt(den)) {}
    explicit BigRational(const mpq_class& q) : q_(q) { q_.canonicalize(); }

    // Accepts "123", "-4/5"; the canonical wire format used in all reports.
    static BigRational from_string(const std::string& s) {
        mpq_class q;
        if (q.set_str(s, 10) != 0)
            throw std::invalid_argument("BigRational: cannot parse '" + s + "'");
        if (q.get_den() == 0) throw std::domain_error("BigRational: zero denominator");
        q.canonicalize();
        BigRational r;
        r.q_ = std::move(q);
        return r;
    }

    BigInt num() const { return q_.get_num(); }
    BigInt den() const { return q_.get_den(); }

    bool is_zero() const { return q_ == 0; }
    bool is_integer() const { return q_.get_den() == 1; }
    int sign() const { return sgn(q_); }

    BigRational operator-() const { return BigRational(mpq_class(-q_)); }
    BigRational& operator+=(const BigRational& o) { q_ += o.q_; return *this; }
    BigRational& operator-=(const BigRational& o) { q_ -= o.q_; return *this; }
    BigRational& operator*=(const BigRational& o) { q_ *= o.q_; return *this; }
    BigRational& operator/=(const BigRational& o) {
        if (o.is_zero()) throw std::domain_error("BigRational: division by zero");
        q_ /= o.q_;
        return *this;
    }

    friend BigRational operator+(BigRational a, const BigRational& b) { return a += b; }
    friend BigRational operator-(BigRational a, const BigRational& b) { return a -= b; }
    friend BigRational operator*(BigRational a, const BigRational& b) { return a *= b; }
    friend BigRational operator/(BigRational a, const BigRational& b) { return a /= b; }

    friend bool operator==(const BigRational& a, const BigRational& b) { return a.q_ == b.q_; }
    friend bool operator!=(const BigRational& a, const BigRational& b) { return a.q_ != b.q_; }
    friend bool operator<(const BigRational& a, const BigRational& b) { return a.q_ < b.q_; }
    friend bool operator<=(const BigRational& a, const BigRational& b) { return a.q_ <= b.q_; }
    friend bool operator>(const BigRational& a, const BigRational& b) { return a.q_ > b.q_; }
    friend bool operator>=(const BigRational& a, const BigRational& b) { return a.q_ >= b.q_; }

    std::string to_string() const {
        return q_.get_den() == 1 ? q_.get_num().get_str() : q_.get_str();
    }

    const mpq_class& raw() const { return q_; }

private:
    mpq_class q_;
};

inline BigRational abs(const BigRational& a) { return a.sign() < 0 ? -a : a; }

inline BigInt pow_int(const BigInt& base, unsigned long e) {
    BigInt r;
    mpz_pow_ui(r.get_mpz_t(), base.get_mpz_t(), e);
    return r;
}

// base^e for integer e (negative allowed for nonzero base).
inline BigRational pow_rat(const BigRational& base, long e) {
    if (e == 0) return BigRational(1);
    if (e < 0) {
        if (base.is_zero()) throw std::domain_error("pow_rat: 0 to negative power");
        return BigRational(1) / pow_rat(base, -e);
    }
    return BigRational(pow_int(base.num(), static_cast<unsigned long>(e)),
                       pow_int(base.den(), static_cast<unsigned long>(e)));
}

inline BigInt factorial(unsigned long m) {
    BigInt r;
    mpz_fac_ui(r.get_mpz_t(), m);
    return r;
}

inline BigInt binomial(unsigned long n, unsigned long k) {
    BigInt r;
    mpz_bin_uiui(r.get_mpz_t(), n, k);
    return r;
}

} // namespace rtz
