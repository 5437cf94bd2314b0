#include "rtz/poly.hpp"

#include <stdexcept>

namespace rtz {

const BigRational& DensePoly::leading() const {
    if (c_.empty()) throw std::domain_error("leading(): zero polynomial");
    return c_.back();
}

BigRational DensePoly::eval(const BigRational& x) const {
    BigRational acc(0);
    for (size_t i = c_.size(); i-- > 0;) acc = acc * x + c_[i];
    return acc;
}

DensePoly DensePoly::derivative() const {
    if (c_.size() <= 1) return DensePoly();
    std::vector<BigRational> d(c_.size() - 1);
    for (size_t i = 1; i < c_.size(); ++i)
        d[i - 1] = c_[i] * BigRational(BigInt(i));
    return DensePoly(std::move(d));
}

DensePoly DensePoly::scale_arg(const BigRational& s) const {
    std::vector<BigRational> r(c_.size());
    BigRational sp(1);
    for (size_t i = 0; i < c_.size(); ++i) {
        r[i] = c_[i] * sp;
        sp *= s;
    }
    return DensePoly(std::move(r));
}

DensePoly DensePoly::scaled(const BigRational& c) const {
    std::vector<BigRational> r(c_.size());
    for (size_t i = 0; i < c_.size(); ++i) r[i] = c_[i] * c;
    return DensePoly(std::move(r));
}

DensePoly DensePoly::monic() const {
    const BigRational& lc = leading();
    return scaled(BigRational(1) / lc);
}

size_t DensePoly::order_at_zero() const {
    for (size_t i = 0; i < c_.size(); ++i)
        if (!c_[i].is_zero()) return i;
    return 0;
}

DensePoly DensePoly::shifted_down(size_t k) const {
    if (k == 0) return *this;
    if (c_.size() < k) throw std::domain_error("shifted_down: k exceeds degree");
    for (size_t i = 0; i < k; ++i)
        if (!c_[i].is_zero())
            throw std::domain_error("shifted_down: low-order coefficient nonzero");
    return DensePoly(std::vector<BigRational>(c_.begin() + static_cast<long>(k), c_.end()));
}

DensePoly DensePoly::operator-() const {
    std::vector<BigRational> r(c_.size());
    for (size_t i = 0; i < c_.size(); ++i) r[i] = -c_[i];
    return DensePoly(std::move(r));
}

DensePoly operator+(const DensePoly& a, const DensePoly& b) {
    std::vector<BigRational> r(std::max(a.c_.size(), b.c_.size()));
    for (size_t i = 0; i < r.size(); ++i) r[i] = a.coeff(i) + b.coeff(i);
    return DensePoly(std::move(r));
}

DensePoly operator-(const DensePoly& a, const DensePoly& b) {
    std::vector<BigRational> r(std::max(a.c_.size(), b.c_.size()));
    for (size_t i = 0; i < r.size(); ++i) r[i] = a.coeff(i) - b.coeff(i);
    return DensePoly(std::move(r));
}

DensePoly operator*(const DensePoly& a, const DensePoly& b) {
    if (a.is_zero() || b.is_zero()) return DensePoly();
    std::vector<BigRational> r(a.c_.size() + b.c_.size() - 1);
    for (size_t i = 0; i < a.c_.size(); ++i) {
        if (a.c_[i].is_zero()) continue;
        for (size_t j = 0; j < b.c_.size(); ++j)
            r[i + j] += a.c_[i] * b.c_[j];
    }
    return DensePoly(std::move(r));
}

std::string DensePoly::to_string(const std::string& var) const {
    if (c_.empty()) return "0";
    std::string out;
    for (size_t i = c_.size(); i-- > 0;) {
        if (c_[i].is_zero()) continue;
        BigRational a = c_[i];
        if (out.empty()) {
            if (a.sign() < 0) { out += "-"; a = -a; }
        } else {
            out += a.sign() < 0 ? " - " : " + ";
            if (a.sign() < 0) a = -a;
        }
        const bool unit = (a == BigRational(1)) && i > 0;
        if (!unit) out += a.to_string();
        if (i > 0) {
            if (!unit) out += "*";
            out += var;
            if (i > 1) out += "^" + std::to_string(i);
        }
    }
    return out;
}

std::pair<DensePoly, DensePoly> divrem(const DensePoly& a, const DensePoly& b) {
    if (b.is_zero()) throw std::domain_error("divrem: division by zero polynomial");
    if (a.degree() < b.degree()) return {DensePoly(), a};
    std::vector<BigRational> q(static_cast<size_t>(a.degree() - b.degree()) + 1);
    std::vector<BigRational> r(a.coeffs());
    const int db = b.degree();
    const BigRational& lb = b.leading();
    for (int i = static_cast<int>(r.size()) - 1; i >= db; --i) {
        if (r[static_cast<size_t>(i)].is_zero()) continue;
        BigRational f = r[static_cast<size_t>(i)] / lb;
        q[static_cast<size_t>(i - db)] = f;
        for (int j = 0; j <= db; ++j)
            r[static_cast<size_t>(i - db + j)] -= f * b.coeff(static_cast<size_t>(j));
    }
    return {DensePoly(std::move(q)), DensePoly(std::move(r))};
}

DensePoly divide_exact(const DensePoly& a, const DensePoly& b) {
    auto [q, r] = divrem(a, b);
    if (!r.is_zero()) throw std::domain_error("divide_exact: remainder is nonzero");
    return q;
}

namespace detail {

DensePoly primitive_integer_form(const DensePoly& p) {
    if (p.is_zero()) return p;
    BigInt den_lcm(1);
    for (const auto& c : p.coeffs())
        if (!c.is_zero()) mpz_lcm(den_lcm.get_mpz_t(), den_lcm.get_mpz_t(), c.den().get_mpz_t());
    BigInt content(0);
    std::vector<BigRational> ints(p.coeffs().size());
    for (size_t i = 0; i < ints.size(); ++i) {
        ints[i] = p.coeff(i) * BigRational(den_lcm);
        mpz_gcd(content.get_mpz_t(), content.get_mpz_t(), ints[i].num().get_mpz_t());
    }
    // content of a nonzero poly is positive; mpz_gcd yields nonnegative
    const BigRational inv_c(BigInt(1), content);
    for (auto& c : ints) c *= inv_c;
    return DensePoly(std::move(ints));
}

/* r <- remainder of f by g scaled by a positive constant, then negated.
 * Works in place over integer-valued coefficients, no fractions. */
static DensePoly neg_scaled_rem(const DensePoly& f, const DensePoly& g) {
    DensePoly r = f;
    const BigRational& lg = g.leading();
    long steps = 0;
    while (!r.is_zero() && r.degree() >= g.degree()) {
        const long shift = r.degree() - g.degree();
        // lg * r - lc(r) * x^shift * g   (degree strictly drops)
        DensePoly kill = DensePoly::monomial(r.leading(), static_cast<size_t>(shift)) * g;
        r = r.scaled(lg) - kill;
        ++steps;
    }
    // accumulated scalar is lg^steps; force it positive
    if (lg.sign() < 0 && (steps % 2) != 0) r = -r;
    return -r;
}

std::vector<DensePoly> signed_prs(const DensePoly& f0, const DensePoly& f1) {
    std::vector<DensePoly> chain;
    chain.push_back(primitive_integer_form(f0));
    if (f1.is_zero()) return chain;
    chain.push_back(primitive_integer_form(f1));
    while (true) {
        const DensePoly& a = chain[chain.size() - 2];
        const DensePoly& b = chain.back();
        if (b.degree() < 1) break; // next remainder is 0 (or b constant)
        DensePoly r = neg_scaled_rem(a, b);
        if (r.is_zero()) break;
        chain.push_back(primitive_integer_form(r));
    }
    return chain;
}

} // namespace detail

DensePoly poly_gcd(const DensePoly& p, const DensePoly& q) {
    if (p.is_zero() && q.is_zero())
        throw std::domain_error("poly_gcd: gcd(0, 0) undefined");
    if (p.is_zero()) return q.monic();
    if (q.is_zero()) return p.monic();
    if (p.degree() == 0 || q.degree() == 0) return DensePoly::constant(BigRational(1));
    const bool swap = p.degree() < q.degree();
    auto chain = detail::signed_prs(swap ? q : p, swap ? p : q);
    return chain.back().monic();
}

bool is_squarefree(const DensePoly& p) {
    if (p.is_zero()) throw std::domain_error("is_squarefree: zero polynomial");
    if (p.degree() <= 1) return true;
    return poly_gcd(p, p.derivative()).degree() == 0;
}

std::vector<std::pair<DensePoly, unsigned>> squarefree_decomposition(const DensePoly& p) {
    if (p.is_zero())
        throw std::domain_error("squarefree_decomposition: zero polynomial");
    std::vector<std::pair<DensePoly, unsigned>> out;
    if (p.degree() == 0) return out;

    DensePoly g = poly_gcd(p, p.derivative());
    if (g.degree() == 0) {
        out.emplace_back(p.monic(), 1u);
        return out;
    }
    DensePoly w = divide_exact(p, g);         // product of distinct factors (times lc)
    DensePoly y = divide_exact(p.derivative(), g);
    DensePoly z = y - w.derivative();
    unsigned i = 1;
    while (w.degree() > 0) {
        DensePoly h = poly_gcd(w, z);
        if (h.degree() > 0) out.emplace_back(h, i);
        w = divide_exact(w, h);
        y = divide_exact(z, h);
        z = y - w.derivative();
        ++i;
    }
    return out;
}

bool is_self_inversive(const DensePoly& p) {
    if (p.is_zero()) throw std::domain_error("is_self_inversive: zero polynomial");
    const size_t n = p.coeffs().size();
    for (size_t i = 0; i <= (n - 1) / 2; ++i)
        if (p.coeff(i) != p.coeff(n - 1 - i)) return false;
    return true;
}

bool is_anti_self_inversive(const DensePoly& p) {
    if (p.is_zero()) throw std::domain_error("is_anti_self_inversive: zero polynomial");
    const size_t n = p.coeffs().size();
    for (size_t i = 0; i <= (n - 1) / 2; ++i)
        if (p.coeff(i) != -p.coeff(n - 1 - i)) return false;
    return true;
}

DensePoly halve_even_poly(const DensePoly& p) {
    if (p.is_zero()) return p;
    for (size_t i = 1; i < p.coeffs().size(); i += 2)
        if (!p.coeff(i).is_zero())
            throw std::domain_error("halve_even_poly: odd-degree coefficient nonzero");
    std::vector<BigRational> g(p.coeffs().size() / 2 + 1);
    for (size_t i = 0; i < g.size(); ++i) g[i] = p.coeff(2 * i);
    return DensePoly(std::move(g));
}

BigRational cauchy_root_bound(const DensePoly& p) {
    if (p.degree() < 1) throw std::domain_error("cauchy_root_bound: degree must be >= 1");
    const BigRational& lc = p.leading();
    BigRational m(0);
    for (size_t i = 0; i + 1 < p.coeffs().size(); ++i) {
        BigRational r = abs(p.coeff(i) / lc);
        if (r > m) m = r;
    }
    return m + 1;
}

CircleToInterval circle_to_interval(const DensePoly& g) {
    if (g.is_zero()) throw std::domain_error("circle_to_interval: zero polynomial");
    if (!is_self_inversive(g) && !is_anti_self_inversive(g))
        throw std::domain_error(
            "circle_to_interval: polynomial is neither self-inversive nor anti-self-inversive");

    CircleToInterval out;
    out.reduced = g;
    const DensePoly w_minus_1(std::vector<BigRational>{BigRational(-1), BigRational(1)});
    const DensePoly w_plus_1(std::vector<BigRational>{BigRational(1), BigRational(1)});
    while (out.reduced.degree() > 0 && out.reduced.eval(BigRational(1)).is_zero()) {
        out.reduced = divide_exact(out.reduced, w_minus_1);
        ++out.mult_at_plus_one;
    }
    while (out.reduced.degree() > 0 && out.reduced.eval(BigRational(-1)).is_zero()) {
        out.reduced = divide_exact(out.reduced, w_plus_1);
        ++out.mult_at_minus_one;
    }

    // Dividing a (anti-)self-inversive polynomial by (w -+ 1) preserves the
    // property up to sign; once w = 1 is no longer a root the result must be
    // plain self-inversive, hence of even degree.
    if (!is_self_inversive(out.reduced) || out.reduced.degree() % 2 != 0)
        throw std::logic_error("circle_to_interval: reduction did not yield an even palindrome");

    const size_t s = static_cast<size_t>(out.reduced.degree()) / 2;
    // reduced(w)/w^s = g_s + sum_{m=1..s} g_{s+m} (w^m + w^{-m}); with
    // t = w + 1/w the bracket is T~_m(t): T~_0 = 2, T~_1 = t,
    // T~_{m+1} = t T~_m - T~_{m-1}.
    const DensePoly t_var(std::vector<BigRational>{BigRational(0), BigRational(1)});
    DensePoly tm_prev = DensePoly::constant(BigRational(2));
    DensePoly tm = t_var;
    DensePoly q = DensePoly::constant(out.reduced.coeff(s));
    for (size_t m = 1; m <= s; ++m) {
        q = q + tm.scaled(out.reduced.coeff(s + m));
        DensePoly next = t_var * tm - tm_prev;
        tm_prev = tm;
        tm = next;
    }
    out.q = q;

    // w = +-1 roots were divided out, and q(+-2) = reduced(+-1) / (+-1)^s.
    if (out.q.eval(BigRational(2)).is_zero() || out.q.eval(BigRational(-2)).is_zero())
        throw std::logic_error("circle_to_interval: interval endpoints still roots");
    return out;
}

} // namespace rtz
