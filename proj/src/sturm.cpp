#include "rtz/sturm.hpp"

#include <stdexcept>

namespace rtz {

namespace {

int count_variations(const std::vector<int>& signs) {
    int v = 0, last = 0;
    for (int s : signs) {
        if (s == 0) continue;
        if (last != 0 && s != last) ++v;
        last = s;
    }
    return v;
}

} // namespace

SturmChain SturmChain::build(const DensePoly& p) {
    if (p.is_zero()) throw std::domain_error("SturmChain: zero polynomial");
    SturmChain sc;
    if (p.degree() == 0) {
        sc.chain_.push_back(detail::primitive_integer_form(p));
        return sc;
    }
    auto chain = detail::signed_prs(p, p.derivative());
    // If p was not squarefree the chain's tail is (a multiple of) the gcd;
    // dividing every element by it yields a valid chain for the squarefree
    // part, since exact division by a common factor commutes with remainders.
    const DensePoly& tail = chain.back();
    if (tail.degree() > 0) {
        for (auto& e : chain)
            e = detail::primitive_integer_form(divide_exact(e, tail));
    }
    sc.chain_ = std::move(chain);
    return sc;
}

int SturmChain::variations_at(const BigRational& x) const {
    std::vector<int> signs;
    signs.reserve(chain_.size());
    for (const auto& e : chain_) signs.push_back(e.eval(x).sign());
    return count_variations(signs);
}

int SturmChain::variations_at_plus_infinity() const {
    std::vector<int> signs;
    signs.reserve(chain_.size());
    for (const auto& e : chain_) signs.push_back(e.leading().sign());
    return count_variations(signs);
}

int SturmChain::variations_at_minus_infinity() const {
    std::vector<int> signs;
    signs.reserve(chain_.size());
    for (const auto& e : chain_) {
        int s = e.leading().sign();
        if (e.degree() % 2 != 0) s = -s;
        signs.push_back(s);
    }
    return count_variations(signs);
}

int count_real_roots_in(const DensePoly& q, const BigRational& a, const BigRational& b) {
    if (q.is_zero()) throw std::domain_error("count_real_roots_in: zero polynomial");
    if (!(a < b)) throw std::domain_error("count_real_roots_in: requires a < b");
    if (q.eval(a).is_zero())
        throw std::domain_error("count_real_roots_in: left endpoint is a root; perturb endpoints");
    if (q.eval(b).is_zero())
        throw std::domain_error("count_real_roots_in: right endpoint is a root; perturb endpoints");
    if (q.degree() == 0) return 0;
    SturmChain sc = SturmChain::build(q);
    // b is not a root, so (a, b] and (a, b) coincide.
    return sc.variations_at(a) - sc.variations_at(b);
}

int count_distinct_real_roots(const DensePoly& q) {
    if (q.is_zero()) throw std::domain_error("count_distinct_real_roots: zero polynomial");
    if (q.degree() == 0) return 0;
    SturmChain sc = SturmChain::build(q);
    return sc.variations_at_minus_infinity() - sc.variations_at_plus_infinity();
}

std::pair<BigRational, BigRational> widen_to_nonroots(const DensePoly& q,
                                                      BigRational a, BigRational b) {
    if (q.is_zero()) throw std::domain_error("widen_to_nonroots: zero polynomial");
    if (!(a < b)) throw std::domain_error("widen_to_nonroots: requires a < b");
    BigRational step = (b - a) / BigRational(1000000);
    while (q.eval(a).is_zero()) {
        a -= step;
        step /= 2;
    }
    step = (b - a) / BigRational(1000000);
    while (q.eval(b).is_zero()) {
        b += step;
        step /= 2;
    }
    return {a, b};
}

} // namespace rtz
