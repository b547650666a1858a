#include "intersective/sturm.hpp"

#include <utility>

#include "intersective/error.hpp"

namespace intersective {

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

}  // namespace

SturmChain::SturmChain(const IntPoly& f) {
    if (f.is_zero()) throw InputError("Sturm chain of the zero polynomial");
    IntPoly p0 = squarefree_part(f);
    chain_.push_back(p0);
    if (p0.degree() < 1) return;
    chain_.push_back(primitive_part(derivative(p0)));
    while (chain_.back().degree() > 0) {
        const IntPoly& a = chain_[chain_.size() - 2];
        const IntPoly& b = chain_.back();
        // prem multiplies a by lc(b)^(deg a - deg b + 1); undo a negative
        // factor so the remainder keeps the sign of the true remainder.
        IntPoly r = pseudo_remainder(a, b);
        const int k = a.degree() - b.degree() + 1;
        if (sgn(b.leading()) < 0 && (k & 1)) r = -r;
        if (r.is_zero()) throw InvariantViolation("Sturm chain hit zero on a squarefree input");
        chain_.push_back(primitive_part(-r));
    }
}

int SturmChain::variations_at(const Rational& x) const {
    std::vector<int> signs;
    signs.reserve(chain_.size());
    for (const auto& p : chain_) signs.push_back(sign_at(p, x));
    return count_variations(signs);
}

int SturmChain::variations_at_pos_inf() const {
    std::vector<int> signs;
    for (const auto& p : chain_) signs.push_back(sgn(p.leading()));
    return count_variations(signs);
}

int SturmChain::variations_at_neg_inf() const {
    std::vector<int> signs;
    for (const auto& p : chain_) {
        const int s = sgn(p.leading());
        signs.push_back((p.degree() & 1) ? -s : s);
    }
    return count_variations(signs);
}

int SturmChain::count_in(const Rational& lo, const Rational& hi) const {
    return variations_at(lo) - variations_at(hi);
}

int count_real_roots(const IntPoly& f) {
    if (f.degree() < 1) throw InputError("real root count needs a polynomial of degree >= 1");
    return SturmChain(f).count_all();
}

Rational cauchy_bound(const IntPoly& f) {
    if (f.degree() < 1) throw InputError("root bound needs a polynomial of degree >= 1");
    BigInt m = 0;
    for (int i = 0; i < f.degree(); ++i) {
        BigInt a = abs(f.coeff(i));
        if (a > m) m = a;
    }
    Rational b(m, abs(f.leading()));
    b.canonicalize();
    return b + 1;
}

std::vector<Interval> isolate_real_roots(const IntPoly& f, int precision_bits) {
    if (f.degree() < 1) throw InputError("root isolation needs a polynomial of degree >= 1");
    if (precision_bits < 0) throw InputError("precision must be non-negative");
    const SturmChain chain(f);
    const IntPoly& g = chain.base();
    const Rational bound = cauchy_bound(g);

    Rational width_cap = 1;
    mpq_div_2exp(width_cap.get_mpq_t(), width_cap.get_mpq_t(), static_cast<mp_bitcnt_t>(precision_bits));

    std::vector<Interval> out;
    // Depth-first bisection, left half first, so output is ascending.
    std::vector<std::pair<Rational, Rational>> stack;
    stack.emplace_back(-bound, bound);
    while (!stack.empty()) {
        auto [lo, hi] = stack.back();
        stack.pop_back();
        const int n = chain.count_in(lo, hi);
        if (n == 0) continue;
        if (n > 1) {
            Rational mid = (lo + hi) / 2;
            stack.emplace_back(mid, hi);
            stack.emplace_back(lo, mid);
            continue;
        }
        // Exactly one root in (lo, hi]; shrink it.
        Interval iv{lo, hi, sign_at(g, hi) == 0};
        while (!iv.exact && iv.hi - iv.lo > width_cap) {
            Rational mid = (iv.lo + iv.hi) / 2;
            if (sign_at(g, mid) == 0) {
                iv.hi = mid;
                iv.exact = true;
            } else if (chain.count_in(iv.lo, mid) == 1) {
                iv.hi = mid;
            } else {
                iv.lo = mid;
            }
        }
        out.push_back(std::move(iv));
    }
    return out;
}

}  // namespace intersective
