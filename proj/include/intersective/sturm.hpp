#pragma once

#include <string>
#include <vector>

#include "intersective/bigint.hpp"
#include "intersective/intpoly.hpp"

namespace intersective {

/// Signed remainder sequence of a squarefree polynomial and its derivative,
/// kept in Z[x] by positive rescaling. The sign pattern at a point is that
/// of the rational Sturm sequence.
class SturmChain {
public:
    /// Builds the chain of squarefree_part(f). Throws InputError for the
    /// zero polynomial.
    explicit SturmChain(const IntPoly& f);

    const std::vector<IntPoly>& polys() const { return chain_; }
    const IntPoly& base() const { return chain_.front(); }

    /// Sign variations at x, at -infinity and at +infinity.
    int variations_at(const Rational& x) const;
    int variations_at_neg_inf() const;
    int variations_at_pos_inf() const;

    /// Distinct real roots in the half-open interval (lo, hi].
    int count_in(const Rational& lo, const Rational& hi) const;
    int count_all() const { return variations_at_neg_inf() - variations_at_pos_inf(); }

private:
    std::vector<IntPoly> chain_;
};

/// Half-open isolating interval (lo, hi] holding exactly one real root. When
/// `exact` is set the root is hi itself.
struct Interval {
    Rational lo;
    Rational hi;
    bool exact = false;

    /// Decimal midpoint, for display only.
    double approx() const { return (lo.get_d() + hi.get_d()) / 2.0; }
};

/// Number of distinct real roots. Requires deg f >= 1.
int count_real_roots(const IntPoly& f);

/// All real roots of f as disjoint isolating intervals, ascending, each of
/// width at most 2^-precision_bits unless it is exact.
std::vector<Interval> isolate_real_roots(const IntPoly& f, int precision_bits = 20);

/// Cauchy bound 1 + max|c_i| / |lc|; every complex root has modulus below it.
Rational cauchy_bound(const IntPoly& f);

}  // namespace intersective
