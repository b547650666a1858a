#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <variant>
#include <vector>

#include "intersective/bigint.hpp"
#include "intersective/gf2.hpp"
#include "intersective/intpoly.hpp"

namespace intersective {

/// Binary quadratic form a x^2 + b xy + c y^2. Not all coefficients zero.
struct QuadForm {
    BigInt a, b, c;

    QuadForm(BigInt a, BigInt b, BigInt c);
    QuadForm(long a, long b, long c) : QuadForm(BigInt{a}, BigInt{b}, BigInt{c}) {}

    /// The dehomogenized polynomial a t^2 + b t + c.
    IntPoly t_polynomial() const;
    /// "a,b,c"
    std::string to_string() const;

    friend bool operator==(const QuadForm&, const QuadForm&) = default;
};

/// b^2 - 4ac.
BigInt form_discriminant(const QuadForm& q);

/// a > 0 and b^2 - 4ac < 0.
bool is_positive_definite(const QuadForm& q);

/// True iff a x^2 + b xy + c y^2 = 0 has a solution (x, y) != (0, 0) mod p.
/// Quadratic-character fast path for odd p not dividing a or the
/// discriminant; exhaustive otherwise.
bool form_covers_p(const QuadForm& q, std::uint64_t p);

/// Always exhaustive over the projective line: (1, 0) and (t, 1), t < p.
bool form_covers_p_exhaustive(const QuadForm& q, std::uint64_t p);

/// Square class of a nonzero integer as an F_2 vector over an ordered basis.
struct SquareClass {
    BigInt kernel;       // squarefree representative; 1 for the trivial class
    Gf2Vector vector;    // coordinates over SquareClassSet::basis
    bool trivial() const { return vector.is_zero(); }
};

/// Square classes of the discriminants of a list of forms. basis[0] is -1;
/// the rest are pairwise coprime squarefree atoms (primes in all practical
/// cases) in ascending order.
struct SquareClassSet {
    std::vector<BigInt> basis;
    std::vector<SquareClass> classes;
};

SquareClassSet build_square_classes(const std::vector<QuadForm>& forms);

/// Exact dyadic rational num / 2^log2_den in lowest terms.
struct Dyadic {
    BigInt num = 0;
    unsigned log2_den = 0;

    static Dyadic make(BigInt num, unsigned log2_den);
    Rational value() const;
    std::string to_string() const;  // "num/den"
    friend bool operator==(const Dyadic&, const Dyadic&) = default;
};

/// Assignment of +1/-1 to each basis element of a SquareClassSet.
struct FrobeniusClass {
    std::vector<BigInt> basis;
    std::vector<int> values;

    /// Character value on an arbitrary vector over the same basis.
    int evaluate(const Gf2Vector& v) const;
};

struct Covers {
    std::vector<std::size_t> witness;  // 0-based form indices, odd size
};

struct FailsToCover {
    Dyadic density;  // 2^(-dim span)
    FrobeniusClass witness_class;
    std::optional<std::uint64_t> example_prime;  // none below the search bound
};

struct CoverVerdict {
    SquareClassSet classes;
    std::size_t rank = 0;
    std::variant<Covers, FailsToCover> outcome;

    bool covers() const { return std::holds_alternative<Covers>(outcome); }
    /// Density of primes left uncovered: 0 for Covers.
    Dyadic uncovered_density() const;
};

/// Search bound for the smallest uncovered prime.
inline constexpr std::uint64_t kExamplePrimeBound = 1'000'000;

/// Decides whether, for every large prime p, some form has a nontrivial zero
/// mod p. Throws InputError for an empty list.
CoverVerdict decide_cover(const std::vector<QuadForm>& forms);

/// Checks a Covers witness: odd size and the kernel product is a square.
bool verify_cover_witness(const std::vector<QuadForm>& forms, const std::vector<std::size_t>& witness);

/// Distribution of the number of distinct roots of prod(a_i t^2 + b_i t + c_i)
/// mod p over Frobenius classes of the multiquadratic splitting field, each
/// class weighted 2^(-r).
struct RootDistribution {
    std::map<int, Dyadic> density;  // root count -> density
    int min_roots = 0;
    std::size_t rank = 0;
};

inline constexpr std::size_t kMaxEnumerationRank = 24;

RootDistribution exact_root_distribution(const std::vector<QuadForm>& quadratics);

/// prod(a_i t^2 + b_i t + c_i).
IntPoly product_polynomial(const std::vector<QuadForm>& quadratics);

}  // namespace intersective
