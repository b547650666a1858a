#pragma once

#include <cstdint>
#include <set>
#include <string>
#include <vector>

#include "intersective/bigint.hpp"
#include "intersective/intpoly.hpp"

namespace intersective {

/// Arithmetic in Z/pZ for a 64-bit prime p.
class Fp {
public:
    explicit Fp(std::uint64_t p) : p_(p) {}

    std::uint64_t modulus() const { return p_; }
    std::uint64_t add(std::uint64_t a, std::uint64_t b) const {
        std::uint64_t s = a + b;
        return (s >= p_ || s < a) ? s - p_ : s;
    }
    std::uint64_t sub(std::uint64_t a, std::uint64_t b) const { return a >= b ? a - b : a + (p_ - b); }
    std::uint64_t mul(std::uint64_t a, std::uint64_t b) const {
        if (p_ <= 0xffffffffULL) return a * b % p_;
        return static_cast<std::uint64_t>(static_cast<unsigned __int128>(a) * b % p_);
    }
    std::uint64_t pow(std::uint64_t base, std::uint64_t exp) const;
    /// Inverse of a nonzero residue.
    std::uint64_t inv(std::uint64_t a) const { return pow(a, p_ - 2); }

private:
    std::uint64_t p_;
};

/// Polynomial over F_p, ascending coefficients, canonical (no leading zero).
class FpPoly {
public:
    FpPoly(std::uint64_t p, std::vector<std::uint64_t> coeffs);

    std::uint64_t modulus() const { return p_; }
    bool is_zero() const { return coeffs_.empty(); }
    int degree() const { return static_cast<int>(coeffs_.size()) - 1; }
    std::uint64_t coeff(int i) const {
        return i < 0 || i >= static_cast<int>(coeffs_.size()) ? 0 : coeffs_[static_cast<std::size_t>(i)];
    }
    const std::vector<std::uint64_t>& coeffs() const { return coeffs_; }

    friend bool operator==(const FpPoly&, const FpPoly&) = default;

private:
    std::uint64_t p_;
    std::vector<std::uint64_t> coeffs_;
};

/// f mod p. `vanishes` is set when every coefficient is divisible by p, in
/// which case the result is the zero polynomial and the prime is unusable.
struct Reduction {
    FpPoly poly;
    bool vanishes = false;
};
Reduction reduce(const IntPoly& f, std::uint64_t p);

// F_p[x] helpers. All take and return canonical polynomials over the same p.
FpPoly fp_monic(const FpPoly& f);
FpPoly fp_sub(const FpPoly& a, const FpPoly& b);
FpPoly fp_mul(const FpPoly& a, const FpPoly& b);
FpPoly fp_rem(const FpPoly& a, const FpPoly& m);
FpPoly fp_div(const FpPoly& a, const FpPoly& m);
/// Monic gcd; gcd(0, 0) = 0.
FpPoly fp_gcd(const FpPoly& a, const FpPoly& b);
/// base^e mod m, e arbitrary 64-bit.
FpPoly fp_powmod(const FpPoly& base, std::uint64_t e, const FpPoly& m);

/// Jacobi symbol (a | n) for odd n >= 1. Throws InputError otherwise.
int jacobi(const BigInt& a, std::uint64_t n);
int jacobi(std::int64_t a, std::uint64_t n);

/// Number of distinct roots of f in F_p, as deg gcd(x^p - x, f mod p).
/// Throws InputError when f vanishes identically mod p.
std::size_t count_roots_mod_p(const IntPoly& f, std::uint64_t p);
std::size_t count_roots(const FpPoly& g);

/// Roots by trying every residue. Oracle for small p (p <= 10^4).
std::set<std::uint64_t> roots_mod_p_bruteforce(const IntPoly& f, std::uint64_t p);

/// Degrees of the irreducible factors of a squarefree polynomial mod p,
/// sorted ascending.
struct CycleType {
    std::vector<int> parts;

    int fixed_points() const;
    int total() const;
    /// "1,1,2" form; "" for the empty type.
    std::string to_string() const;

    friend auto operator<=>(const CycleType&, const CycleType&) = default;
};

/// Cycle type of Frobenius at p: distinct-degree factorization of
/// squarefree_part(f) mod p. Throws InputError ("ramified or bad prime")
/// when p divides lc * disc of the squarefree part.
CycleType cycle_type_mod_p(const IntPoly& f, std::uint64_t p);

/// Distinct-degree factorization of a squarefree polynomial of degree >= 0.
/// The caller is responsible for squarefreeness mod p.
CycleType distinct_degree_parts(const FpPoly& g);

}  // namespace intersective
