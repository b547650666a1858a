#pragma once

#include <initializer_list>
#include <span>
#include <string>
#include <vector>

#include "intersective/bigint.hpp"

namespace intersective {

/// Univariate polynomial with arbitrary-precision integer coefficients.
///
/// Coefficients are stored in ascending degree order and kept canonical:
/// the last stored coefficient is never zero, so the zero polynomial is the
/// empty sequence. degree() of the zero polynomial is -1; operations that
/// need a genuine degree reject it.
class IntPoly {
public:
    IntPoly() = default;
    explicit IntPoly(std::vector<BigInt> coeffs);
    IntPoly(std::initializer_list<long> coeffs);

    static IntPoly constant(const BigInt& c);
    static IntPoly monomial(const BigInt& c, int degree);

    bool is_zero() const { return coeffs_.empty(); }
    int degree() const { return static_cast<int>(coeffs_.size()) - 1; }

    /// Coefficient of x^i; zero beyond the degree.
    const BigInt& coeff(int i) const;
    const BigInt& leading() const;
    std::span<const BigInt> coeffs() const { return coeffs_; }

    IntPoly operator-() const;
    IntPoly& operator+=(const IntPoly& other);
    IntPoly& operator-=(const IntPoly& other);
    IntPoly& operator*=(const BigInt& k);

    friend IntPoly operator+(IntPoly a, const IntPoly& b) { return a += b; }
    friend IntPoly operator-(IntPoly a, const IntPoly& b) { return a -= b; }
    friend IntPoly operator*(IntPoly a, const BigInt& k) { return a *= k; }
    friend IntPoly operator*(const IntPoly& a, const IntPoly& b);
    friend bool operator==(const IntPoly&, const IntPoly&) = default;

    /// Coefficient-list text form, e.g. "[1,0,1]" for x^2+1 and "[]" for 0.
    std::string to_string() const;
    /// Human form, e.g. "x^2 + 1".
    std::string to_human(char var = 'x') const;

private:
    void normalize();

    std::vector<BigInt> coeffs_;
};

/// Horner evaluation; exact.
BigInt evaluate(const IntPoly& f, const BigInt& x);

/// Sign of f(num/den) for den > 0, computed without leaving the integers.
int sign_at(const IntPoly& f, const Rational& x);

IntPoly derivative(const IntPoly& f);
IntPoly multiply(const IntPoly& f, const IntPoly& g);

/// Non-negative gcd of the coefficients; zero for the zero polynomial.
BigInt content(const IntPoly& f);
/// f / content(f), sign preserved.
IntPoly primitive_part(const IntPoly& f);

/// lc(g)^(deg f - deg g + 1) * f  mod g. Requires g nonzero.
IntPoly pseudo_remainder(const IntPoly& f, const IntPoly& g);

/// Exact quotient f / g in Z[x]; throws InputError if g does not divide f.
IntPoly exact_divide(const IntPoly& f, const IntPoly& g);

/// Primitive gcd over Z[x] with positive leading coefficient (content is
/// dropped). gcd(0, 0) is 0.
IntPoly primitive_gcd(const IntPoly& f, const IntPoly& g);

/// Res(f, g) by the fraction-free subresultant remainder sequence.
BigInt resultant(const IntPoly& f, const IntPoly& g);

/// (-1)^(d(d-1)/2) Res(f, f') / lc(f). Requires deg f >= 1.
BigInt discriminant(const IntPoly& f);

/// Primitive polynomial with the same complex roots as f, all simple, and
/// positive leading coefficient. Requires f nonzero.
IntPoly squarefree_part(const IntPoly& f);

/// The squarefree integer k with n = k m^2 and sign(k) = sign(n).
/// Requires n != 0; throws InputError when the factorization needed to
/// certify the kernel is out of reach.
BigInt squarefree_kernel(const BigInt& n);

/// Prime factorization of |n| restricted to primes with odd exponent, i.e.
/// the "atoms" of the square class of n. Prime factors above the trial
/// division bound may be reported as a single squarefree composite atom when
/// they cannot be split cheaply; such atoms are still coprime to every other
/// atom of the same n.
struct SquareClassFactors {
    int sign = 1;
    std::vector<BigInt> atoms;  // ascending, pairwise coprime, squarefree
};
SquareClassFactors square_class_factors(const BigInt& n);

}  // namespace intersective
