#pragma once

#include <gmpxx.h>

#include <cstdint>
#include <string>

namespace intersective {

// Exact integers and rationals. Nothing in this library uses fixed-width
// arithmetic for values that can grow.
using BigInt = mpz_class;
using Rational = mpq_class;

inline std::string to_string(const BigInt& n) { return n.get_str(); }

// "num/den", always with an explicit denominator.
inline std::string to_string(const Rational& q) {
    return q.get_num().get_str() + "/" + q.get_den().get_str();
}

inline BigInt from_u64(std::uint64_t v) {
    BigInt r;
    mpz_import(r.get_mpz_t(), 1, 1, sizeof(v), 0, 0, &v);
    return r;
}

inline bool fits_u64(const BigInt& n) {
    return sgn(n) >= 0 && mpz_sizeinbase(n.get_mpz_t(), 2) <= 64;
}

inline std::uint64_t to_u64(const BigInt& n) {
    std::uint64_t v = 0;
    mpz_export(&v, nullptr, 1, sizeof(v), 0, 0, n.get_mpz_t());
    return v;
}

static_assert(sizeof(unsigned long) == 8, "GMP ui functions must take 64-bit operands");

// n mod m in [0, m).
inline std::uint64_t mod_u64(const BigInt& n, std::uint64_t m) {
    return mpz_fdiv_ui(n.get_mpz_t(), static_cast<unsigned long>(m));
}

inline bool divisible_by(const BigInt& n, std::uint64_t p) { return mod_u64(n, p) == 0; }

}  // namespace intersective
