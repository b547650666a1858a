#pragma once

// Reference implementations used only by tests. None of these share code
// paths with the library routines they check.

#include <algorithm>
#include <cstdint>
#include <utility>
#include <random>
#include <set>
#include <vector>

#include "intersective/bigint.hpp"
#include "intersective/intpoly.hpp"

namespace oracle {

using intersective::BigInt;
using intersective::IntPoly;
using intersective::Rational;

inline bool is_prime_trial(std::uint64_t n) {
    if (n < 2) return false;
    for (std::uint64_t d = 2; d * d <= n; ++d) {
        if (n % d == 0) return false;
    }
    return true;
}

inline std::vector<bool> sieve_flags(std::size_t n) {
    std::vector<bool> prime(n + 1, true);
    prime[0] = false;
    if (n >= 1) prime[1] = false;
    for (std::size_t i = 2; i * i <= n; ++i) {
        if (!prime[i]) continue;
        for (std::size_t j = i * i; j <= n; j += i) prime[j] = false;
    }
    return prime;
}

inline std::int64_t pow_mod(std::int64_t b, std::int64_t e, std::int64_t m) {
    std::int64_t r = 1 % m;
    b %= m;
    if (b < 0) b += m;
    while (e > 0) {
        if (e & 1) r = r * b % m;
        b = b * b % m;
        e >>= 1;
    }
    return r;
}

/// Legendre symbol by Euler's criterion, p an odd prime.
inline int euler_criterion(std::int64_t a, std::int64_t p) {
    const std::int64_t r = pow_mod(a, (p - 1) / 2, p);
    return r == 0 ? 0 : (r == 1 ? 1 : -1);
}

/// Roots of f mod p by exact evaluation of f(t) over the integers.
inline std::set<std::uint64_t> roots_by_evaluation(const IntPoly& f, std::uint64_t p) {
    std::set<std::uint64_t> out;
    for (std::uint64_t t = 0; t < p; ++t) {
        if (mpz_divisible_ui_p(intersective::evaluate(f, BigInt{static_cast<unsigned long>(t)}).get_mpz_t(), p)) {
            out.insert(t);
        }
    }
    return out;
}

/// Small dense polynomials over F_p with plain long arithmetic.
using SmallPoly = std::vector<long>;

inline void trim(SmallPoly& a) {
    while (!a.empty() && a.back() == 0) a.pop_back();
}

inline SmallPoly reduce(const IntPoly& f, long p) {
    SmallPoly out;
    for (const auto& c : f.coeffs()) out.push_back(static_cast<long>(mpz_fdiv_ui(c.get_mpz_t(), p)));
    trim(out);
    return out;
}

/// Quotient and remainder of a by monic m.
inline std::pair<SmallPoly, SmallPoly> divmod_monic(SmallPoly a, const SmallPoly& m, long p) {
    const std::size_t dm = m.size() - 1;
    SmallPoly q(a.size() > dm ? a.size() - dm : 0, 0);
    while (a.size() > dm) {
        const long t = a.back();
        const std::size_t s = a.size() - 1 - dm;
        q[s] = t;
        for (std::size_t j = 0; j <= dm; ++j) a[s + j] = ((a[s + j] - t * m[j]) % p + p) % p;
        a.pop_back();
    }
    trim(a);
    trim(q);
    return {q, a};
}

inline SmallPoly make_monic(SmallPoly a, long p) {
    const long inv = pow_mod(a.back(), p - 2, p);
    for (auto& c : a) c = c * inv % p;
    return a;
}

/// Degrees of the irreducible factors (with multiplicity) of f mod p, by
/// repeatedly splitting off the lowest-degree monic divisor found by
/// enumerating all monic polynomials. Only for tiny p and degree.
inline std::vector<int> factor_degrees_bruteforce(const IntPoly& f, long p) {
    SmallPoly g = make_monic(reduce(f, p), p);
    std::vector<int> out;
    while (g.size() > 1) {
        bool split = false;
        const int deg = static_cast<int>(g.size()) - 1;
        for (int d = 1; d <= deg / 2 && !split; ++d) {
            long total = 1;
            for (int i = 0; i < d; ++i) total *= p;
            for (long code = 0; code < total && !split; ++code) {
                SmallPoly cand(static_cast<std::size_t>(d) + 1, 0);
                long c = code;
                for (int i = 0; i < d; ++i) {
                    cand[static_cast<std::size_t>(i)] = c % p;
                    c /= p;
                }
                cand[static_cast<std::size_t>(d)] = 1;
                auto [q, r] = divmod_monic(g, cand, p);
                if (r.empty()) {
                    out.push_back(d);
                    g = q;
                    split = true;
                }
            }
        }
        if (!split) {
            out.push_back(deg);
            break;
        }
    }
    std::sort(out.begin(), out.end());
    return out;
}

/// Res(f, g) as the determinant of the Sylvester matrix, by rational
/// Gaussian elimination.
inline BigInt sylvester_resultant(const IntPoly& f, const IntPoly& g) {
    const int m = f.degree(), n = g.degree();
    const int size = m + n;
    std::vector<std::vector<Rational>> a(static_cast<std::size_t>(size), std::vector<Rational>(static_cast<std::size_t>(size)));
    for (int r = 0; r < n; ++r) {
        for (int i = 0; i <= m; ++i) a[r][r + i] = f.coeff(m - i);
    }
    for (int r = 0; r < m; ++r) {
        for (int i = 0; i <= n; ++i) a[n + r][r + i] = g.coeff(n - i);
    }
    Rational det = 1;
    for (int c = 0; c < size; ++c) {
        int piv = c;
        while (piv < size && a[piv][c] == 0) ++piv;
        if (piv == size) return 0;
        if (piv != c) {
            std::swap(a[piv], a[c]);
            det = -det;
        }
        det *= a[c][c];
        for (int r = c + 1; r < size; ++r) {
            if (a[r][c] == 0) continue;
            Rational k = a[r][c] / a[c][c];
            for (int j = c; j < size; ++j) a[r][j] -= k * a[c][j];
        }
    }
    return det.get_num();
}

inline IntPoly random_poly(std::mt19937_64& rng, int max_degree, long max_coeff) {
    std::uniform_int_distribution<int> deg(0, max_degree);
    std::uniform_int_distribution<long> coef(-max_coeff, max_coeff);
    const int d = deg(rng);
    std::vector<BigInt> c;
    for (int i = 0; i <= d; ++i) c.emplace_back(coef(rng));
    return IntPoly(std::move(c));
}

}  // namespace oracle
