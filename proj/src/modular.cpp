#include "intersective/modular.hpp"

#include <algorithm>
#include <utility>

#include "intersective/error.hpp"

namespace intersective {

std::uint64_t Fp::pow(std::uint64_t base, std::uint64_t exp) const {
    std::uint64_t result = 1 % p_;
    base %= p_;
    while (exp) {
        if (exp & 1) result = mul(result, base);
        base = mul(base, base);
        exp >>= 1;
    }
    return result;
}

FpPoly::FpPoly(std::uint64_t p, std::vector<std::uint64_t> coeffs) : p_(p), coeffs_(std::move(coeffs)) {
    for (auto& c : coeffs_) c %= p_;
    while (!coeffs_.empty() && coeffs_.back() == 0) coeffs_.pop_back();
}

Reduction reduce(const IntPoly& f, std::uint64_t p) {
    std::vector<std::uint64_t> c;
    c.reserve(f.coeffs().size());
    for (const auto& x : f.coeffs()) c.push_back(mod_u64(x, p));
    FpPoly g(p, std::move(c));
    const bool vanishes = g.is_zero();
    return {std::move(g), vanishes};
}

namespace {

// In-place remainder of a (mutable coefficient buffer) modulo monic m.
void rem_monic_inplace(std::vector<std::uint64_t>& a, const std::vector<std::uint64_t>& m, const Fp& F) {
    const std::size_t dm = m.size() - 1;
    while (a.size() > dm) {
        const std::uint64_t top = a.back();
        if (top != 0) {
            const std::size_t shift = a.size() - 1 - dm;
            for (std::size_t j = 0; j < dm; ++j) {
                a[shift + j] = F.sub(a[shift + j], F.mul(top, m[j]));
            }
        }
        a.pop_back();
    }
    while (!a.empty() && a.back() == 0) a.pop_back();
}

std::vector<std::uint64_t> mul_raw(const std::vector<std::uint64_t>& a, const std::vector<std::uint64_t>& b,
                                   const Fp& F) {
    if (a.empty() || b.empty()) return {};
    std::vector<std::uint64_t> out(a.size() + b.size() - 1, 0);
    for (std::size_t i = 0; i < a.size(); ++i) {
        if (a[i] == 0) continue;
        for (std::size_t j = 0; j < b.size(); ++j) out[i + j] = F.add(out[i + j], F.mul(a[i], b[j]));
    }
    return out;
}

}  // namespace

FpPoly fp_monic(const FpPoly& f) {
    if (f.is_zero()) return f;
    Fp F(f.modulus());
    const std::uint64_t li = F.inv(f.coeffs().back());
    std::vector<std::uint64_t> c = f.coeffs();
    for (auto& x : c) x = F.mul(x, li);
    return FpPoly(f.modulus(), std::move(c));
}

FpPoly fp_sub(const FpPoly& a, const FpPoly& b) {
    Fp F(a.modulus());
    std::vector<std::uint64_t> c(std::max(a.coeffs().size(), b.coeffs().size()), 0);
    for (std::size_t i = 0; i < c.size(); ++i) {
        c[i] = F.sub(a.coeff(static_cast<int>(i)), b.coeff(static_cast<int>(i)));
    }
    return FpPoly(a.modulus(), std::move(c));
}

FpPoly fp_mul(const FpPoly& a, const FpPoly& b) {
    return FpPoly(a.modulus(), mul_raw(a.coeffs(), b.coeffs(), Fp(a.modulus())));
}

FpPoly fp_rem(const FpPoly& a, const FpPoly& m) {
    if (m.is_zero()) throw InputError("remainder modulo the zero polynomial");
    Fp F(a.modulus());
    const std::uint64_t li = F.inv(m.coeffs().back());
    std::vector<std::uint64_t> mm = m.coeffs();
    for (auto& x : mm) x = F.mul(x, li);
    std::vector<std::uint64_t> r = a.coeffs();
    rem_monic_inplace(r, mm, F);
    return FpPoly(a.modulus(), std::move(r));
}

FpPoly fp_div(const FpPoly& a, const FpPoly& m) {
    if (m.is_zero()) throw InputError("division by the zero polynomial");
    Fp F(a.modulus());
    if (a.degree() < m.degree()) return FpPoly(a.modulus(), {});
    const std::uint64_t li = F.inv(m.coeffs().back());
    std::vector<std::uint64_t> r = a.coeffs();
    std::vector<std::uint64_t> q(static_cast<std::size_t>(a.degree() - m.degree() + 1), 0);
    const std::size_t dm = static_cast<std::size_t>(m.degree());
    while (r.size() > dm) {
        const std::uint64_t t = F.mul(r.back(), li);
        const std::size_t shift = r.size() - 1 - dm;
        q[shift] = t;
        if (t != 0) {
            for (std::size_t j = 0; j <= dm; ++j) r[shift + j] = F.sub(r[shift + j], F.mul(t, m.coeffs()[j]));
        }
        r.pop_back();
    }
    return FpPoly(a.modulus(), std::move(q));
}

FpPoly fp_gcd(const FpPoly& a, const FpPoly& b) {
    FpPoly x = a, y = b;
    while (!y.is_zero()) {
        FpPoly r = fp_rem(x, y);
        x = std::move(y);
        y = std::move(r);
    }
    return fp_monic(x);
}

FpPoly fp_powmod(const FpPoly& base, std::uint64_t e, const FpPoly& m) {
    if (m.is_zero()) throw InputError("power modulo the zero polynomial");
    Fp F(m.modulus());
    FpPoly mm_poly = fp_monic(m);
    const std::vector<std::uint64_t>& mm = mm_poly.coeffs();
    std::vector<std::uint64_t> b = fp_rem(base, m).coeffs();
    std::vector<std::uint64_t> result{1};
    rem_monic_inplace(result, mm, F);
    // Left-to-right binary exponentiation.
    int top = 63;
    while (top >= 0 && !((e >> top) & 1)) --top;
    for (int bit = top; bit >= 0; --bit) {
        result = mul_raw(result, result, F);
        rem_monic_inplace(result, mm, F);
        if ((e >> bit) & 1) {
            result = mul_raw(result, b, F);
            rem_monic_inplace(result, mm, F);
        }
    }
    return FpPoly(m.modulus(), std::move(result));
}

int jacobi(std::int64_t a, std::uint64_t n) { return jacobi(BigInt{static_cast<long>(a)}, n); }

int jacobi(const BigInt& a_big, std::uint64_t n) {
    if (n == 0 || (n & 1) == 0) throw InputError("jacobi symbol needs an odd positive modulus");
    std::uint64_t a = mod_u64(a_big, n);
    int t = 1;
    while (a != 0) {
        while ((a & 1) == 0) {
            a >>= 1;
            const std::uint64_t r = n & 7;
            if (r == 3 || r == 5) t = -t;
        }
        std::swap(a, n);
        if ((a & 3) == 3 && (n & 3) == 3) t = -t;
        a %= n;
    }
    return n == 1 ? t : 0;
}

std::size_t count_roots(const FpPoly& g) {
    if (g.is_zero()) throw InputError("identically zero mod p");
    if (g.degree() < 1) return 0;
    const std::uint64_t p = g.modulus();
    const FpPoly x(p, {0, 1});
    FpPoly xp = fp_powmod(x, p, g);
    FpPoly h = fp_gcd(fp_sub(xp, x), g);
    return static_cast<std::size_t>(h.degree());
}

std::size_t count_roots_mod_p(const IntPoly& f, std::uint64_t p) {
    Reduction r = reduce(f, p);
    if (r.vanishes) throw InputError("identically zero mod p");
    return count_roots(r.poly);
}

std::set<std::uint64_t> roots_mod_p_bruteforce(const IntPoly& f, std::uint64_t p) {
    if (p > 10'000) throw InputError("brute-force root search limited to p <= 10000");
    Reduction r = reduce(f, p);
    if (r.vanishes) throw InputError("identically zero mod p");
    Fp F(p);
    std::set<std::uint64_t> out;
    for (std::uint64_t t = 0; t < p; ++t) {
        std::uint64_t acc = 0;
        for (int i = r.poly.degree(); i >= 0; --i) acc = F.add(F.mul(acc, t), r.poly.coeff(i));
        if (acc == 0) out.insert(t);
    }
    return out;
}

int CycleType::fixed_points() const {
    return static_cast<int>(std::count(parts.begin(), parts.end(), 1));
}

int CycleType::total() const {
    int s = 0;
    for (int d : parts) s += d;
    return s;
}

std::string CycleType::to_string() const {
    std::string s;
    for (std::size_t i = 0; i < parts.size(); ++i) {
        if (i) s += ',';
        s += std::to_string(parts[i]);
    }
    return s;
}

CycleType distinct_degree_parts(const FpPoly& g) {
    if (g.is_zero()) throw InputError("identically zero mod p");
    const std::uint64_t p = g.modulus();
    const FpPoly x(p, {0, 1});
    CycleType ct;
    FpPoly remaining = fp_monic(g);
    FpPoly h = x;
    for (int d = 1; remaining.degree() >= 2 * d; ++d) {
        // h = x^(p^d) mod remaining
        h = fp_powmod(h, p, remaining);
        FpPoly gd = fp_gcd(fp_sub(h, x), remaining);
        if (gd.degree() > 0) {
            for (int k = 0; k < gd.degree() / d; ++k) ct.parts.push_back(d);
            remaining = fp_div(remaining, gd);
            h = fp_rem(h, remaining);
        }
    }
    if (remaining.degree() > 0) ct.parts.push_back(remaining.degree());
    std::sort(ct.parts.begin(), ct.parts.end());
    return ct;
}

CycleType cycle_type_mod_p(const IntPoly& f, std::uint64_t p) {
    IntPoly sf = squarefree_part(f);
    if (sf.degree() < 1) return {};
    BigInt bad = sf.leading() * discriminant(sf);
    if (divisible_by(bad, p)) throw InputError("ramified or bad prime");
    return distinct_degree_parts(reduce(sf, p).poly);
}

}  // namespace intersective
