#include "intersective/intpoly.hpp"

#include <algorithm>
#include <utility>

#include "intersective/error.hpp"
#include "intersective/primes.hpp"

namespace intersective {

namespace {
const BigInt kZero{0};
}

IntPoly::IntPoly(std::vector<BigInt> coeffs) : coeffs_(std::move(coeffs)) { normalize(); }

IntPoly::IntPoly(std::initializer_list<long> coeffs) {
    coeffs_.reserve(coeffs.size());
    for (long c : coeffs) coeffs_.emplace_back(c);
    normalize();
}

IntPoly IntPoly::constant(const BigInt& c) { return IntPoly(std::vector<BigInt>{c}); }

IntPoly IntPoly::monomial(const BigInt& c, int degree) {
    std::vector<BigInt> v(static_cast<std::size_t>(degree) + 1);
    v.back() = c;
    return IntPoly(std::move(v));
}

void IntPoly::normalize() {
    while (!coeffs_.empty() && sgn(coeffs_.back()) == 0) coeffs_.pop_back();
}

const BigInt& IntPoly::coeff(int i) const {
    if (i < 0 || i >= static_cast<int>(coeffs_.size())) return kZero;
    return coeffs_[static_cast<std::size_t>(i)];
}

const BigInt& IntPoly::leading() const {
    if (coeffs_.empty()) throw InputError("zero polynomial has no leading coefficient");
    return coeffs_.back();
}

IntPoly IntPoly::operator-() const {
    IntPoly r = *this;
    for (auto& c : r.coeffs_) c = -c;
    return r;
}

IntPoly& IntPoly::operator+=(const IntPoly& other) {
    if (other.coeffs_.size() > coeffs_.size()) coeffs_.resize(other.coeffs_.size());
    for (std::size_t i = 0; i < other.coeffs_.size(); ++i) coeffs_[i] += other.coeffs_[i];
    normalize();
    return *this;
}

IntPoly& IntPoly::operator-=(const IntPoly& other) {
    if (other.coeffs_.size() > coeffs_.size()) coeffs_.resize(other.coeffs_.size());
    for (std::size_t i = 0; i < other.coeffs_.size(); ++i) coeffs_[i] -= other.coeffs_[i];
    normalize();
    return *this;
}

IntPoly& IntPoly::operator*=(const BigInt& k) {
    for (auto& c : coeffs_) c *= k;
    normalize();
    return *this;
}

IntPoly operator*(const IntPoly& a, const IntPoly& b) {
    if (a.is_zero() || b.is_zero()) return {};
    std::vector<BigInt> out(a.coeffs_.size() + b.coeffs_.size() - 1);
    for (std::size_t i = 0; i < a.coeffs_.size(); ++i) {
        if (sgn(a.coeffs_[i]) == 0) continue;
        for (std::size_t j = 0; j < b.coeffs_.size(); ++j) {
            mpz_addmul(out[i + j].get_mpz_t(), a.coeffs_[i].get_mpz_t(), b.coeffs_[j].get_mpz_t());
        }
    }
    return IntPoly(std::move(out));
}

std::string IntPoly::to_string() const {
    std::string s = "[";
    for (std::size_t i = 0; i < coeffs_.size(); ++i) {
        if (i) s += ',';
        s += coeffs_[i].get_str();
    }
    return s + "]";
}

std::string IntPoly::to_human(char var) const {
    if (is_zero()) return "0";
    std::string s;
    for (int i = degree(); i >= 0; --i) {
        const BigInt& c = coeff(i);
        if (sgn(c) == 0) continue;
        BigInt mag = abs(c);
        if (s.empty()) {
            if (sgn(c) < 0) s += '-';
        } else {
            s += sgn(c) < 0 ? " - " : " + ";
        }
        if (mag != 1 || i == 0) s += mag.get_str();
        if (i >= 1) s += var;
        if (i >= 2) s += '^' + std::to_string(i);
    }
    return s;
}

BigInt evaluate(const IntPoly& f, const BigInt& x) {
    BigInt acc = 0;
    for (int i = f.degree(); i >= 0; --i) {
        acc *= x;
        acc += f.coeff(i);
    }
    return acc;
}

int sign_at(const IntPoly& f, const Rational& x) {
    // den^d f(num/den) = sum c_i num^i den^(d-i), with den > 0.
    const BigInt& num = x.get_num();
    const BigInt& den = x.get_den();
    BigInt acc = 0;
    BigInt den_pow = 1;
    for (int i = f.degree(); i >= 0; --i) {
        acc *= num;
        acc += f.coeff(i) * den_pow;
        den_pow *= den;
    }
    return sgn(acc);
}

IntPoly derivative(const IntPoly& f) {
    if (f.degree() < 1) return {};
    std::vector<BigInt> out(static_cast<std::size_t>(f.degree()));
    for (int i = 1; i <= f.degree(); ++i) out[static_cast<std::size_t>(i - 1)] = f.coeff(i) * i;
    return IntPoly(std::move(out));
}

IntPoly multiply(const IntPoly& f, const IntPoly& g) { return f * g; }

BigInt content(const IntPoly& f) {
    BigInt g = 0;
    for (const auto& c : f.coeffs()) {
        mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), c.get_mpz_t());
        if (g == 1) break;
    }
    return g;
}

IntPoly primitive_part(const IntPoly& f) {
    if (f.is_zero()) return {};
    BigInt c = content(f);
    std::vector<BigInt> out(f.coeffs().begin(), f.coeffs().end());
    for (auto& x : out) mpz_divexact(x.get_mpz_t(), x.get_mpz_t(), c.get_mpz_t());
    return IntPoly(std::move(out));
}

IntPoly pseudo_remainder(const IntPoly& f, const IntPoly& g) {
    if (g.is_zero()) throw InputError("pseudo-remainder by the zero polynomial");
    const int dg = g.degree();
    if (f.degree() < dg) {
        return f;
    }
    const BigInt& lg = g.leading();
    std::vector<BigInt> r(f.coeffs().begin(), f.coeffs().end());
    for (int k = f.degree(); k >= dg; --k) {
        // r <- lg * r - r_k x^(k-dg) g
        BigInt top = r[static_cast<std::size_t>(k)];
        for (auto& c : r) c *= lg;
        if (sgn(top) != 0) {
            for (int j = 0; j <= dg; ++j) {
                r[static_cast<std::size_t>(k - dg + j)] -= top * g.coeff(j);
            }
        }
        r.pop_back();
    }
    return IntPoly(std::move(r));
}

IntPoly exact_divide(const IntPoly& f, const IntPoly& g) {
    if (g.is_zero()) throw InputError("division by the zero polynomial");
    if (f.is_zero()) return {};
    if (f.degree() < g.degree()) throw InputError("exact_divide: divisor does not divide dividend");
    std::vector<BigInt> r(f.coeffs().begin(), f.coeffs().end());
    std::vector<BigInt> q(static_cast<std::size_t>(f.degree() - g.degree() + 1));
    const BigInt& lg = g.leading();
    for (int k = f.degree(); k >= g.degree(); --k) {
        BigInt& top = r[static_cast<std::size_t>(k)];
        if (!mpz_divisible_p(top.get_mpz_t(), lg.get_mpz_t())) {
            throw InputError("exact_divide: divisor does not divide dividend");
        }
        BigInt t;
        mpz_divexact(t.get_mpz_t(), top.get_mpz_t(), lg.get_mpz_t());
        for (int j = 0; j <= g.degree(); ++j) r[static_cast<std::size_t>(k - g.degree() + j)] -= t * g.coeff(j);
        q[static_cast<std::size_t>(k - g.degree())] = std::move(t);
    }
    for (const auto& c : r) {
        if (sgn(c) != 0) throw InputError("exact_divide: divisor does not divide dividend");
    }
    return IntPoly(std::move(q));
}

IntPoly primitive_gcd(const IntPoly& f, const IntPoly& g) {
    IntPoly a = primitive_part(f);
    IntPoly b = primitive_part(g);
    if (a.degree() < b.degree()) std::swap(a, b);
    while (!b.is_zero()) {
        IntPoly r = primitive_part(pseudo_remainder(a, b));
        a = std::move(b);
        b = std::move(r);
    }
    if (!a.is_zero() && sgn(a.leading()) < 0) a = -a;
    return a;
}

BigInt resultant(const IntPoly& f, const IntPoly& g) {
    if (f.is_zero() || g.is_zero()) return 0;
    IntPoly a = f;
    IntPoly b = g;
    int s = 1;
    if (a.degree() < b.degree()) {
        std::swap(a, b);
        if ((a.degree() & 1) && (b.degree() & 1)) s = -s;
    }
    if (b.degree() == 0) {
        BigInt r;
        mpz_pow_ui(r.get_mpz_t(), b.leading().get_mpz_t(), static_cast<unsigned long>(a.degree()));
        return s * r;
    }

    BigInt ca = content(a), cb = content(b);
    a = primitive_part(a);
    b = primitive_part(b);
    BigInt t, tmp;
    mpz_pow_ui(t.get_mpz_t(), ca.get_mpz_t(), static_cast<unsigned long>(b.degree()));
    mpz_pow_ui(tmp.get_mpz_t(), cb.get_mpz_t(), static_cast<unsigned long>(a.degree()));
    t *= tmp;

    BigInt gg = 1, h = 1;
    for (;;) {
        const int delta = a.degree() - b.degree();
        if ((a.degree() & 1) && (b.degree() & 1)) s = -s;
        IntPoly r = pseudo_remainder(a, b);
        a = std::move(b);
        // b = r / (g h^delta)
        BigInt divisor;
        mpz_pow_ui(divisor.get_mpz_t(), h.get_mpz_t(), static_cast<unsigned long>(delta));
        divisor *= gg;
        std::vector<BigInt> rc(r.coeffs().begin(), r.coeffs().end());
        for (auto& c : rc) mpz_divexact(c.get_mpz_t(), c.get_mpz_t(), divisor.get_mpz_t());
        b = IntPoly(std::move(rc));
        gg = a.leading();
        // h = g^delta / h^(delta-1)
        if (delta > 0) {
            BigInt num, den;
            mpz_pow_ui(num.get_mpz_t(), gg.get_mpz_t(), static_cast<unsigned long>(delta));
            mpz_pow_ui(den.get_mpz_t(), h.get_mpz_t(), static_cast<unsigned long>(delta - 1));
            mpz_divexact(h.get_mpz_t(), num.get_mpz_t(), den.get_mpz_t());
        }
        if (b.is_zero()) return 0;
        if (b.degree() == 0) break;
    }
    // h = lc(b)^deg(a) / h^(deg(a)-1)
    BigInt num, den;
    mpz_pow_ui(num.get_mpz_t(), b.leading().get_mpz_t(), static_cast<unsigned long>(a.degree()));
    mpz_pow_ui(den.get_mpz_t(), h.get_mpz_t(), static_cast<unsigned long>(a.degree() - 1));
    mpz_divexact(h.get_mpz_t(), num.get_mpz_t(), den.get_mpz_t());
    return s * t * h;
}

BigInt discriminant(const IntPoly& f) {
    if (f.degree() < 1) throw InputError("degree too small");
    const int d = f.degree();
    BigInt r = resultant(f, derivative(f));
    BigInt q;
    mpz_divexact(q.get_mpz_t(), r.get_mpz_t(), f.leading().get_mpz_t());
    if ((static_cast<long>(d) * (d - 1) / 2) % 2 != 0) q = -q;
    return q;
}

IntPoly squarefree_part(const IntPoly& f) {
    if (f.is_zero()) throw InputError("squarefree part of the zero polynomial");
    IntPoly p = primitive_part(f);
    if (sgn(p.leading()) < 0) p = -p;
    if (p.degree() < 1) return IntPoly{1};
    IntPoly g = primitive_gcd(p, derivative(p));
    IntPoly q = g.degree() > 0 ? exact_divide(p, g) : p;
    q = primitive_part(q);
    if (sgn(q.leading()) < 0) q = -q;
    return q;
}

namespace {

constexpr std::uint32_t kTrialDivisionBound = 1'000'000;

}  // namespace

SquareClassFactors square_class_factors(const BigInt& n) {
    if (sgn(n) == 0) throw InputError("zero has no square class");
    SquareClassFactors out;
    out.sign = sgn(n);
    BigInt m = abs(n);
    for (std::uint32_t p : small_primes(kTrialDivisionBound)) {
        if (BigInt{p} * p > m) break;
        if (!mpz_divisible_ui_p(m.get_mpz_t(), p)) continue;
        int e = 0;
        while (mpz_divisible_ui_p(m.get_mpz_t(), p)) {
            mpz_divexact_ui(m.get_mpz_t(), m.get_mpz_t(), p);
            ++e;
        }
        if (e & 1) out.atoms.emplace_back(p);
    }
    if (m == 1) return out;

    // Every prime factor of m is either m itself (m prime, found by the
    // early break above) or exceeds the trial division bound.
    const BigInt bound = BigInt{kTrialDivisionBound};
    if (m <= bound * bound) {
        out.atoms.push_back(m);  // prime
    } else if (mpz_perfect_square_p(m.get_mpz_t())) {
        // contributes nothing to the square class
    } else if (m < bound * bound * bound) {
        // At most two prime factors above the bound and not a square, so m is
        // squarefree (one prime or a product of two distinct primes).
        out.atoms.push_back(m);
    } else if (mpz_probab_prime_p(m.get_mpz_t(), 40) > 0) {
        out.atoms.push_back(m);
    } else {
        throw InputError("cannot certify the squarefree kernel of " + n.get_str() +
                         ": cofactor " + m.get_str() + " has no prime factor below " +
                         bound.get_str());
    }
    std::sort(out.atoms.begin(), out.atoms.end());
    return out;
}

BigInt squarefree_kernel(const BigInt& n) {
    SquareClassFactors f = square_class_factors(n);
    BigInt k = f.sign;
    for (const auto& a : f.atoms) k *= a;
    return k;
}

}  // namespace intersective
