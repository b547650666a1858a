#include "intersective/quadcover.hpp"

#include <algorithm>
#include <bit>
#include <set>
#include <utility>

#include "intersective/error.hpp"
#include "intersective/modular.hpp"
#include "intersective/primes.hpp"

namespace intersective {

QuadForm::QuadForm(BigInt a_, BigInt b_, BigInt c_) : a(std::move(a_)), b(std::move(b_)), c(std::move(c_)) {
    if (sgn(a) == 0 && sgn(b) == 0 && sgn(c) == 0) throw InputError("quadratic form 0,0,0 is not allowed");
}

IntPoly QuadForm::t_polynomial() const { return IntPoly(std::vector<BigInt>{c, b, a}); }

std::string QuadForm::to_string() const { return a.get_str() + "," + b.get_str() + "," + c.get_str(); }

BigInt form_discriminant(const QuadForm& q) { return q.b * q.b - 4 * q.a * q.c; }

bool is_positive_definite(const QuadForm& q) { return sgn(q.a) > 0 && sgn(form_discriminant(q)) < 0; }

bool form_covers_p_exhaustive(const QuadForm& q, std::uint64_t p) {
    const Fp F(p);
    const std::uint64_t a = mod_u64(q.a, p), b = mod_u64(q.b, p), c = mod_u64(q.c, p);
    if (a == 0) return true;  // (1, 0)
    for (std::uint64_t t = 0; t < p; ++t) {
        if (F.add(F.mul(F.add(F.mul(a, t), b), t), c) == 0) return true;  // (t, 1)
    }
    return false;
}

bool form_covers_p(const QuadForm& q, std::uint64_t p) {
    if (p != 2 && !divisible_by(q.a, p)) {
        const BigInt d = form_discriminant(q);
        if (!divisible_by(d, p)) return jacobi(d, p) == 1;
    }
    return form_covers_p_exhaustive(q, p);
}

namespace {

bool is_square_or_zero(const BigInt& n) { return sgn(n) >= 0 && mpz_perfect_square_p(n.get_mpz_t()); }

// Splits a set of squarefree atoms into a pairwise coprime base.
std::vector<BigInt> coprime_base(std::vector<BigInt> atoms) {
    std::sort(atoms.begin(), atoms.end());
    atoms.erase(std::unique(atoms.begin(), atoms.end()), atoms.end());
    for (bool changed = true; changed;) {
        changed = false;
        for (std::size_t i = 0; i < atoms.size() && !changed; ++i) {
            for (std::size_t j = i + 1; j < atoms.size() && !changed; ++j) {
                BigInt g;
                mpz_gcd(g.get_mpz_t(), atoms[i].get_mpz_t(), atoms[j].get_mpz_t());
                if (g == 1) continue;
                BigInt x = atoms[i] / g, y = atoms[j] / g;
                atoms.erase(atoms.begin() + static_cast<std::ptrdiff_t>(j));
                atoms.erase(atoms.begin() + static_cast<std::ptrdiff_t>(i));
                for (BigInt* v : {&g, &x, &y}) {
                    if (*v != 1) atoms.push_back(*v);
                }
                std::sort(atoms.begin(), atoms.end());
                atoms.erase(std::unique(atoms.begin(), atoms.end()), atoms.end());
                changed = true;
            }
        }
    }
    return atoms;
}

}  // namespace

SquareClassSet build_square_classes(const std::vector<QuadForm>& forms) {
    std::vector<SquareClassFactors> factors(forms.size());
    std::vector<bool> trivial(forms.size(), false);
    std::vector<BigInt> all_atoms;
    for (std::size_t i = 0; i < forms.size(); ++i) {
        const BigInt d = form_discriminant(forms[i]);
        if (is_square_or_zero(d)) {
            trivial[i] = true;
            continue;
        }
        factors[i] = square_class_factors(d);
        all_atoms.insert(all_atoms.end(), factors[i].atoms.begin(), factors[i].atoms.end());
    }

    SquareClassSet out;
    out.basis.emplace_back(-1);
    for (auto& a : coprime_base(std::move(all_atoms))) out.basis.push_back(std::move(a));

    for (std::size_t i = 0; i < forms.size(); ++i) {
        SquareClass sc{BigInt{1}, Gf2Vector(out.basis.size())};
        if (!trivial[i]) {
            sc.kernel = factors[i].sign;
            for (const auto& a : factors[i].atoms) sc.kernel *= a;
            if (factors[i].sign < 0) sc.vector.set(0);
            for (std::size_t j = 1; j < out.basis.size(); ++j) {
                if (mpz_divisible_p(sc.kernel.get_mpz_t(), out.basis[j].get_mpz_t())) sc.vector.set(j);
            }
        }
        out.classes.push_back(std::move(sc));
    }
    return out;
}

Dyadic Dyadic::make(BigInt num, unsigned log2_den) {
    if (sgn(num) == 0) return Dyadic{BigInt{0}, 0};
    while (log2_den > 0 && mpz_even_p(num.get_mpz_t())) {
        num /= 2;
        --log2_den;
    }
    return Dyadic{std::move(num), log2_den};
}

Rational Dyadic::value() const {
    Rational q(num);
    mpq_div_2exp(q.get_mpq_t(), q.get_mpq_t(), log2_den);
    return q;
}

std::string Dyadic::to_string() const {
    BigInt den;
    mpz_ui_pow_ui(den.get_mpz_t(), 2, log2_den);
    return num.get_str() + "/" + den.get_str();
}

int FrobeniusClass::evaluate(const Gf2Vector& v) const {
    int s = 1;
    for (std::size_t i = 0; i < values.size() && i < v.size(); ++i) {
        if (v.get(i)) s *= values[i];
    }
    return s;
}

Dyadic CoverVerdict::uncovered_density() const {
    if (const auto* f = std::get_if<FailsToCover>(&outcome)) return f->density;
    return Dyadic{};
}

CoverVerdict decide_cover(const std::vector<QuadForm>& forms) {
    if (forms.empty()) throw InputError("decide_cover needs at least one form");
    CoverVerdict v;
    v.classes = build_square_classes(forms);

    // Seek a character that is -1 on every kernel: <phi, v_i> = 1 for all i.
    std::vector<Gf2Vector> rows;
    for (const auto& sc : v.classes.classes) rows.push_back(sc.vector);
    const Gf2Solution sol = solve_gf2(rows, std::vector<bool>(rows.size(), true), v.classes.basis.size());
    v.rank = sol.rank;

    for (std::size_t i = 0; i < forms.size(); ++i) {
        if (v.classes.classes[i].trivial()) {
            v.outcome = Covers{{i}};
            return v;
        }
    }
    if (sol.conflict) {
        v.outcome = Covers{*sol.conflict};
        return v;
    }

    FailsToCover fail;
    fail.density = Dyadic::make(BigInt{1}, static_cast<unsigned>(sol.rank));
    fail.witness_class.basis = v.classes.basis;
    for (std::size_t j = 0; j < v.classes.basis.size(); ++j) {
        fail.witness_class.values.push_back(sol.solution->get(j) ? -1 : 1);
    }
    PrimeSieve sieve(PrimeRange{3, kExamplePrimeBound});
    for (std::uint64_t p = sieve.next(); p != 0; p = sieve.next()) {
        const bool uncovered =
            std::none_of(forms.begin(), forms.end(), [p](const QuadForm& q) { return form_covers_p(q, p); });
        if (uncovered) {
            fail.example_prime = p;
            break;
        }
    }
    v.outcome = std::move(fail);
    return v;
}

bool verify_cover_witness(const std::vector<QuadForm>& forms, const std::vector<std::size_t>& witness) {
    if (witness.size() % 2 == 0) return false;
    std::set<std::size_t> seen(witness.begin(), witness.end());
    if (seen.size() != witness.size()) return false;
    BigInt prod = 1;
    for (std::size_t i : witness) {
        if (i >= forms.size()) return false;
        prod *= form_discriminant(forms[i]);
    }
    return is_square_or_zero(prod);
}

IntPoly product_polynomial(const std::vector<QuadForm>& quadratics) {
    IntPoly f{1};
    for (const auto& q : quadratics) f = f * q.t_polynomial();
    return f;
}

RootDistribution exact_root_distribution(const std::vector<QuadForm>& quadratics) {
    if (quadratics.empty()) throw InputError("root distribution needs at least one quadratic");
    const SquareClassSet classes = build_square_classes(quadratics);
    std::vector<Gf2Vector> rows;
    for (const auto& sc : classes.classes) rows.push_back(sc.vector);
    const Gf2Solution sol = solve_gf2(rows, std::vector<bool>(rows.size(), false), classes.basis.size());
    if (sol.rank > kMaxEnumerationRank) throw InputError("state space too large");

    // Distinct roots of the product at a large prime: every rational root
    // once, plus two per distinct irreducible quadratic whose character is +1.
    std::set<Rational> rational_roots;
    std::vector<std::uint32_t> irreducible_masks;
    std::set<std::string> seen_irreducible;
    for (std::size_t i = 0; i < quadratics.size(); ++i) {
        const QuadForm& q = quadratics[i];
        if (sgn(q.a) == 0) {
            if (sgn(q.b) != 0) rational_roots.insert(Rational(-q.c, q.b));
            continue;
        }
        const BigInt d = form_discriminant(q);
        if (is_square_or_zero(d)) {
            const BigInt s = sqrt(d);
            for (const BigInt& num : {BigInt(-q.b + s), BigInt(-q.b - s)}) {
                Rational r(num, 2 * q.a);
                r.canonicalize();
                rational_roots.insert(r);
            }
            continue;
        }
        IntPoly key = primitive_part(q.t_polynomial());
        if (sgn(key.leading()) < 0) key = -key;
        if (!seen_irreducible.insert(key.to_string()).second) continue;
        std::uint32_t mask = 0;
        for (std::size_t k = 0; k < sol.rank; ++k) {
            if (sol.coordinates[i].get(k)) mask |= std::uint32_t{1} << k;
        }
        irreducible_masks.push_back(mask);
    }

    const int fixed = static_cast<int>(rational_roots.size());
    std::map<int, std::uint64_t> counts;
    const std::uint64_t classes_total = std::uint64_t{1} << sol.rank;
    for (std::uint64_t u = 0; u < classes_total; ++u) {
        int roots = fixed;
        for (std::uint32_t m : irreducible_masks) {
            if ((std::popcount(m & static_cast<std::uint32_t>(u)) & 1) == 0) roots += 2;
        }
        ++counts[roots];
    }

    RootDistribution out;
    out.rank = sol.rank;
    out.min_roots = counts.begin()->first;
    for (const auto& [roots, n] : counts) {
        out.density.emplace(roots, Dyadic::make(from_u64(n), static_cast<unsigned>(sol.rank)));
    }
    return out;
}

}  // namespace intersective
