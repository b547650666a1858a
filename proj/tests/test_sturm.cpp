#include <doctest.h>

#include <random>

#include "intersective/error.hpp"
#include "intersective/sturm.hpp"
#include "oracles.hpp"

using namespace intersective;

TEST_CASE("real root counts") {
    CHECK(count_real_roots(IntPoly{1, 0, 1} * IntPoly{2, 0, 1} * IntPoly{-2, 0, 1}) == 2);
    CHECK(count_real_roots(IntPoly{1, 1, 1} * IntPoly{-2, 0, 0, 1}) == 1);
    CHECK(count_real_roots(IntPoly{1, 0, 1}) == 0);
    CHECK(count_real_roots(IntPoly{-1, 1} * IntPoly{-1, 1} * IntPoly{1, 1}) == 2);
    CHECK_THROWS_AS(count_real_roots(IntPoly{5}), InputError);
    CHECK_THROWS_AS(count_real_roots(IntPoly{}), InputError);
    CHECK_THROWS_AS(SturmChain(IntPoly{}), InputError);
}

TEST_CASE("isolating intervals") {
    const auto r2 = isolate_real_roots(IntPoly{-2, 0, 1});
    REQUIRE(r2.size() == 2);
    CHECK(r2[0].lo == -r2[1].hi);
    CHECK(r2[0].hi == -r2[1].lo);
    CHECK(r2[1].lo * r2[1].lo < 2);
    CHECK(r2[1].hi * r2[1].hi > 2);

    const auto c = isolate_real_roots(IntPoly{-2, 0, 0, 1});
    REQUIRE(c.size() == 1);
    CHECK(c[0].lo >= 1);
    CHECK(c[0].hi <= 2);
    CHECK(c[0].approx() == doctest::Approx(1.259921).epsilon(1e-5));

    CHECK(isolate_real_roots(IntPoly{1, 0, 1}).empty());

    const auto e = isolate_real_roots(IntPoly{0, -1, 0, 1});  // -1, 0, 1
    REQUIRE(e.size() == 3);
    for (const auto& iv : e) {
        if (iv.exact) CHECK(sign_at(IntPoly{0, -1, 0, 1}, iv.hi) == 0);
    }
    CHECK_THROWS_AS(isolate_real_roots(IntPoly{}), InputError);
}

TEST_CASE("Sturm counts on half-open intervals") {
    const SturmChain s(IntPoly{0, -1, 0, 1});
    CHECK(s.count_in(-1, 1) == 2);   // 0 and 1
    CHECK(s.count_in(-2, 1) == 3);
    CHECK(s.count_in(0, 0) == 0);
    CHECK(s.count_in(Rational(1, 2), 2) == 1);
    CHECK(s.count_all() == 3);
}

TEST_CASE("constructed polynomials have the expected real roots") {
    std::mt19937_64 rng(5);
    std::uniform_int_distribution<int> n_lin(0, 5), n_quad(0, 2), val(-30, 30), num(1, 7);
    for (int trial = 0; trial < 200; ++trial) {
        std::set<Rational> roots;
        IntPoly f{1};
        const int k = n_lin(rng);
        for (int i = 0; i < k; ++i) {
            const int den = num(rng);
            const int v = val(rng);
            Rational r(v, den);
            r.canonicalize();
            roots.insert(r);
            f = f * IntPoly(std::vector<BigInt>{BigInt{-v}, BigInt{den}});
        }
        const int q = n_quad(rng);
        for (int i = 0; i < q; ++i) f = f * IntPoly(std::vector<BigInt>{BigInt{num(rng)}, 0, 1});
        if (f.degree() < 1) continue;
        CAPTURE(f.to_string());
        CHECK(count_real_roots(f) == static_cast<int>(roots.size()));
        const auto ivs = isolate_real_roots(f, 12);
        REQUIRE(ivs.size() == roots.size());
        auto it = roots.begin();
        for (std::size_t i = 0; i < ivs.size(); ++i, ++it) {
            CHECK(ivs[i].lo < *it);
            CHECK(*it <= ivs[i].hi);
            if (i + 1 < ivs.size()) CHECK(ivs[i].hi <= ivs[i + 1].lo);
        }
    }
}

TEST_CASE("random polynomials: intervals, squarefree part and parity") {
    std::mt19937_64 rng(8);
    for (int trial = 0; trial < 300; ++trial) {
        IntPoly f = oracle::random_poly(rng, 9, 20);
        if (f.degree() < 1) continue;
        CAPTURE(f.to_string());
        const int n = count_real_roots(f);
        CHECK(n == count_real_roots(squarefree_part(f)));
        CHECK(n == count_real_roots(f * f));
        const IntPoly sf = squarefree_part(f);
        // Non-real roots of a real polynomial come in conjugate pairs.
        CHECK((sf.degree() - n) % 2 == 0);
        const auto ivs = isolate_real_roots(f, 10);
        CHECK(static_cast<int>(ivs.size()) == n);
        const Rational width(1, 1024);
        for (const auto& iv : ivs) {
            if (iv.exact) {
                CHECK(sign_at(sf, iv.hi) == 0);
                continue;
            }
            CHECK(iv.hi - iv.lo <= width);
            CHECK(sign_at(sf, iv.hi) != 0);
            CHECK(SturmChain(sf).count_in(iv.lo, iv.hi) == 1);
            // A root sitting on lo belongs to the previous interval.
            if (sign_at(sf, iv.lo) != 0) CHECK(sign_at(sf, iv.lo) * sign_at(sf, iv.hi) < 0);
        }
        const Rational b = cauchy_bound(f);
        CHECK(SturmChain(f).count_in(-b, b) == n);
    }
}
