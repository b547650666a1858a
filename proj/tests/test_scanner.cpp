#include <doctest.h>

#include <cstdlib>

#include "intersective/error.hpp"
#include "intersective/scanner.hpp"
#include "oracles.hpp"

using namespace intersective;

namespace {
const IntPoly kFirst = IntPoly{1, 0, 1} * IntPoly{2, 0, 1} * IntPoly{-2, 0, 1};
const IntPoly kSecond = IntPoly{1, 1, 1} * IntPoly{-2, 0, 0, 1};
const std::vector<QuadForm> kTriple{{1, 0, 1}, {1, 0, 2}, {1, 0, -2}};

std::vector<int> keys(const ScanReport& r) {
    std::vector<int> out;
    for (const auto& [k, n] : r.histogram) out.push_back(k);
    return out;
}
}  // namespace

TEST_CASE("scan examples") {
    const ScanReport a = scan(kFirst, {3, 100'000});
    CHECK(keys(a) == std::vector<int>{2, 6});
    CHECK(a.min_roots_observed() == 2);
    CHECK(a.excluded_primes == std::vector<std::uint64_t>{3});

    const ScanReport b = scan(kSecond, {5, 100'000});
    CHECK(keys(b) == std::vector<int>{1, 2, 5});
    CHECK(b.min_roots_observed() == 1);

    const ScanReport c = scan(IntPoly{1, 0, 1}, {2, 10'000});
    CHECK(keys(c) == std::vector<int>{0, 2});
    CHECK(c.excluded_primes == std::vector<std::uint64_t>{2});
    CHECK(c.empirical_density_with_root() > Rational(45, 100));
    CHECK(c.empirical_density_with_root() < Rational(55, 100));

    CHECK_THROWS_AS(scan(IntPoly{5}, {2, 100}), InputError);
}

TEST_CASE("histogram matches direct evaluation") {
    const IntPoly f{-3, 1, 0, 1};  // x^3 + x - 3, disc -247 = -13 * 19
    const ScanReport r = scan(f, {2, 3000});
    CHECK(r.excluded_primes == std::vector<std::uint64_t>{2, 13, 19});
    std::map<int, std::uint64_t> expected;
    for (std::uint64_t p : primes_in({2, 3000})) {
        if (p == 2 || p == 13 || p == 19) continue;
        ++expected[static_cast<int>(oracle::roots_by_evaluation(f, p).size())];
    }
    CHECK(r.histogram == expected);
}

TEST_CASE("histogram invariants") {
    for (const IntPoly& f : {kFirst, kSecond, IntPoly{-2, 0, 0, 1} * IntPoly{-2, 0, 0, 1}}) {
        ScanOptions opt;
        opt.cycle_types = true;
        const ScanReport r = scan(f, {2, 50'000}, opt);
        const std::uint64_t total = primes_in({2, 50'000}).size();
        CHECK(r.good_primes() + r.excluded_primes.size() == total);
        std::uint64_t sum = 0;
        for (const auto& [k, n] : r.histogram) {
            CHECK(k >= 0);
            CHECK(k <= r.squarefree.degree());
            sum += n;
        }
        CHECK(sum == r.good_primes());
        REQUIRE(r.cycle_type_histogram);
        std::map<int, std::uint64_t> from_cycles;
        for (const auto& [ct, n] : *r.cycle_type_histogram) {
            CHECK(ct.total() == r.squarefree.degree());
            from_cycles[ct.fixed_points()] += n;
        }
        CHECK(from_cycles == r.histogram);
    }
}

TEST_CASE("progress callback counts blocks") {
    std::vector<std::size_t> seen;
    std::size_t reported_total = 0;
    ScanOptions opt;
    opt.workers = 3;
    opt.progress = [&](std::size_t done, std::size_t total) {
        seen.push_back(done);
        reported_total = total;
    };
    scan(IntPoly{1, 0, 1}, {2, 3 * kScanBlock + 5}, opt);
    CHECK(reported_total == 4);
    CHECK(seen == std::vector<std::size_t>{1, 2, 3, 4});
}

TEST_CASE("results do not depend on worker count") {
    ScanOptions one, many;
    one.workers = 1;
    many.workers = 8;
    one.cycle_types = many.cycle_types = true;
    const PrimeRange range{2, 2 * kScanBlock + 777};
    const ScanReport a = scan(kSecond, range, one);
    const ScanReport b = scan(kSecond, range, many);
    CHECK(a.histogram == b.histogram);
    CHECK(a.excluded_primes == b.excluded_primes);
    CHECK(a.cycle_type_histogram == b.cycle_type_histogram);
}

TEST_CASE("merging disjoint ranges") {
    ScanReport left = scan(kFirst, {2, 40'000});
    const ScanReport right = scan(kFirst, {40'001, 90'000});
    left.merge(right);
    const ScanReport whole = scan(kFirst, {2, 90'000});
    CHECK(left.histogram == whole.histogram);
    CHECK(left.excluded_primes == whole.excluded_primes);
    CHECK(left.good_primes() == whole.good_primes());
}

TEST_CASE("default_workers honours the environment") {
    ::setenv("INTERSECTIVE_THREADS", "3", 1);
    CHECK(default_workers() == 3);
    ::setenv("INTERSECTIVE_THREADS", "junk", 1);
    CHECK(default_workers() >= 1);
    ::unsetenv("INTERSECTIVE_THREADS");
    CHECK(default_workers() >= 1);
}

TEST_CASE("real roots against roots mod p") {
    const Theorem1Check a = check_theorem1(kTriple, {3, 100'000});
    CHECK(a.consistent);
    CHECK(a.exact);
    CHECK(a.exact_min_roots == 2);
    CHECK(a.real_root_count == 2);
    CHECK(a.evidence() == "exact (multiquadratic)");

    const Theorem1Check b = check_theorem1(kSecond, {5, 100'000});
    CHECK(b.consistent);
    CHECK_FALSE(b.exact);
    CHECK(b.real_root_count == 1);
    CHECK(b.min_roots_observed == 1);
    CHECK(b.evidence() == "empirical evidence");

    const Theorem1Check c = check_theorem1(IntPoly{1, 0, 1}, {2, 1000});
    CHECK(c.consistent);  // x^2 + 1 misses some primes, so nothing is claimed
    CHECK(c.min_roots_observed == 0);
}

TEST_CASE("density comparison") {
    CHECK_THROWS_AS(compare_densities(kTriple, {3, 99'999}), InputError);
    const DensityComparison d = compare_densities(kTriple, {3, 200'000});
    REQUIRE(d.rows.size() == 2);
    CHECK(d.rows[0].roots == 2);
    CHECK(d.rows[0].exact == Rational(3, 4));
    CHECK(d.rows[1].roots == 6);
    CHECK(d.max_deviation < Rational(1, 100));
}
