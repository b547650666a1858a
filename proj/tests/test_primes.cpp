#include <doctest.h>

#include <random>

#include "intersective/error.hpp"
#include "intersective/primes.hpp"
#include "oracles.hpp"

using namespace intersective;

TEST_CASE("primes_in small ranges") {
    CHECK(primes_in({2, 11}) == std::vector<std::uint64_t>{2, 3, 5, 7, 11});
    CHECK(primes_in({90, 96}).empty());
    CHECK(primes_in({2, 2}) == std::vector<std::uint64_t>{2});
    CHECK(primes_in({3, 3}) == std::vector<std::uint64_t>{3});
    CHECK(primes_in({4, 4}).empty());
    CHECK(primes_in({97, 97}) == std::vector<std::uint64_t>{97});
}

TEST_CASE("prime count to 10^6 matches an independent sieve") {
    const auto flags = oracle::sieve_flags(1'000'000);
    std::size_t expected = 0;
    for (bool b : flags) expected += b;
    CHECK(expected == 78498);
    CHECK(primes_in({2, 1'000'000}).size() == expected);
}

TEST_CASE("primes_in agrees with is_prime to 10^5") {
    std::vector<std::uint64_t> expected;
    for (std::uint64_t n = 0; n <= 100'000; ++n) {
        if (is_prime(n)) expected.push_back(n);
    }
    CHECK(primes_in({2, 100'000}) == expected);
}

TEST_CASE("segment boundaries are invisible") {
    const std::uint64_t n = 3 * kSegmentOdds * 2 + 12345;  // spans several segments
    const auto whole = primes_in({2, n});
    std::mt19937_64 rng(11);
    std::uniform_int_distribution<std::uint64_t> cut(2, n - 1);
    for (int trial = 0; trial < 20; ++trial) {
        const std::uint64_t k = cut(rng);
        auto left = primes_in({2, k});
        const auto right = primes_in({k + 1, n});
        left.insert(left.end(), right.begin(), right.end());
        CHECK(left == whole);
    }
}

TEST_CASE("sieving far from the origin") {
    const std::uint64_t lo = 999'999'000'000ULL;
    const auto ps = primes_in({lo, lo + 2000});
    for (std::uint64_t n = lo; n <= lo + 2000; ++n) {
        const bool listed = std::binary_search(ps.begin(), ps.end(), n);
        CHECK(listed == is_prime(n));
    }
}

TEST_CASE("range validation") {
    CHECK_THROWS_AS(PrimeRange::checked(1, 10), InputError);
    CHECK_THROWS_AS(PrimeRange::checked(10, 5), InputError);
    CHECK_THROWS_AS(PrimeRange::checked(2, kMaxSieveBound + 1), InputError);
    CHECK_THROWS_AS(primes_in({0, 10}), InputError);
    CHECK_NOTHROW(PrimeRange::checked(2, kMaxSieveBound));
}

TEST_CASE("is_prime") {
    CHECK(is_prime(2));
    CHECK_FALSE(is_prime(1));
    CHECK_FALSE(is_prime(0));
    CHECK(is_prime(1'000'000'007));
    CHECK(oracle::is_prime_trial(1'000'000'007));
    for (std::uint64_t n = 0; n < 20'000; ++n) CHECK(is_prime(n) == oracle::is_prime_trial(n));

    // Strong pseudoprimes to several small bases.
    CHECK_FALSE(is_prime(3215031751ULL));
    CHECK_FALSE(is_prime(3825123056546413051ULL));
    CHECK_FALSE(is_prime(1373653));  // strong pseudoprime to bases 2 and 3
    CHECK_FALSE(is_prime(561));      // Carmichael
    CHECK(is_prime(18446744073709551557ULL));                  // largest 64-bit prime
    CHECK_FALSE(is_prime(18446744073709551615ULL));
}
