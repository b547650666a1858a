#include "intersective/primes.hpp"

#include <algorithm>
#include <cmath>
#include <string>

#include "intersective/error.hpp"

namespace intersective {

PrimeRange PrimeRange::checked(std::uint64_t lo, std::uint64_t hi) {
    if (lo < 2) {
        throw InputError("prime range must start at 2 or above, got " + std::to_string(lo));
    }
    if (hi < lo) {
        throw InputError("empty prime range [" + std::to_string(lo) + ", " + std::to_string(hi) + "]");
    }
    if (hi > kMaxSieveBound) {
        throw InputError("prime range end " + std::to_string(hi) + " exceeds supported bound " +
                         std::to_string(kMaxSieveBound));
    }
    return PrimeRange{lo, hi};
}

namespace {

std::vector<std::uint32_t> simple_sieve(std::uint32_t limit) {
    std::vector<std::uint32_t> out;
    if (limit < 2) return out;
    std::vector<bool> composite(limit + 1, false);
    for (std::uint64_t i = 2; i <= limit; ++i) {
        if (composite[i]) continue;
        out.push_back(static_cast<std::uint32_t>(i));
        for (std::uint64_t j = i * i; j <= limit; j += i) composite[j] = true;
    }
    return out;
}

constexpr std::uint32_t kCachedLimit = 1'000'000;

const std::vector<std::uint32_t>& cached_primes() {
    static const std::vector<std::uint32_t> primes = simple_sieve(kCachedLimit);
    return primes;
}

std::uint64_t isqrt(std::uint64_t n) {
    auto r = static_cast<std::uint64_t>(std::sqrt(static_cast<long double>(n)));
    while (r * r > n) --r;
    while ((r + 1) * (r + 1) <= n) ++r;
    return r;
}

}  // namespace

std::span<const std::uint32_t> small_primes(std::uint32_t limit) {
    if (limit > kCachedLimit) {
        throw InputError("small_primes limit above " + std::to_string(kCachedLimit));
    }
    const auto& all = cached_primes();
    auto end = std::upper_bound(all.begin(), all.end(), limit);
    return {all.data(), static_cast<std::size_t>(end - all.begin())};
}

PrimeSieve::PrimeSieve(PrimeRange range) : range_(PrimeRange::checked(range.lo, range.hi)) {
    emit_two_ = range_.lo <= 2 && range_.hi >= 2;
    segment_lo_ = std::max<std::uint64_t>(3, range_.lo | 1);
    if (segment_lo_ > range_.hi) {
        done_ = true;
        return;
    }
    fill_segment();
}

void PrimeSieve::fill_segment() {
    // Bit i of the segment stands for segment_lo_ + 2i.
    const std::uint64_t last = std::min(range_.hi, segment_lo_ + 2 * (kSegmentOdds - 1));
    const std::uint64_t count = (last - segment_lo_) / 2 + 1;
    composite_.assign(count, 0);
    cursor_ = 0;

    const std::uint64_t root = isqrt(last);
    for (std::uint32_t p : small_primes(static_cast<std::uint32_t>(std::min<std::uint64_t>(root, kCachedLimit)))) {
        if (p == 2) continue;
        const std::uint64_t pp = std::uint64_t{p} * p;
        std::uint64_t start = std::max(pp, (segment_lo_ + p - 1) / p * p);
        if ((start & 1) == 0) start += p;
        for (std::uint64_t m = start; m <= last; m += 2 * std::uint64_t{p}) {
            composite_[(m - segment_lo_) / 2] = 1;
        }
    }
}

std::uint64_t PrimeSieve::next() {
    if (emit_two_) {
        emit_two_ = false;
        return 2;
    }
    while (!done_) {
        while (cursor_ < composite_.size()) {
            const std::size_t i = cursor_++;
            if (!composite_[i]) return segment_lo_ + 2 * i;
        }
        const std::uint64_t next_lo = segment_lo_ + 2 * composite_.size();
        if (composite_.empty() || next_lo > range_.hi || next_lo < segment_lo_) {
            done_ = true;
            break;
        }
        segment_lo_ = next_lo;
        fill_segment();
    }
    return 0;
}

void for_each_prime(PrimeRange range, const std::function<void(std::uint64_t)>& visit) {
    PrimeSieve sieve(range);
    for (std::uint64_t p = sieve.next(); p != 0; p = sieve.next()) visit(p);
}

std::vector<std::uint64_t> primes_in(PrimeRange range) {
    std::vector<std::uint64_t> out;
    for_each_prime(range, [&](std::uint64_t p) { out.push_back(p); });
    return out;
}

namespace {

std::uint64_t mul_mod(std::uint64_t a, std::uint64_t b, std::uint64_t m) {
    return static_cast<std::uint64_t>(static_cast<unsigned __int128>(a) * b % m);
}

std::uint64_t pow_mod(std::uint64_t base, std::uint64_t exp, std::uint64_t m) {
    std::uint64_t result = 1 % m;
    base %= m;
    while (exp) {
        if (exp & 1) result = mul_mod(result, base, m);
        base = mul_mod(base, base, m);
        exp >>= 1;
    }
    return result;
}

}  // namespace

bool is_prime(std::uint64_t n) {
    if (n < 2) return false;
    static constexpr std::uint64_t kBases[] = {2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37};
    for (std::uint64_t b : kBases) {
        if (n % b == 0) return n == b;
    }
    std::uint64_t d = n - 1;
    int s = 0;
    while ((d & 1) == 0) {
        d >>= 1;
        ++s;
    }
    for (std::uint64_t a : kBases) {
        std::uint64_t x = pow_mod(a, d, n);
        if (x == 1 || x == n - 1) continue;
        bool witness = true;
        for (int r = 1; r < s; ++r) {
            x = mul_mod(x, x, n);
            if (x == n - 1) {
                witness = false;
                break;
            }
        }
        if (witness) return false;
    }
    return true;
}

}  // namespace intersective
