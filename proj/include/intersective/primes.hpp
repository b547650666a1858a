#pragma once

#include <cstdint>
#include <functional>
#include <span>
#include <vector>

namespace intersective {

/// Closed range [lo, hi] of integers searched for primes.
struct PrimeRange {
    std::uint64_t lo = 2;
    std::uint64_t hi = 2;

    /// Throws InputError unless 2 <= lo <= hi <= kMaxSieveBound.
    static PrimeRange checked(std::uint64_t lo, std::uint64_t hi);

    friend bool operator==(const PrimeRange&, const PrimeRange&) = default;
};

/// Largest supported upper bound for sieving; base primes stay below 10^6.
inline constexpr std::uint64_t kMaxSieveBound = 1'000'000'000'000ULL;

/// Odd residues per sieve segment.
inline constexpr std::uint64_t kSegmentOdds = std::uint64_t{1} << 18;

/// All primes <= limit (simple sieve). Cached for limit <= 10^6.
std::span<const std::uint32_t> small_primes(std::uint32_t limit);

/// Segmented sieve over a range, yielding primes in ascending order.
class PrimeSieve {
public:
    explicit PrimeSieve(PrimeRange range);

    /// Next prime, or 0 once the range is exhausted.
    std::uint64_t next();

private:
    void fill_segment();

    PrimeRange range_;
    std::uint64_t segment_lo_ = 0;  // odd number represented by bit 0
    std::vector<std::uint8_t> composite_;
    std::size_t cursor_ = 0;
    bool emit_two_ = false;
    bool done_ = false;
};

/// Calls visit(p) for every prime in range, ascending.
void for_each_prime(PrimeRange range, const std::function<void(std::uint64_t)>& visit);

std::vector<std::uint64_t> primes_in(PrimeRange range);

/// Deterministic Miller-Rabin, exact for every 64-bit n.
bool is_prime(std::uint64_t n);

}  // namespace intersective
