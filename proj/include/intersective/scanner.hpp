#pragma once

#include <cstdint>
#include <functional>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "intersective/bigint.hpp"
#include "intersective/intpoly.hpp"
#include "intersective/modular.hpp"
#include "intersective/primes.hpp"
#include "intersective/quadcover.hpp"

namespace intersective {

inline constexpr std::uint64_t kDefaultScanCap = 1'000'000;
inline constexpr std::uint64_t kHardScanCap = 100'000'000;
/// Integers per scan block. Fixed so the block layout, and hence every
/// partial result, does not depend on the number of workers.
inline constexpr std::uint64_t kScanBlock = std::uint64_t{1} << 20;

struct ScanOptions {
    bool cycle_types = false;
    unsigned workers = 1;
    /// Called after each finished block with (finished, total); `finished`
    /// increases by one per call.
    std::function<void(std::size_t, std::size_t)> progress;
};

/// Worker count from INTERSECTIVE_THREADS, else hardware concurrency.
unsigned default_workers();

struct ScanReport {
    IntPoly polynomial;
    IntPoly squarefree;
    PrimeRange range;
    /// Primes in range dividing 2 * lc * disc of the squarefree part.
    std::vector<std::uint64_t> excluded_primes;
    /// Root count -> number of good primes with that count.
    std::map<int, std::uint64_t> histogram;
    std::optional<std::map<CycleType, std::uint64_t>> cycle_type_histogram;

    std::uint64_t good_primes() const;
    std::uint64_t primes_with_root() const;
    std::optional<int> min_roots_observed() const;
    /// primes_with_root / good_primes; 0 when no good prime was scanned.
    Rational empirical_density_with_root() const;

    /// Adds another partial report over a disjoint sub-range.
    void merge(const ScanReport& other);
};

/// Root counts (and optionally cycle types) of squarefree_part(f) at every
/// good prime of the range. Requires deg f >= 1. Throws InvariantViolation
/// if a cycle type's fixed points disagree with the root count.
ScanReport scan(const IntPoly& f, PrimeRange range, const ScanOptions& options = {});

struct Theorem1Check {
    std::optional<int> min_roots_observed;
    int real_root_count = 0;
    std::optional<int> exact_min_roots;  // multiquadratic inputs only
    bool exact = false;                  // exact_min_roots was available
    bool consistent = false;
    ScanReport scan;
    std::optional<RootDistribution> distribution;

    /// "exact (multiquadratic)" or "empirical evidence".
    std::string evidence() const;
};

/// General polynomial: consistent iff real_root_count >= 1 whenever every
/// scanned good prime had a root. Empirical only.
Theorem1Check check_theorem1(const IntPoly& f, PrimeRange range, const ScanOptions& options = {});

/// Product of quadratics a_i t^2 + b_i t + c_i: additionally computes the
/// exact minimum root count over Frobenius classes and requires
/// real_root_count >= exact_min_roots and min_roots_observed >= exact_min_roots.
Theorem1Check check_theorem1(const std::vector<QuadForm>& quadratics, PrimeRange range,
                             const ScanOptions& options = {});

struct DensityRow {
    int roots = 0;
    Rational exact;
    Rational empirical;
    Rational deviation;  // |exact - empirical|
};

struct DensityComparison {
    std::vector<DensityRow> rows;  // ascending root count
    Rational max_deviation;
    RootDistribution distribution;
    ScanReport scan;
};

inline constexpr std::uint64_t kMinComparisonRange = 100'000;

/// Empirical root-count frequencies against the exact multiquadratic
/// distribution. Requires range.hi >= 10^5.
DensityComparison compare_densities(const std::vector<QuadForm>& quadratics, PrimeRange range,
                                    const ScanOptions& options = {});

}  // namespace intersective
