#include "intersective/scanner.hpp"

#include <algorithm>
#include <atomic>
#include <cstdlib>
#include <exception>
#include <mutex>
#include <string>
#include <thread>

#include "intersective/error.hpp"
#include "intersective/sturm.hpp"

namespace intersective {

unsigned default_workers() {
    if (const char* env = std::getenv("INTERSECTIVE_THREADS")) {
        char* end = nullptr;
        const long n = std::strtol(env, &end, 10);
        if (end != env && *end == '\0' && n >= 1 && n <= 1024) return static_cast<unsigned>(n);
    }
    const unsigned hw = std::thread::hardware_concurrency();
    return hw == 0 ? 1 : hw;
}

std::uint64_t ScanReport::good_primes() const {
    std::uint64_t n = 0;
    for (const auto& [k, c] : histogram) n += c;
    return n;
}

std::uint64_t ScanReport::primes_with_root() const {
    std::uint64_t n = 0;
    for (const auto& [k, c] : histogram) {
        if (k > 0) n += c;
    }
    return n;
}

std::optional<int> ScanReport::min_roots_observed() const {
    if (histogram.empty()) return std::nullopt;
    return histogram.begin()->first;
}

Rational ScanReport::empirical_density_with_root() const {
    const std::uint64_t good = good_primes();
    if (good == 0) return Rational(0);
    Rational q(from_u64(primes_with_root()), from_u64(good));
    q.canonicalize();
    return q;
}

void ScanReport::merge(const ScanReport& other) {
    excluded_primes.insert(excluded_primes.end(), other.excluded_primes.begin(), other.excluded_primes.end());
    std::sort(excluded_primes.begin(), excluded_primes.end());
    for (const auto& [k, c] : other.histogram) histogram[k] += c;
    if (other.cycle_type_histogram) {
        if (!cycle_type_histogram) cycle_type_histogram.emplace();
        for (const auto& [k, c] : *other.cycle_type_histogram) (*cycle_type_histogram)[k] += c;
    }
}

namespace {

struct Prepared {
    IntPoly squarefree;
    BigInt bad;  // 2 * lc * disc
};

ScanReport scan_block(const Prepared& prep, PrimeRange block, bool cycle_types) {
    ScanReport r;
    r.range = block;
    if (cycle_types) r.cycle_type_histogram.emplace();
    const int degree = prep.squarefree.degree();
    for_each_prime(block, [&](std::uint64_t p) {
        if (divisible_by(prep.bad, p)) {
            r.excluded_primes.push_back(p);
            return;
        }
        const FpPoly g = reduce(prep.squarefree, p).poly;
        const auto roots = static_cast<int>(count_roots(g));
        ++r.histogram[roots];
        if (cycle_types) {
            CycleType ct = distinct_degree_parts(g);
            if (ct.fixed_points() != roots || ct.total() != degree) {
                throw InvariantViolation("cycle type " + ct.to_string() + " at p = " + std::to_string(p) +
                                         " disagrees with root count " + std::to_string(roots) +
                                         " or degree " + std::to_string(degree) + " of " +
                                         prep.squarefree.to_string());
            }
            ++(*r.cycle_type_histogram)[ct];
        }
    });
    return r;
}

}  // namespace

ScanReport scan(const IntPoly& f, PrimeRange range, const ScanOptions& options) {
    if (f.degree() < 1) throw InputError("scan needs a polynomial of degree >= 1");
    range = PrimeRange::checked(range.lo, range.hi);

    Prepared prep;
    prep.squarefree = squarefree_part(f);
    prep.bad = 2 * prep.squarefree.leading() * discriminant(prep.squarefree);

    const std::uint64_t span = range.hi - range.lo + 1;
    const std::size_t blocks = static_cast<std::size_t>((span + kScanBlock - 1) / kScanBlock);
    std::vector<ScanReport> partial(blocks);

    std::atomic<std::size_t> next{0};
    std::mutex progress_mutex;
    std::size_t finished = 0;
    std::exception_ptr failure;
    std::mutex failure_mutex;

    auto worker = [&] {
        for (;;) {
            const std::size_t b = next.fetch_add(1);
            if (b >= blocks) return;
            {
                std::lock_guard lock(failure_mutex);
                if (failure) return;
            }
            const std::uint64_t lo = range.lo + b * kScanBlock;
            const std::uint64_t hi = std::min(range.hi, lo + kScanBlock - 1);
            try {
                partial[b] = scan_block(prep, PrimeRange{lo, hi}, options.cycle_types);
            } catch (...) {
                std::lock_guard lock(failure_mutex);
                if (!failure) failure = std::current_exception();
                return;
            }
            if (options.progress) {
                std::lock_guard lock(progress_mutex);
                options.progress(++finished, blocks);
            }
        }
    };

    const unsigned workers = std::max(1u, std::min<unsigned>(options.workers, static_cast<unsigned>(blocks)));
    if (workers == 1) {
        worker();
    } else {
        std::vector<std::thread> pool;
        pool.reserve(workers);
        for (unsigned i = 0; i < workers; ++i) pool.emplace_back(worker);
        for (auto& t : pool) t.join();
    }
    if (failure) std::rethrow_exception(failure);

    ScanReport report;
    report.polynomial = f;
    report.squarefree = prep.squarefree;
    report.range = range;
    if (options.cycle_types) report.cycle_type_histogram.emplace();
    for (const auto& part : partial) report.merge(part);
    return report;
}

std::string Theorem1Check::evidence() const { return exact ? "exact (multiquadratic)" : "empirical evidence"; }

Theorem1Check check_theorem1(const IntPoly& f, PrimeRange range, const ScanOptions& options) {
    Theorem1Check c;
    c.scan = scan(f, range, options);
    c.min_roots_observed = c.scan.min_roots_observed();
    c.real_root_count = count_real_roots(f);
    const bool root_everywhere = c.min_roots_observed && *c.min_roots_observed >= 1;
    c.consistent = !root_everywhere || c.real_root_count >= 1;
    return c;
}

Theorem1Check check_theorem1(const std::vector<QuadForm>& quadratics, PrimeRange range,
                             const ScanOptions& options) {
    const IntPoly f = product_polynomial(quadratics);
    Theorem1Check c = check_theorem1(f, range, options);
    c.distribution = exact_root_distribution(quadratics);
    c.exact_min_roots = c.distribution->min_roots;
    c.exact = true;
    const bool observed_ok = !c.min_roots_observed || *c.min_roots_observed >= *c.exact_min_roots;
    c.consistent = c.real_root_count >= *c.exact_min_roots && observed_ok;
    return c;
}

DensityComparison compare_densities(const std::vector<QuadForm>& quadratics, PrimeRange range,
                                    const ScanOptions& options) {
    if (range.hi < kMinComparisonRange) {
        throw InputError("density comparison needs a range reaching at least " +
                         std::to_string(kMinComparisonRange));
    }
    DensityComparison out;
    out.distribution = exact_root_distribution(quadratics);
    out.scan = scan(product_polynomial(quadratics), range, options);

    const std::uint64_t good = out.scan.good_primes();
    std::map<int, DensityRow> rows;
    for (const auto& [k, d] : out.distribution.density) {
        rows[k].roots = k;
        rows[k].exact = d.value();
    }
    for (const auto& [k, n] : out.scan.histogram) {
        rows[k].roots = k;
        if (good > 0) {
            rows[k].empirical = Rational(from_u64(n), from_u64(good));
            rows[k].empirical.canonicalize();
        }
    }
    out.max_deviation = 0;
    for (auto& [k, row] : rows) {
        row.deviation = abs(row.exact - row.empirical);
        if (row.deviation > out.max_deviation) out.max_deviation = row.deviation;
        out.rows.push_back(row);
    }
    return out;
}

}  // namespace intersective
