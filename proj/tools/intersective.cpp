// Command-line front end: scan, cover, realroots, census, check, density.
//
// Exit codes: 0 success (a FailsToCover verdict is a result, not an error),
// 2 usage or input error, 3 internal consistency failure.

#include <CLI11.hpp>

#include <cstdint>
#include <iostream>
#include <optional>
#include <string>
#include <vector>

#include "intersective/error.hpp"
#include "intersective/parse.hpp"
#include "intersective/quadcover.hpp"
#include "intersective/report.hpp"
#include "intersective/scanner.hpp"
#include "intersective/sturm.hpp"

namespace {

using namespace intersective;

constexpr int kExitOk = 0;
constexpr int kExitInput = 2;
constexpr int kExitInternal = 3;

// Ranges above this report block progress on stderr.
constexpr std::uint64_t kProgressThreshold = 10'000'000;

struct Config {
    std::string poly;
    std::vector<std::string> forms;
    std::string forms_file;
    std::uint64_t from = 2;
    std::uint64_t to = kDefaultScanCap;
    std::string format = "json";
    bool cycle_types = false;
    int precision = 20;
    std::uint64_t cap = kHardScanCap;
};

PrimeRange checked_range(const Config& cfg) {
    if (cfg.cap > kHardScanCap) {
        throw InputError("--cap may not exceed " + std::to_string(kHardScanCap));
    }
    if (cfg.to > cfg.cap) {
        throw InputError("--to " + std::to_string(cfg.to) + " exceeds the scan cap " + std::to_string(cfg.cap));
    }
    return PrimeRange::checked(cfg.from, cfg.to);
}

IntPoly checked_poly(const Config& cfg) {
    if (cfg.poly.empty()) throw InputError("--poly is required");
    IntPoly f = parse_polynomial(cfg.poly);
    if (f.degree() < 1) throw InputError("polynomial must have degree >= 1, got \"" + cfg.poly + "\"");
    return f;
}

std::vector<QuadForm> collect_forms(const Config& cfg) {
    std::vector<QuadForm> out;
    if (!cfg.forms_file.empty()) out = read_forms_file(cfg.forms_file);
    for (const auto& s : cfg.forms) out.push_back(parse_form(s));
    return out;
}

ScanOptions scan_options(const Config& cfg, const PrimeRange& range) {
    ScanOptions opt;
    opt.cycle_types = cfg.cycle_types;
    opt.workers = default_workers();
    if (range.hi >= kProgressThreshold) {
        opt.progress = [](std::size_t done, std::size_t total) {
            std::cerr << "progress " << done << "/" << total << " blocks\n";
        };
    }
    return opt;
}

void require_format(const Config& cfg, std::initializer_list<const char*> allowed) {
    for (const char* a : allowed) {
        if (cfg.format == a) return;
    }
    throw InputError("unsupported --format " + cfg.format + " for this command");
}

std::string scan_text(const ScanReport& r) {
    std::string s = "polynomial " + r.polynomial.to_human() + "\n";
    s += "range [" + std::to_string(r.range.lo) + ", " + std::to_string(r.range.hi) + "], " +
         std::to_string(r.good_primes()) + " good primes, " + std::to_string(r.excluded_primes.size()) +
         " excluded\n";
    for (const auto& [k, n] : r.histogram) s += "  " + std::to_string(k) + " roots: " + std::to_string(n) + "\n";
    const auto m = r.min_roots_observed();
    s += "min roots observed: " + (m ? std::to_string(*m) : std::string("none")) + "\n";
    return s;
}

int cmd_scan(const Config& cfg) {
    require_format(cfg, {"json", "tsv", "text"});
    const IntPoly f = checked_poly(cfg);
    const PrimeRange range = checked_range(cfg);
    const ScanReport r = scan(f, range, scan_options(cfg, range));
    if (cfg.format == "json") {
        std::cout << dump(to_json(r));
    } else if (cfg.format == "tsv") {
        std::cout << scan_tsv(r);
    } else {
        std::cout << scan_text(r);
    }
    return kExitOk;
}

int cmd_census(Config cfg) {
    require_format(cfg, {"json", "tsv", "text"});
    cfg.cycle_types = true;
    const IntPoly f = checked_poly(cfg);
    const PrimeRange range = checked_range(cfg);
    const ScanReport r = scan(f, range, scan_options(cfg, range));
    if (cfg.format == "json") {
        std::cout << dump(census_json(r));
    } else {
        std::cout << census_tsv(r);
    }
    return kExitOk;
}

int cmd_cover(const Config& cfg) {
    require_format(cfg, {"json", "text"});
    const auto forms = collect_forms(cfg);
    if (forms.empty()) throw InputError("cover needs at least one --form or a --forms-file");
    const CoverVerdict v = decide_cover(forms);
    if (const auto* c = std::get_if<Covers>(&v.outcome)) {
        if (!verify_cover_witness(forms, c->witness)) throw InvariantViolation("cover witness failed verification");
    }
    if (cfg.format == "json") {
        std::cout << dump(to_json(forms, v));
    } else if (v.covers()) {
        std::cout << "covers all large primes\n";
    } else {
        std::cout << "fails to cover a density " << v.uncovered_density().to_string() << " of primes\n";
    }
    return kExitOk;
}

int cmd_realroots(const Config& cfg) {
    require_format(cfg, {"json", "text"});
    if (cfg.precision < 0 || cfg.precision > 4096) throw InputError("--precision must be in [0, 4096]");
    const IntPoly f = checked_poly(cfg);
    const int count = count_real_roots(f);
    const auto intervals = isolate_real_roots(f, cfg.precision);
    if (cfg.format == "json") {
        std::cout << dump(real_roots_json(f, count, intervals));
    } else {
        std::cout << count << "\n";
        for (const auto& iv : intervals) {
            std::cout << "(" << to_string(iv.lo) << ", " << to_string(iv.hi) << "]  ~ " << iv.approx() << "\n";
        }
    }
    return kExitOk;
}

int cmd_check(const Config& cfg) {
    require_format(cfg, {"json", "tsv"});
    const auto forms = collect_forms(cfg);
    const PrimeRange range = checked_range(cfg);
    const ScanOptions opt = scan_options(cfg, range);
    if (forms.empty()) {
        const Theorem1Check c = check_theorem1(checked_poly(cfg), range, opt);
        if (cfg.format == "json") {
            std::cout << dump(to_json(c));
        } else {
            std::cout << scan_tsv(c.scan);
        }
        return kExitOk;
    }
    if (!cfg.poly.empty()) throw InputError("give either --poly or forms to check, not both");
    const Theorem1Check c = check_theorem1(forms, range, opt);
    std::optional<DensityComparison> cmp;
    if (range.hi >= kMinComparisonRange) cmp = compare_densities(forms, range, opt);
    if (cfg.format == "json") {
        nlohmann::json j;
        j["schema"] = kSchemaVersion;
        j["kind"] = "check";
        j["consistency"] = to_json(c);
        j["densities"] = cmp ? to_json(*cmp) : nlohmann::json(nullptr);
        std::cout << dump(j);
    } else if (cmp) {
        std::cout << density_tsv(*cmp);
    } else {
        std::cout << scan_tsv(c.scan);
    }
    return kExitOk;
}

int cmd_density(const Config& cfg) {
    require_format(cfg, {"json", "tsv"});
    const auto forms = collect_forms(cfg);
    if (forms.empty()) throw InputError("density needs at least one --form or a --forms-file");
    const RootDistribution d = exact_root_distribution(forms);
    if (cfg.format == "json") {
        std::cout << dump(to_json(d));
    } else {
        std::cout << distribution_tsv(d);
    }
    return kExitOk;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Roots of integer polynomials modulo primes, real roots, and covering sets of binary "
                 "quadratic forms"};
    app.require_subcommand(1);
    Config cfg;

    auto add_poly = [&](CLI::App* sub) {
        sub->add_option("--poly", cfg.poly, "Polynomial: \"[c0,c1,...]\" or e.g. \"(x^2+1)(x^2-2)\"");
    };
    auto add_forms = [&](CLI::App* sub) {
        sub->add_option("--form", cfg.forms, "Binary quadratic form a,b,c (repeatable)");
        sub->add_option("--forms-file", cfg.forms_file, "File with one a,b,c form per line");
    };
    auto add_range = [&](CLI::App* sub) {
        sub->add_option("--from", cfg.from, "Smallest integer scanned")->capture_default_str();
        sub->add_option("--to", cfg.to, "Largest integer scanned")->capture_default_str();
        sub->add_option("--cap", cfg.cap, "Refuse ranges beyond this bound")->capture_default_str();
    };
    auto add_format = [&](CLI::App* sub) {
        sub->add_option("--format", cfg.format, "json, tsv or text")->capture_default_str();
    };

    auto* scan_cmd = app.add_subcommand("scan", "Root counts mod p over a prime range");
    add_poly(scan_cmd);
    add_range(scan_cmd);
    add_format(scan_cmd);
    scan_cmd->add_flag("--cycle-types", cfg.cycle_types, "Also record Frobenius cycle types");

    auto* cover_cmd = app.add_subcommand("cover", "Decide whether forms cover all large primes");
    add_forms(cover_cmd);
    add_format(cover_cmd);

    auto* real_cmd = app.add_subcommand("realroots", "Count and isolate real roots");
    add_poly(real_cmd);
    add_format(real_cmd);
    real_cmd->add_option("--precision", cfg.precision, "Isolating interval width 2^-precision")
        ->capture_default_str();

    auto* census_cmd = app.add_subcommand("census", "Cycle-type histogram over a prime range");
    add_poly(census_cmd);
    add_range(census_cmd);
    add_format(census_cmd);

    auto* check_cmd = app.add_subcommand("check", "Compare roots mod p with real roots");
    add_poly(check_cmd);
    add_forms(check_cmd);
    add_range(check_cmd);
    add_format(check_cmd);

    auto* density_cmd = app.add_subcommand("density", "Exact root-count distribution of a product of quadratics");
    add_forms(density_cmd);
    add_format(density_cmd);

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::CallForAllHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return kExitInput;
    }

    try {
        if (*scan_cmd) return cmd_scan(cfg);
        if (*cover_cmd) return cmd_cover(cfg);
        if (*real_cmd) return cmd_realroots(cfg);
        if (*census_cmd) return cmd_census(cfg);
        if (*check_cmd) return cmd_check(cfg);
        if (*density_cmd) return cmd_density(cfg);
    } catch (const InputError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitInput;
    } catch (const InvariantViolation& e) {
        std::cerr << "internal error: " << e.what() << "\n";
        return kExitInternal;
    } catch (const std::exception& e) {
        std::cerr << "internal error: " << e.what() << "\n";
        return kExitInternal;
    }
    return kExitInput;
}
