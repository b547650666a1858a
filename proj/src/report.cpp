#include "intersective/report.hpp"

#include <sstream>

namespace intersective {

using nlohmann::json;

std::string decimal6(const Rational& q) {
    // round(|q| * 10^6) with ties away from zero, then place the point.
    BigInt scaled = abs(q.get_num()) * 1'000'000 * 2 + q.get_den();
    BigInt den2 = q.get_den() * 2;
    mpz_fdiv_q(scaled.get_mpz_t(), scaled.get_mpz_t(), den2.get_mpz_t());
    std::string digits = scaled.get_str();
    if (digits.size() < 7) digits.insert(0, 7 - digits.size(), '0');
    std::string out = digits.substr(0, digits.size() - 6) + "." + digits.substr(digits.size() - 6);
    return (sgn(q) < 0 && scaled != 0 ? "-" : "") + out;
}

namespace {

json histogram_json(const std::map<int, std::uint64_t>& h) {
    json j = json::object();
    for (const auto& [k, n] : h) j[std::to_string(k)] = n;
    return j;
}

json range_json(const PrimeRange& r) { return json{{"lo", r.lo}, {"hi", r.hi}}; }

json optional_int(const std::optional<int>& v) { return v ? json(*v) : json(nullptr); }

json density_map_json(const std::map<int, Dyadic>& d) {
    json j = json::object();
    for (const auto& [k, v] : d) j[std::to_string(k)] = v.to_string();
    return j;
}

}  // namespace

json to_json(const ScanReport& r) {
    json j;
    j["schema"] = kSchemaVersion;
    j["kind"] = "scan_report";
    j["polynomial"] = r.polynomial.to_string();
    j["squarefree_part"] = r.squarefree.to_string();
    j["range"] = range_json(r.range);
    j["excluded_primes"] = r.excluded_primes;
    j["good_primes"] = r.good_primes();
    j["histogram"] = histogram_json(r.histogram);
    j["min_roots_observed"] = optional_int(r.min_roots_observed());
    const Rational d = r.empirical_density_with_root();
    j["empirical_density_with_root"] = to_string(d);
    j["empirical_density_with_root_decimal"] = decimal6(d);
    if (r.cycle_type_histogram) {
        json ct = json::object();
        for (const auto& [k, n] : *r.cycle_type_histogram) ct[k.to_string()] = n;
        j["cycle_type_histogram"] = ct;
    }
    return j;
}

json census_json(const ScanReport& r) {
    json j = to_json(r);
    j["kind"] = "census";
    return j;
}

json to_json(const std::vector<QuadForm>& forms, const CoverVerdict& v) {
    json j;
    j["schema"] = kSchemaVersion;
    j["kind"] = "cover_verdict";
    json fs = json::array();
    for (const auto& q : forms) fs.push_back(q.to_string());
    j["forms"] = fs;
    json kernels = json::array();
    for (const auto& sc : v.classes.classes) kernels.push_back(sc.kernel.get_str());
    j["kernels"] = kernels;
    json basis = json::array();
    for (const auto& b : v.classes.basis) basis.push_back(b.get_str());
    j["basis"] = basis;
    j["rank"] = v.rank;
    const Dyadic d = v.uncovered_density();
    j["density"] = d.to_string();
    j["density_num"] = d.num.get_str();
    j["density_log2_den"] = d.log2_den;
    if (const auto* c = std::get_if<Covers>(&v.outcome)) {
        j["verdict"] = "covers";
        json w = json::array();
        for (std::size_t i : c->witness) w.push_back(i + 1);  // 1-based form numbers
        j["witness_subset"] = w;
    } else {
        const auto& f = std::get<FailsToCover>(v.outcome);
        j["verdict"] = "fails_to_cover";
        json cls = json::object();
        for (std::size_t i = 0; i < f.witness_class.basis.size(); ++i) {
            cls[f.witness_class.basis[i].get_str()] = f.witness_class.values[i];
        }
        j["witness_class"] = cls;
        j["example_prime"] = f.example_prime ? json(*f.example_prime) : json("none found below bound");
    }
    return j;
}

json to_json(const RootDistribution& d) {
    json j;
    j["schema"] = kSchemaVersion;
    j["kind"] = "root_distribution";
    j["rank"] = d.rank;
    j["exact_min_roots"] = d.min_roots;
    j["distribution"] = density_map_json(d.density);
    return j;
}

json to_json(const Theorem1Check& c) {
    json j;
    j["schema"] = kSchemaVersion;
    j["kind"] = "root_consistency_check";
    j["min_roots_observed"] = optional_int(c.min_roots_observed);
    j["real_root_count"] = c.real_root_count;
    j["exact_min_roots"] = c.exact_min_roots ? json(*c.exact_min_roots) : json(nullptr);
    j["evidence"] = c.evidence();
    j["verdict"] = c.consistent ? "consistent" : "inconsistent";
    j["scan"] = to_json(c.scan);
    if (c.distribution) j["distribution"] = density_map_json(c.distribution->density);
    return j;
}

json to_json(const DensityComparison& c) {
    json j;
    j["schema"] = kSchemaVersion;
    j["kind"] = "density_comparison";
    json rows = json::array();
    for (const auto& r : c.rows) {
        rows.push_back(json{{"roots", r.roots},
                            {"exact", to_string(r.exact)},
                            {"exact_decimal", decimal6(r.exact)},
                            {"empirical", to_string(r.empirical)},
                            {"empirical_decimal", decimal6(r.empirical)},
                            {"deviation_decimal", decimal6(r.deviation)}});
    }
    j["rows"] = rows;
    j["max_deviation"] = to_string(c.max_deviation);
    j["max_deviation_decimal"] = decimal6(c.max_deviation);
    j["good_primes"] = c.scan.good_primes();
    j["range"] = range_json(c.scan.range);
    return j;
}

json real_roots_json(const IntPoly& f, int count, const std::vector<Interval>& intervals) {
    json j;
    j["schema"] = kSchemaVersion;
    j["kind"] = "real_roots";
    j["polynomial"] = f.to_string();
    j["real_root_count"] = count;
    json ivs = json::array();
    for (const auto& iv : intervals) {
        ivs.push_back(json{{"lo", to_string(iv.lo)}, {"hi", to_string(iv.hi)}, {"exact", iv.exact}});
    }
    j["intervals"] = ivs;
    return j;
}

std::string scan_tsv(const ScanReport& r) {
    std::ostringstream out;
    out << "roots\tprimes\tdensity\n";
    const std::uint64_t good = r.good_primes();
    for (const auto& [k, n] : r.histogram) {
        Rational d(from_u64(n), from_u64(good));
        d.canonicalize();
        out << k << '\t' << n << '\t' << decimal6(d) << '\n';
    }
    return out.str();
}

std::string census_tsv(const ScanReport& r) {
    std::ostringstream out;
    out << "cycle_type\tprimes\tdensity\n";
    const std::uint64_t good = r.good_primes();
    if (r.cycle_type_histogram) {
        for (const auto& [k, n] : *r.cycle_type_histogram) {
            Rational d(from_u64(n), from_u64(good));
            d.canonicalize();
            out << k.to_string() << '\t' << n << '\t' << decimal6(d) << '\n';
        }
    }
    return out.str();
}

std::string density_tsv(const DensityComparison& c) {
    std::ostringstream out;
    out << "roots\texact\tempirical\tdeviation\n";
    for (const auto& r : c.rows) {
        out << r.roots << '\t' << decimal6(r.exact) << '\t' << decimal6(r.empirical) << '\t'
            << decimal6(r.deviation) << '\n';
    }
    return out.str();
}

std::string distribution_tsv(const RootDistribution& d) {
    std::ostringstream out;
    out << "roots\tdensity\n";
    for (const auto& [k, v] : d.density) out << k << '\t' << v.to_string() << '\n';
    return out.str();
}

std::string dump(const json& j) { return j.dump(2) + "\n"; }

}  // namespace intersective
