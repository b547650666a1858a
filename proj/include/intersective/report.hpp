#pragma once

#include <string>
#include <vector>

#include <json.hpp>

#include "intersective/modular.hpp"
#include "intersective/quadcover.hpp"
#include "intersective/scanner.hpp"
#include "intersective/sturm.hpp"

namespace intersective {

/// Every JSON document carries "schema": kSchemaVersion. Keys are sorted
/// (nlohmann::json's default object ordering), so output is byte-stable.
inline constexpr const char* kSchemaVersion = "v1";

/// Rational rendered with six decimals, e.g. "0.250000".
std::string decimal6(const Rational& q);

nlohmann::json to_json(const ScanReport& r);
nlohmann::json to_json(const std::vector<QuadForm>& forms, const CoverVerdict& v);
nlohmann::json to_json(const RootDistribution& d);
nlohmann::json to_json(const Theorem1Check& c);
nlohmann::json to_json(const DensityComparison& c);
nlohmann::json real_roots_json(const IntPoly& f, int count, const std::vector<Interval>& intervals);
nlohmann::json census_json(const ScanReport& r);

/// One row per histogram entry: roots, primes, density.
std::string scan_tsv(const ScanReport& r);
/// One row per cycle type: cycle_type, primes, density.
std::string census_tsv(const ScanReport& r);
std::string density_tsv(const DensityComparison& c);
std::string distribution_tsv(const RootDistribution& d);

/// Canonical serialization: two-space indent plus trailing newline.
std::string dump(const nlohmann::json& j);

}  // namespace intersective
