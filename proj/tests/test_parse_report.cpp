#include <doctest.h>

#include <random>
#include <sstream>

#include "intersective/error.hpp"
#include "intersective/parse.hpp"
#include "intersective/report.hpp"
#include "oracles.hpp"

using namespace intersective;

TEST_CASE("parse human expressions") {
    CHECK(parse_polynomial("x^2+1") == IntPoly{1, 0, 1});
    CHECK(parse_polynomial("(x^2+1)(x^2+2)(x^2-2)") == IntPoly{1, 0, 1} * IntPoly{2, 0, 1} * IntPoly{-2, 0, 1});
    CHECK(parse_polynomial("(x^2 + x + 1)(x^3 - 2)") == IntPoly{1, 1, 1} * IntPoly{-2, 0, 0, 1});
    CHECK(parse_polynomial("2*x^3 - 4") == IntPoly{-2, 0, 0, 1});
    CHECK(parse_polynomial("-x + 3") == IntPoly{-3, 1} * IntPoly{-1});
    CHECK(parse_polynomial("t^2 - 2") == IntPoly{-2, 0, 1});
    CHECK(parse_polynomial("(x-1)^3") == IntPoly{-1, 3, -3, 1});
    CHECK(parse_polynomial("1/2 x^2 - 1/3") == IntPoly{-2, 0, 3});
    CHECK(parse_polynomial("0").is_zero());
}

TEST_CASE("parse coefficient lists") {
    CHECK(parse_polynomial("[ -2,0,0,1 ]") == IntPoly{-2, 0, 0, 1});
    CHECK(parse_polynomial("[1,0,1]") == IntPoly{1, 0, 1});
    CHECK(parse_polynomial("[1/2, 0, 1/4]") == IntPoly{2, 0, 1});
    CHECK(parse_polynomial("[0, 0]").is_zero());
    const auto q = parse_rational_polynomial("[1/2, 3]");
    REQUIRE(q.size() == 2);
    CHECK(q[0] == Rational(1, 2));
}

TEST_CASE("malformed polynomials") {
    for (const char* bad : {"", "x^^2", "(x+1", "[1,2", "[1,,2]", "x^-1", "x y", "1/0", "[1/0]", "3 +", "x^2 + @"}) {
        CAPTURE(bad);
        CHECK_THROWS_AS(parse_polynomial(bad), InputError);
    }
}

TEST_CASE("to_string round trips") {
    std::mt19937_64 rng(2);
    for (int trial = 0; trial < 200; ++trial) {
        IntPoly f = oracle::random_poly(rng, 8, 1000);
        if (f.is_zero()) continue;
        f = primitive_part(f);
        CHECK(parse_polynomial(f.to_string()) == f);
        CHECK(parse_polynomial(f.to_human()) == f);
    }
}

TEST_CASE("forms") {
    CHECK(parse_form("1,0,-2") == QuadForm(1, 0, -2));
    CHECK(parse_form(" 3 , -1 , 7 ") == QuadForm(3, -1, 7));
    CHECK_THROWS_WITH_AS(parse_form("1,0"), "form \"1,0\" must be three integers a,b,c", InputError);
    CHECK_THROWS_AS(parse_form("1,0,x"), InputError);
    CHECK_THROWS_AS(parse_form("0,0,0"), InputError);
    std::istringstream in("# covering triple\n1,0,1\n\n1,0,2\n  # note\n1,0,-2\n");
    const auto forms = parse_forms(in);
    CHECK(forms == std::vector<QuadForm>{{1, 0, 1}, {1, 0, 2}, {1, 0, -2}});
    CHECK_THROWS_AS(read_forms_file("/nonexistent/forms.txt"), InputError);
}

TEST_CASE("decimal6") {
    CHECK(decimal6(Rational(1, 4)) == "0.250000");
    CHECK(decimal6(Rational(2, 3)) == "0.666667");
    CHECK(decimal6(Rational(-1, 8)) == "-0.125000");
    CHECK(decimal6(Rational(7)) == "7.000000");
    CHECK(decimal6(Rational(0)) == "0.000000");
    CHECK(decimal6(Rational(-1, 10'000'000)) == "0.000000");
}

TEST_CASE("JSON documents") {
    const std::vector<QuadForm> triple{{1, 0, 1}, {1, 0, 2}, {1, 0, -2}};
    const auto cover = to_json(triple, decide_cover(triple));
    CHECK(cover["schema"] == "v1");
    CHECK(cover["verdict"] == "covers");
    CHECK(cover["witness_subset"] == nlohmann::json::array({1, 2, 3}));
    CHECK(cover["kernels"] == nlohmann::json::array({"-1", "-2", "2"}));

    const auto fail = to_json({QuadForm(1, 0, 1)}, decide_cover({QuadForm(1, 0, 1)}));
    CHECK(fail["verdict"] == "fails_to_cover");
    CHECK(fail["density"] == "1/2");
    CHECK(fail["example_prime"] == 3);

    const ScanReport r = scan(IntPoly{1, 0, 1}, {2, 100});
    const std::string text = dump(to_json(r));
    CHECK(text.back() == '\n');
    CHECK(text == dump(nlohmann::json::parse(text)));
    // Keys come out sorted.
    CHECK(text.find("\"empirical_density_with_root\"") < text.find("\"histogram\""));
    CHECK(text.find("\"histogram\"") < text.find("\"schema\""));
    CHECK(to_json(r)["good_primes"] == 24);

    CHECK(scan_tsv(r).rfind("roots\tprimes\tdensity\n", 0) == 0);
    const auto dist = to_json(exact_root_distribution(triple));
    CHECK(dist["distribution"]["6"] == "1/4");
    CHECK(distribution_tsv(exact_root_distribution(triple)).find("6\t1/4") != std::string::npos);
}
