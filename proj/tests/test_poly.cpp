#include <doctest.h>

#include <random>

#include "anyon/errors.hpp"
#include "anyon/poly.hpp"
#include "anyon/reference_data.hpp"

using namespace anyon;
using reference::in_cubes;

namespace {

IntPoly random_poly(std::mt19937& rng, int max_degree, int max_coeff) {
    std::uniform_int_distribution<int> deg(-1, max_degree);
    std::uniform_int_distribution<int> coeff(-max_coeff, max_coeff);
    const int d = deg(rng);
    std::vector<BigInt> cs;
    for (int i = 0; i <= d; ++i) cs.emplace_back(coeff(rng));
    return IntPoly(std::move(cs));
}

IntPoly nonzero_poly(std::mt19937& rng, int max_degree, int max_coeff) {
    IntPoly p;
    while (p.is_zero()) p = random_poly(rng, max_degree, max_coeff);
    return p;
}

}  // namespace

TEST_CASE("ring arithmetic examples") {
    CHECK(in_cubes({1, -1}) + IntPoly::monomial(1, 3) == IntPoly(1));
    CHECK(in_cubes({1, -1}) * in_cubes({1, 1}) == in_cubes({1, 0, -1}));
    CHECK(in_cubes({1, -3}) * IntPoly(1) == in_cubes({1, -3}));
    CHECK((IntPoly::t() - IntPoly::t()).is_zero());
    CHECK((IntPoly::t() - IntPoly::t()).degree() == IntPoly::kZeroDegree);
    CHECK(IntPoly(std::vector<BigInt>{1, 2, 0, 0}).degree() == 1);
}

TEST_CASE("text and JSON formats") {
    CHECK(in_cubes({1, -4, -1}).to_string() == "1 - 4*t^3 - 1*t^6");
    CHECK(IntPoly().to_string() == "0");
    CHECK(IntPoly(std::vector<BigInt>{0, -2, 3}).to_string() == "-2*t + 3*t^2");
    CHECK(IntPoly(std::vector<BigInt>{-1, 1}).to_string() == "-1 + 1*t");
    CHECK(in_cubes({1, -4, -1}).to_json().dump() == R"({"coeffs":["1","0","0","-4","0","0","-1"]})");
    CHECK(RationalFn(IntPoly::t(), in_cubes({1, -1})).to_string() == "(1*t) / (1 - 1*t^3)");
}

TEST_CASE("poly_gcd examples") {
    // gcd(1 - t^6, 1 - t^3) is 1 - t^3 up to sign; the leading coefficient is made positive.
    CHECK(poly_gcd(in_cubes({1, 0, -1}), in_cubes({1, -1})) == IntPoly(std::vector<BigInt>{-1, 0, 0, 1}));
    CHECK(poly_gcd(IntPoly::monomial(1, 2), IntPoly::monomial(1, 3)) == IntPoly::monomial(1, 2));
    CHECK(poly_gcd(in_cubes({1, -3}), in_cubes({1, -4, -1})) == IntPoly(1));
    CHECK(poly_gcd(IntPoly(), IntPoly::monomial(6, 2)) == IntPoly::monomial(1, 2));
    CHECK_THROWS_AS(poly_gcd(IntPoly(), IntPoly()), InvalidArgument);
}

TEST_CASE("divide_exact") {
    const IntPoly a = in_cubes({1, -4, -1});
    const IntPoly b = IntPoly(std::vector<BigInt>{3, 0, 2, 7});
    CHECK((a * b).divide_exact(b) == a);
    CHECK((a * b).divide_exact(a) == b);
    CHECK((a * IntPoly::monomial(5, 4)).divide_exact(IntPoly::monomial(5, 4)) == a);
    CHECK_THROWS_AS(a.divide_exact(IntPoly::monomial(2, 0)), std::domain_error);
    CHECK_THROWS_AS(a.divide_exact(IntPoly::t()), std::domain_error);
    CHECK_THROWS_AS(a.divide_exact(IntPoly()), std::domain_error);
}

TEST_CASE("series_coeffs") {
    const auto one = series_coeffs(RationalFn(1, in_cubes({1, -1})), 9);
    const std::vector<int> expected_one{1, 0, 0, 1, 0, 0, 1, 0, 0, 1};
    for (std::size_t n = 0; n < expected_one.size(); ++n) CHECK(one[n] == expected_one[n]);

    const auto k2 = series_coeffs(RationalFn(in_cubes({1, -3}), in_cubes({1, -4, -1})), 18);
    const std::vector<int> cubes{1, 1, 5, 21, 89, 377, 1597};
    for (std::size_t n = 0; n <= 18; ++n) CHECK(k2[n] == (n % 3 == 0 ? cubes[n / 3] : 0));

    const auto shifted = series_coeffs(RationalFn(IntPoly::monomial(1, 2), in_cubes({1, -1})), 5);
    CHECK(shifted == std::vector<BigRational>{0, 0, 1, 0, 0, 1});

    CHECK_THROWS_AS(series_coeffs(IntPoly(1), IntPoly::t(), 3), SingularAtOrigin);
    // 1/(2 - t): non-unit constant term gives genuine fractions.
    const auto half = series_coeffs(IntPoly(1), IntPoly(std::vector<BigInt>{2, -1}), 2);
    CHECK(half[2] == BigRational(1, 8));
}

TEST_CASE("RationalFn normalization") {
    const RationalFn f(in_cubes({2, -6}), in_cubes({-2, 8, 2}));
    CHECK(f.num() == in_cubes({-1, 3}));
    CHECK(f.den() == in_cubes({1, -4, -1}));
    const RationalFn zero(IntPoly(), in_cubes({5, 1}));
    CHECK(zero.den() == IntPoly(1));
    const RationalFn at_origin(IntPoly(1), -IntPoly::monomial(3, 2));
    CHECK(at_origin.den() == IntPoly::monomial(3, 2));
    CHECK(at_origin.num() == IntPoly(std::vector<BigInt>{-1}));
    CHECK_THROWS_AS(RationalFn(IntPoly(1), IntPoly()), InvalidArgument);
}

TEST_CASE("property: ring axioms on random polynomials") {
    std::mt19937 rng(20240607);
    for (int trial = 0; trial < 200; ++trial) {
        const IntPoly a = random_poly(rng, 6, 9), b = random_poly(rng, 6, 9), c = random_poly(rng, 6, 9);
        CHECK((a * b) * c == a * (b * c));
        CHECK(a * (b + c) == a * b + a * c);
        CHECK(a + b == b + a);
        CHECK(a * b == b * a);
        CHECK((a - b) + b == a);
        if (!b.is_zero()) CHECK((a * b).divide_exact(b) == a);
    }
}

TEST_CASE("property: gcd divides both arguments and is invariant under common factors") {
    std::mt19937 rng(77);
    for (int trial = 0; trial < 100; ++trial) {
        const IntPoly a = nonzero_poly(rng, 5, 7), b = nonzero_poly(rng, 5, 7), g = nonzero_poly(rng, 3, 5);
        const IntPoly d = poly_gcd(a * g, b * g);
        CHECK_NOTHROW((a * g).divide_exact(d));
        CHECK_NOTHROW((b * g).divide_exact(d));
        CHECK_NOTHROW(d.divide_exact(g.primitive_part()));
        CHECK(d.leading() > 0);
        CHECK(d.content() == 1);
    }
}

TEST_CASE("property: reduction is invariant under common factors and keeps the series") {
    std::mt19937 rng(5);
    for (int trial = 0; trial < 100; ++trial) {
        const IntPoly num = random_poly(rng, 5, 6);
        IntPoly den = nonzero_poly(rng, 5, 6);
        if (den.coeff(0) == 0) den += IntPoly(1);
        if (den.is_zero()) continue;
        const IntPoly g = nonzero_poly(rng, 3, 4);
        const RationalFn f(num, den);
        CHECK(RationalFn(num * g, den * g) == f);
        if (den.coeff(0) != 0) CHECK(series_coeffs(f, 12) == series_coeffs(num, den, 12));
    }
}

TEST_CASE("property: JSON round trip") {
    std::mt19937 rng(11);
    for (int trial = 0; trial < 50; ++trial) {
        IntPoly p = random_poly(rng, 20, 1000);
        p *= BigInt("123456789012345678901234567890");
        CHECK(IntPoly::from_json(nlohmann::json::parse(p.to_json().dump())) == p);
    }
}

TEST_CASE("evaluation") {
    const IntPoly d3 = in_cubes({1, -9, 9, -8});
    CHECK(d3.evaluate(BigRational(1, 2)) == 0);
    CHECK(d3.evaluate(0.5) == doctest::Approx(0.0));
    CHECK(d3.sign_at_dyadic(1, 1) == 0);
    CHECK(d3.sign_at_dyadic(1, 2) == 1);   // t = 1/4
    CHECK(d3.sign_at_dyadic(3, 2) == -1);  // t = 3/4
}

TEST_CASE("series with a negative constant term in the denominator") {
    // 1 / (-1 + t) = -(1 + t + t^2 + ...)
    const auto c = series_coeffs(IntPoly(1), IntPoly(std::vector<BigInt>{-1, 1}), 4);
    for (const auto& x : c) CHECK(x == -1);
    const auto h = series_coeffs(IntPoly(1), IntPoly(std::vector<BigInt>{-2}), 1);
    CHECK(h[0] == BigRational(-1, 2));
}
