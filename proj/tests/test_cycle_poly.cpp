#include <doctest.h>

#include <random>
#include <stdexcept>

#include "poly_literal.hpp"
#include "unitcycle/cycle_poly.hpp"

using namespace unitcycle;
using testing::ctype;
using testing::poly;

namespace {

CycleIndexPoly random_poly(std::mt19937& rng, unsigned max_terms) {
  std::uniform_int_distribution<int> nterms(0, static_cast<int>(max_terms));
  std::uniform_int_distribution<int> var(1, 6);
  std::uniform_int_distribution<int> exp(0, 3);
  std::uniform_int_distribution<int> num(-5, 5);
  std::uniform_int_distribution<int> den(1, 4);
  CycleIndexPoly p;
  const int n = nterms(rng);
  for (int t = 0; t < n; ++t) {
    CycleType::Exponents e;
    for (int k = 0; k < 3; ++k) e[static_cast<u64>(var(rng))] += static_cast<u64>(exp(rng));
    p.add_term(CycleType(e), Rational(num(rng), den(rng)));
  }
  return p;
}

}  // namespace

TEST_CASE("CycleType basics") {
  const auto ct = ctype("x1^2 x2^5");
  CHECK(ct.degree() == 12);
  CHECK(ct.exponent(2) == 5);
  CHECK(ct.exponent(3) == 0);
  CHECK(ct.max_index() == 2);
  CHECK(CycleType().degree() == 0);
  CHECK(CycleType::power(3, 0).empty());
  CHECK(CycleType({{1, 0}, {2, 3}}) == CycleType::power(2, 3));
  CHECK_THROWS_AS(CycleType::power(0, 1), std::invalid_argument);
}

TEST_CASE("monomial") {
  const auto p = monomial(ctype("x1^4"), Rational(1, 2));
  CHECK(p.size() == 1);
  CHECK(p.coefficient(ctype("x1^4")) == Rational(1, 2));
  CHECK(monomial(CycleType(), 1).coefficient(CycleType()) == 1);
  CHECK(monomial(ctype("x2^3"), 0).is_zero());
}

TEST_CASE("add and scale") {
  const auto z4 = poly(2, "x1^4 + x1^2 x2");
  CHECK(add(monomial(ctype("x1^4"), Rational(1, 2)), monomial(ctype("x1^2 x2"), Rational(1, 2))) == z4);
  CHECK(add(z4, CycleIndexPoly()) == z4);
  CHECK(add(z4, scale(z4, -1)).is_zero());
  CHECK(scale(z4, 1) == z4);
  CHECK(scale(poly(1, "x1^4 + x1^2 x2"), Rational(1, 2)) == z4);
  CHECK(scale(z4, 0).is_zero());
}

TEST_CASE("star_monomial") {
  CHECK(star_monomial(2, 3, 4, 5) == CycleType::power(4, 30));
  CHECK(star_monomial(1, 7, 1, 3) == CycleType::power(1, 21));
  CHECK(star_monomial(2, 1, 3, 1) == CycleType::power(6, 1));
}

TEST_CASE("star_product reproduces the worked U_12 and U_60 products") {
  const auto z4 = poly(2, "x1^4 + x1^2 x2");
  const auto z3 = poly(2, "x1^3 + x1 x2");
  const auto z5 = poly(4, "x1^5 + 2 x1 x4 + x1 x2^2");
  const auto z12 = poly(4, "x1^12 + x1^4 x2^4 + x1^2 x2^5 + x1^6 x2^3");
  const auto z60 = poly(16,
                        "x1^60 + 2 x1^4 x2^4 x4^12 + x1^4 x2^28 + 2 x1^2 x2^5 x4^12 + x1^2 x2^29 + "
                        "2 x1^6 x2^3 x4^12 + x1^6 x2^27 + 2 x1^12 x4^12 + x1^12 x2^24 + x1^10 x2^25 + "
                        "x1^20 x2^20 + x1^30 x2^15");
  CHECK(star_product(z4, z3) == z12);
  CHECK(star_product(z12, z5) == z60);
  CHECK(z60.size() == 12);
  const auto one = monomial(ctype("x1"), 1);
  CHECK(star_product(z60, one) == z60);
  CHECK(star_product(one, z60) == z60);
}

TEST_CASE("algebraic laws on random polynomials") {
  std::mt19937 rng(20261017);
  const auto one = monomial(ctype("x1"), 1);
  for (int trial = 0; trial < 200; ++trial) {
    const auto p = random_poly(rng, 4);
    const auto q = random_poly(rng, 4);
    const auto r = random_poly(rng, 3);
    REQUIRE(p + q == q + p);
    REQUIRE((p + q) + r == p + (q + r));
    REQUIRE(star_product(p, q) == star_product(q, p));
    REQUIRE(star_product(star_product(p, q), r) == star_product(p, star_product(q, r)));
    REQUIRE(star_product(p, q + r) == star_product(p, q) + star_product(p, r));
    REQUIRE(star_product(p, one) == p);
  }
}

TEST_CASE("star_product multiplies degrees") {
  const auto p = poly(6, "x1^6 + 2 x2^3 + 3 x3^2");
  const auto q = poly(2, "x1^4 + x1^2 x2");
  const auto pq = star_product(p, q);
  for (const auto& [ct, c] : pq.terms()) CHECK(ct.degree() == 24);
  CHECK(evaluate_uniform(star_product(p, q), 1) == 1);
}

TEST_CASE("evaluate") {
  const auto z4 = poly(2, "x1^4 + x1^2 x2");
  CHECK(evaluate_uniform(z4, 1) == 1);
  CHECK(evaluate(z4, {{1, 2}, {2, 2}}) == 12);
  CHECK(evaluate(CycleIndexPoly(), {}) == 0);
  CHECK(evaluate(z4, {{1, Rational(1, 2)}, {2, 3}}) == Rational(1, 32) + Rational(3, 8));
  CHECK_THROWS_AS(evaluate(z4, {{1, 2}}), std::invalid_argument);
}

TEST_CASE("term order") {
  const TermOrder before;
  CHECK(before(ctype("x1^4"), ctype("x1^2 x2")));
  CHECK(before(ctype("x1 x2^2"), ctype("x1 x4")));
  CHECK(before(ctype("x1^5"), ctype("x1 x4")));
  CHECK_FALSE(before(ctype("x1 x4"), ctype("x1 x4")));
  CHECK(before(ctype("x1^6"), ctype("x1^4")));  // higher degree first
}

TEST_CASE("render plain") {
  CHECK(render(poly(2, "x1^4 + x1^2 x2"), Format::plain) == "1/2 x1^4 + 1/2 x1^2 x2");
  CHECK(render(CycleIndexPoly(), Format::plain) == "0");
  CHECK(render(poly(4, "x1^5 + 2 x1 x4 + x1 x2^2"), Format::plain) == "1/4 x1^5 + 1/4 x1 x2^2 + 1/2 x1 x4");
  CHECK(render(monomial(ctype("x1"), 1), Format::plain) == "x1");
  CHECK(render(monomial(CycleType(), 3) - monomial(ctype("x2"), 1), Format::plain) == "-x2 + 3");
}

TEST_CASE("render latex") {
  CHECK(render(poly(2, "x1^3 + x1 x2"), Format::latex) == "\\frac{1}{2}\\left(x_{1}^{3}+x_{1}x_{2}\\right)");
  CHECK(render(poly(4, "x1^5 + 2 x1 x4 + x1 x2^2"), Format::latex) ==
        "\\frac{1}{4}\\left(x_{1}^{5}+x_{1}x_{2}^{2}+2x_{1}x_{4}\\right)");
  CHECK(render(monomial(ctype("x1^2"), 1), Format::latex) == "x_{1}^{2}");
  CHECK(render(CycleIndexPoly(), Format::latex) == "0");
}

TEST_CASE("render json and parse back") {
  const auto z4 = poly(2, "x1^4 + x1^2 x2");
  CHECK(render(z4, Format::json) ==
        R"({"denominator_free":false,"terms":[{"coeff":"1/2","monomial":{"1":4}},)"
        R"({"coeff":"1/2","monomial":{"1":2,"2":1}}]})");
  CHECK(parse_json(render(z4, Format::json)) == z4);
  CHECK(render(monomial(ctype("x1"), 1), Format::json) ==
        R"({"denominator_free":true,"terms":[{"coeff":"1/1","monomial":{"1":1}}]})");
  CHECK(parse_json(R"({"terms":[{"coeff":"2/4","monomial":{"10":1}},{"coeff":"1","monomial":{"10":1}}]})") ==
        monomial(ctype("x10"), Rational(3, 2)));
}

TEST_CASE("json round trip on random polynomials") {
  std::mt19937 rng(7);
  for (int trial = 0; trial < 200; ++trial) {
    const auto p = random_poly(rng, 6);
    REQUIRE(parse_json(render(p, Format::json)) == p);
  }
}

TEST_CASE("parse_json rejects malformed input") {
  CHECK_THROWS_AS(parse_json("not json"), std::invalid_argument);
  CHECK_THROWS_AS(parse_json(R"({"terms":{}})"), std::invalid_argument);
  CHECK_THROWS_AS(parse_json(R"({"terms":[{"coeff":1,"monomial":{}}]})"), std::invalid_argument);
  CHECK_THROWS_AS(parse_json(R"({"terms":[{"coeff":"1/0","monomial":{}}]})"), std::invalid_argument);
  CHECK_THROWS_AS(parse_json(R"({"terms":[{"coeff":"1","monomial":{"0":1}}]})"), std::invalid_argument);
  CHECK_THROWS_AS(parse_json(R"({"terms":[{"coeff":"1","monomial":{"x":1}}]})"), std::invalid_argument);
  CHECK_THROWS_AS(parse_json(R"({"terms":[{"coeff":"1","monomial":{"1":-1}}]})"), std::invalid_argument);
}

TEST_CASE("first_difference") {
  const auto a = poly(4, "x1^12 + x1^4 x2^4 + x1^2 x2^5 + x1^6 x2^3");
  auto b = a;
  CHECK_FALSE(first_difference(a, b).has_value());
  b.add_term(ctype("x1^2 x2^5"), Rational(1, 4));
  CHECK(first_difference(a, b) == std::optional<std::string>("x1^2 x2^5: 1/4 vs 1/2"));
  CHECK(first_difference(CycleIndexPoly(), a) == std::optional<std::string>("x1^12: 0 vs 1/4"));
}
