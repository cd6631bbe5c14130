#include <doctest.h>

#include <sstream>

#include "chainbound/errors.hpp"
#include "chainbound/poly_io.hpp"
#include "support/random.hpp"

using namespace chainbound;

TEST_CASE("grammar") {
  const auto p = parse_polynomial("x1^2*x2 - 1/2*x3 + 4", 3);
  CHECK(p.size() == 3);
  CHECK(p.coefficient({2, 1, 0}) == 1);
  CHECK(p.coefficient({0, 0, 1}) == Rational(-1, 2));
  CHECK(p.coefficient({0, 0, 0}) == 4);
  CHECK(parse_polynomial(" 3 * x1 * x1 ", 1) == parse_polynomial("3*x1^2", 1));
  CHECK(parse_polynomial("-x1 + x1", 1).is_zero());
  CHECK(parse_polynomial("0", 2).is_zero());
  CHECK(parse_polynomial("-2/3", 1).coefficient({0}) == Rational(-2, 3));
}

TEST_CASE("grammar errors") {
  CHECK_THROWS_AS(parse_polynomial("x1 +", 1), ParseError);
  CHECK_THROWS_AS(parse_polynomial("x0", 1), ParseError);
  CHECK_THROWS_AS(parse_polynomial("1/0", 1), ParseError);
  CHECK_THROWS_AS(parse_polynomial("y1", 1), ParseError);
  CHECK_THROWS_AS(parse_polynomial("", 1), ParseError);
  CHECK_THROWS_AS(parse_polynomial("x1^", 1), ParseError);
  CHECK_THROWS_AS(parse_polynomial("x3", 2), DimensionError);
  try {
    parse_polynomial("x1 + * x2", 2);
    FAIL("expected a parse error");
  } catch (const ParseError& e) {
    CHECK(e.position() == 5);
  }
}

TEST_CASE("ambient inference") {
  const std::vector<std::string> texts{"x1 + 1", "x3^2"};
  const auto polys = parse_polynomials(texts);
  CHECK(polys[0].ambient() == 3);
  CHECK(polys[1].ambient() == 3);
  CHECK(parse_polynomials(std::vector<std::string>{"5"}, 2)[0].ambient() == 2);
  CHECK(max_variable_index("x12*x3 - 7") == 12);
}

TEST_CASE("printing") {
  CHECK(to_string(parse_polynomial("x2 - x1 + 1/2", 2)) == "-x1 + x2 + 1/2");
  CHECK(to_string(Polynomial(2)) == "0");
  CHECK(to_string(parse_polynomial("x2^3 + x1^2*x2", 2), MonomialOrder::lex()) == "x1^2*x2 + x2^3");
  CHECK(to_string(ExponentVector{1, 0, 2}) == "(1,0,2)");
}

TEST_CASE("round trip") {
  chainbound::testing::Random rng(21);
  for (int it = 0; it < 300; ++it) {
    const std::size_t m = static_cast<std::size_t>(rng.uniform(1, 4));
    std::vector<Term> terms;
    for (int t = 0; t < rng.uniform(0, 4); ++t) {
      terms.push_back({rng.exponents(m, 4), Rational(rng.uniform(-20, 20), rng.uniform(1, 9))});
    }
    const Polynomial p(m, terms);
    for (auto order : {MonomialOrder::lex(), MonomialOrder::deglex()}) {
      CHECK(parse_polynomial(to_string(p, order), m) == p);
    }
  }
}

TEST_CASE("exponent sequences") {
  const auto seq = parse_exponent_sequence("(1,0); (0,1);(0,0)");
  REQUIRE(seq.size() == 3);
  CHECK(seq[1] == ExponentVector{0, 1});
  CHECK(parse_exponent_vector("(4)") == ExponentVector{4});
  CHECK_THROWS_AS(parse_exponent_vector("(1,-1)"), ParseError);
  CHECK_THROWS_AS(parse_exponent_vector("1,2"), ParseError);
}

TEST_CASE("files") {
  std::istringstream polys("# generators\nx1 + 1\n\n  x2  # trailing\n");
  const auto lines = read_polynomial_lines(polys);
  REQUIRE(lines.size() == 2);
  CHECK(parse_polynomial(lines[1], 2) == parse_polynomial("x2", 2));

  std::istringstream chain("x1\n\nx1\nx2\n\n\n# last\nx1\nx2\nx3\n");
  const auto stages = read_chain_stages(chain);
  REQUIRE(stages.size() == 3);
  CHECK(stages[0].size() == 1);
  CHECK(stages[1].size() == 2);
  CHECK(stages[2].size() == 3);
}
