#include <doctest.h>

#include "chainbound/division.hpp"
#include "chainbound/errors.hpp"
#include "chainbound/groebner.hpp"
#include "chainbound/membership.hpp"
#include "chainbound/poly_io.hpp"
#include "support/random.hpp"

using namespace chainbound;

namespace {

Polynomial P(const char* text, std::size_t m = 2) { return parse_polynomial(text, m); }

const auto kDeglex = MonomialOrder::deglex();

}  // namespace

TEST_CASE("s-polynomial") {
  const auto f = P("x1^2 - x2");
  CHECK(s_polynomial(f, f, kDeglex).is_zero());
  CHECK(s_polynomial(P("x1^2"), P("x2^3"), kDeglex).is_zero());
  CHECK(s_polynomial(f, P("x1*x2 - 1"), kDeglex) == P("x1 - x2^2"));
  CHECK(s_polynomial(f, P("x1*x2 - 1"), kDeglex) == P("x2") * f - P("x1") * P("x1*x2 - 1"));
  CHECK(s_polynomial(P("2*x1"), P("3*x1 + 1"), kDeglex) == P("-1/3"));
  CHECK_THROWS_AS(s_polynomial(Polynomial(2), f, kDeglex), ZeroPolynomialError);
}

TEST_CASE("s-reductions") {
  CHECK(s_reductions(std::vector{P("x1")}, kDeglex).empty());
  CHECK(s_reductions(std::vector{P("x1^2"), P("x1*x2")}, kDeglex).empty());
  const auto s = s_reductions(std::vector{P("x1^2 - x2"), P("x1*x2 - 1")}, kDeglex);
  REQUIRE(s.size() == 1);
  CHECK(s[0] == P("x1 - x2^2"));
}

TEST_CASE("trace examples") {
  auto trace = buchberger_trace(std::vector{P("x1")}, kDeglex);
  CHECK(trace.r() == 0);
  CHECK(trace.stage(0).size() == 1);

  trace = buchberger_trace(std::vector{P("x1"), P("x2")}, MonomialOrder::lex());
  CHECK(trace.r() == 0);

  const std::vector F{P("x1^2 - x2"), P("x1*x2 - 1")};
  trace = buchberger_trace(F, kDeglex);
  REQUIRE(trace.r() >= 1);
  CHECK(trace.stage(0).size() == 2);
  CHECK(trace.stage(0)[0].cofactors == std::vector{P("1"), P("0")});
  CHECK(trace.stage(0)[1].cofactors == std::vector{P("0"), P("1")});
  REQUIRE(trace.stage(1).size() == 3);
  const auto& added = trace.stage(1)[2];
  CHECK(added.poly == P("x1 - x2^2"));
  CHECK(added.cofactors == std::vector{P("x2"), P("-x1")});
  CHECK(verify_certificate(added, F));
  CHECK(is_groebner(trace.basis(), kDeglex));
  CHECK(lt_chain_strictly_ascends(trace));
  CHECK(groebner_basis(F, kDeglex) == trace.basis());
}

TEST_CASE("trace errors") {
  CHECK_THROWS_AS(buchberger_trace(std::vector<Polynomial>{}, kDeglex), InvalidInputError);
  CHECK_THROWS_AS(buchberger_trace(std::vector{P("x1"), Polynomial(2)}, kDeglex), InvalidInputError);
}

TEST_CASE("is_groebner") {
  CHECK(is_groebner(std::vector{P("x1"), P("x2^2")}, kDeglex));
  CHECK_FALSE(is_groebner(std::vector{P("x1^2 - x2"), P("x1*x2 - 1")}, kDeglex));
  CHECK(is_groebner(std::vector{P("x1^3*x2 - 7")}, kDeglex));
}

TEST_CASE("per-stage degree bounds") {
  const std::vector F{P("x1^2 - x2"), P("x1*x2 - 1")};
  const auto trace = buchberger_trace(F, kDeglex);
  const auto report = verify_prop43(trace, 2);
  CHECK(report.pass);
  CHECK(report.stages[0].max_cofactor_degree == 0);
  CHECK(report.stages[0].cofactor_bound == 0);
  CHECK(report.stages[1].cofactor_bound == 4);
  CHECK(report.stages[1].lead_bound == 6);
  CHECK(report.stages[1].max_cofactor_degree == 1);
  CHECK_THROWS_AS(verify_prop43(trace, 1), PreconditionError);
  CHECK_THROWS_AS(verify_prop43(buchberger_trace(F, MonomialOrder::lex()), 2), OrderNotGradedError);
}

TEST_CASE("minimal generators") {
  const auto gens = minimal_generators({{2, 0}, {1, 1}, {2, 1}, {0, 3}, {1, 1}});
  CHECK(gens == std::vector<ExponentVector>{{0, 3}, {1, 1}, {2, 0}});
}

TEST_CASE("random traces") {
  chainbound::testing::Random rng(41);
  for (int it = 0; it < 40; ++it) {
    const std::size_t m = static_cast<std::size_t>(rng.uniform(1, 3));
    const auto order = rng.coin() ? MonomialOrder::lex() : MonomialOrder::deglex();
    std::vector<Polynomial> F;
    Degree d = 0;
    for (int i = 0; i < rng.uniform(1, 3); ++i) {
      F.push_back(rng.polynomial(m, static_cast<Degree>(rng.uniform(1, 2)), 3));
      d = std::max(d, F.back().degree());
    }
    const auto trace = buchberger_trace(F, order);
    const auto basis = trace.basis();
    CHECK(is_groebner(basis, order));
    CHECK(lt_chain_strictly_ascends(trace));
    for (std::size_t i = 0; i < F.size(); ++i) CHECK(trace.elements[i].poly == F[i]);
    for (const auto& e : trace.elements) CHECK(verify_certificate(e, F));
    for (std::size_t i = 1; i < trace.stage_sizes.size(); ++i) CHECK(trace.stage_sizes[i] > trace.stage_sizes[i - 1]);
    if (order.graded()) CHECK(verify_prop43(trace, d).pass);

    // Random members of <F> reduce to zero modulo the basis.
    Polynomial g(m);
    for (const auto& f : F) g += rng.maybe_zero(m, 2, 2) * f;
    CHECK(reduce(g, basis, order).remainder.is_zero());
  }
}
