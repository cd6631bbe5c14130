#include <doctest.h>

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

TEST_CASE("membership examples") {
  const std::vector F{P("x1^2 - x2"), P("x1*x2 - 1"), P("x2^3 + x1")};
  auto cert = membership(F[0] + F[1], F, kDeglex);
  CHECK(cert.member);
  CHECK(combine(cert.cofactors, F) == F[0] + F[1]);

  const std::vector G{P("x1", 1), P("x1 + 1", 1)};
  cert = membership(P("1", 1), G, kDeglex);
  CHECK(cert.member);
  CHECK(combine(cert.cofactors, G) == P("1", 1));

  cert = membership(P("x2"), std::vector{P("x1")}, kDeglex);
  CHECK_FALSE(cert.member);
  CHECK(cert.cofactors.empty());

  const std::vector H{P("x1^2 - x2"), P("x1*x2 - 1")};
  const auto g = P("x2^3 - 1");
  CHECK(P("-x2^2") * H[0] + P("1 + x1*x2") * H[1] == g);
  cert = membership(g, H, kDeglex);
  CHECK(cert.member);
  CHECK(combine(cert.cofactors, H) == g);
  CHECK(Natural(static_cast<unsigned long>(cert.max_cofactor_degree)) <= cert.bound_used);
  CHECK(cert.bound_used == chi(cert.trace_r, 2) + 3);

  cert = membership(Polynomial(2), H, kDeglex);
  CHECK(cert.member);
  CHECK(cert.cofactors.empty());
}

TEST_CASE("membership errors") {
  const std::vector F{P("x1")};
  CHECK_THROWS_AS(membership(P("x1"), F, MonomialOrder::lex()), OrderNotGradedError);
  CHECK_THROWS_AS(membership(P("x1"), std::vector<Polynomial>{}, kDeglex), InvalidInputError);
  CHECK_THROWS_AS(membership(P("x1"), std::vector{Polynomial(2)}, kDeglex), InvalidInputError);
  CHECK_THROWS_AS(membership(P("x1", 1), F, kDeglex), DimensionError);
  CHECK_THROWS_AS(membership(P("x1"), std::vector{P("x1^3")}, kDeglex, 2), PreconditionError);
  CHECK(membership(P("1"), std::vector{P("2")}, kDeglex).member);
}

TEST_CASE("degree bound check") {
  const std::vector F{P("x1^2 - x2"), P("x1*x2 - 1")};
  const auto g = P("x2^3 - 1");
  const auto cert = membership(g, F, kDeglex);
  auto report = verify_cor45(cert, g, F, 2, 2, BoundBudget{});
  CHECK(report.identity_ok);
  CHECK(report.trace_bound_ok);
  CHECK_FALSE(report.gamma_evaluated);
  CHECK_FALSE(report.notice.empty());
  CHECK(report.pass);

  const std::vector L{P("x1^2 + x1", 1)};
  const auto h = P("x1^3 + x1^2", 1);
  const auto c1 = membership(h, L, kDeglex);
  REQUIRE(c1.member);
  report = verify_cor45(c1, h, L, 1, 2, BoundBudget{});
  CHECK(report.gamma_evaluated);
  CHECK(report.gamma_value == 1456 + 3);
  CHECK(report.pass);

  const std::vector L1{P("x1 - 1", 1)};
  const auto c2 = membership(P("x1^4 - 1", 1), L1, kDeglex);
  report = verify_cor45(c2, P("x1^4 - 1", 1), L1, 1, 1, BoundBudget{});
  CHECK(report.gamma_value == 26 + 4);
  CHECK(report.pass);

  auto forged = c2;
  forged.cofactors[0] += P("1", 1);
  CHECK_FALSE(verify_cor45(forged, P("x1^4 - 1", 1), L1, 1, 1, BoundBudget{}).pass);

  const auto non = membership(P("x2"), std::vector{P("x1")}, kDeglex);
  CHECK_THROWS_AS(verify_cor45(non, P("x2"), std::vector{P("x1")}, 2, 1, BoundBudget{}), PreconditionError);
  CHECK_THROWS_AS(verify_cor45(cert, g, F, 3, 2, BoundBudget{}), DimensionError);
  CHECK_THROWS_AS(verify_cor45(cert, g, F, 2, 1, BoundBudget{}), PreconditionError);
}

TEST_CASE("brute force oracle examples") {
  const std::vector F{P("x1^2 - x2"), P("x1*x2 - 1")};
  CHECK(brute_force_membership(F[1], F, 0));
  CHECK(brute_force_membership(P("1", 1), std::vector{P("x1", 1), P("x1 + 1", 1)}, 0));
  for (Degree cap = 0; cap <= 4; ++cap) CHECK_FALSE(brute_force_membership(P("x2"), std::vector{P("x1")}, cap));
  CHECK_FALSE(brute_force_membership(P("x2^3 - 1"), F, 1));
  CHECK(brute_force_membership(P("x2^3 - 1"), F, 2));
  CHECK_THROWS_AS(brute_force_membership(P("x1"), std::vector{P("x1")}, 200, 1000), BudgetError);
  CHECK(monomial_count(2, 2) == 6);
  CHECK(monomial_count(3, 0) == 1);
}

TEST_CASE("random members and the oracle") {
  chainbound::testing::Random rng(71);
  int compared = 0;
  for (int it = 0; it < 40; ++it) {
    const std::size_t m = static_cast<std::size_t>(rng.uniform(1, 2));
    std::vector<Polynomial> F;
    for (int i = 0; i < rng.uniform(1, 3); ++i) F.push_back(rng.polynomial(m, static_cast<Degree>(rng.uniform(1, 2))));
    Polynomial g(m);
    for (const auto& f : F) g += rng.maybe_zero(m, 2, 2) * f;
    if (rng.coin()) g += rng.maybe_zero(m, 2, 1);
    const auto cert = membership(g, F, kDeglex);
    if (g.is_zero()) {
      CHECK(cert.cofactors.empty());
    } else if (cert.member) {
      CHECK(combine(cert.cofactors, F) == g);
      CHECK(Natural(static_cast<unsigned long>(cert.max_cofactor_degree)) <= cert.bound_used);
    }
    CHECK(ideal_contains(F, g, MonomialOrder::lex()) == cert.member);
    if (!cert.bound_used.fits_ulong_p() || cert.bound_used > 30) continue;
    try {
      CHECK(brute_force_membership(g, F, cert.bound_used.get_ui()) == cert.member);
      ++compared;
    } catch (const BudgetError&) {
    }
  }
  CHECK(compared >= 20);
}
