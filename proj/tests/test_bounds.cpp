#include <doctest.h>

#include <chrono>

#include "chainbound/bounds.hpp"
#include "chainbound/errors.hpp"
#include "support/oracles.hpp"
#include "support/random.hpp"

using namespace chainbound;
using chainbound::testing::Random;

namespace {

DegreeFunction C(unsigned long c) { return DegreeFunction::constant(c); }

std::vector<Natural> N(std::initializer_list<unsigned long> v) { return {v.begin(), v.end()}; }

std::uint64_t as_u64(const Natural& v) { return v.get_ui(); }

}  // namespace

TEST_CASE("degree functions") {
  CHECK(C(4).at(1) == 4);
  CHECK(C(4).at(1000) == 4);
  CHECK(DegreeFunction::identity().at(17) == 17);
  const auto t = DegreeFunction::table(N({1, 2, 2, 5}));
  CHECK(t.at(1) == 1);
  CHECK(t.at(4) == 5);
  CHECK(t.at(99) == 5);
  CHECK(DegreeFunction::geometric(2).at(3) == 54);
  CHECK_THROWS_AS(DegreeFunction::table(N({2, 1})), PreconditionError);
  CHECK_THROWS_AS(DegreeFunction::table(N({0, 1})), PreconditionError);
  CHECK_THROWS_AS(DegreeFunction::constant(0), PreconditionError);

  const auto rm = DegreeFunction::running_max(N({3, 1, 4, 1, 5}));
  const std::vector<unsigned long> expected{3, 3, 4, 4, 5, 5};
  for (std::size_t n = 1; n <= expected.size(); ++n) CHECK(rm.at(n) == expected[n - 1]);
}

TEST_CASE("shift and compose algebra") {
  Random rng(51);
  for (int it = 0; it < 50; ++it) {
    std::vector<Natural> values;
    unsigned long v = 1;
    for (int i = 0; i < rng.uniform(1, 6); ++i) {
      v += static_cast<unsigned long>(rng.uniform(0, 3));
      values.emplace_back(v);
    }
    const auto f = DegreeFunction::table(values);
    const auto s = static_cast<unsigned long>(rng.uniform(0, 5));
    const auto shifted = DegreeFunction::shift(s, f);
    const auto zero_shift = DegreeFunction::shift(0, f);
    const auto with_id = DegreeFunction::compose(f, DegreeFunction::identity());
    const auto twice = DegreeFunction::shift(1, DegreeFunction::shift(s, f));
    for (std::uint64_t n = 1; n <= 10; ++n) {
      CHECK(zero_shift.at(n) == f.at(n));
      CHECK(with_id.at(n) == f.at(n));
      CHECK(shifted.at(n) == f.at(s + n));
      CHECK(twice.at(n) == f.at(s + 1 + n));
      CHECK(DegreeFunction::compose(f, f).at(n) == f.at(as_u64(f.at(n))));
    }
  }
}

TEST_CASE("base cases") {
  CHECK(b1(C(5)) == 6);
  CHECK(b1(C(1)) == 2);
  CHECK(b1(DegreeFunction::identity()) == 2);
  CHECK(bmm(N({1, 2})) == 6);
  CHECK(bmm(N({0, 0, 0})) == 1);
  CHECK(bmm(N({9})) == 10);
  CHECK_THROWS_AS(bmm(std::vector<Natural>{}), DimensionError);
}

TEST_CASE("helper recursion") {
  const auto beta = N({1});
  const auto g = cf(2, 1, C(1), beta);
  CHECK(g.at(1) == 1);
  CHECK(g.at(2) == 6);
  CHECK(g.at(3) == 11);
  CHECK(g.at(3) == 11);  // memoized
  CHECK(bmk(2, 1, C(1), beta, BoundBudget{}) == 11);
  CHECK(bmk(2, 2, C(1), N({1, 2}), BoundBudget{}) == 6);
  CHECK(bmk(2, 0, C(1), {}, BoundBudget{}) == 25);
  CHECK_THROWS_AS(cf(1, 0, C(1), {}), PreconditionError);
  CHECK_THROWS_AS(cf(2, 2, C(1), N({1, 1})), PreconditionError);
  CHECK_THROWS_AS(cf(2, 1, C(1), {}), DimensionError);

  const auto g0 = cf(2, 0, C(2), {});
  for (std::uint64_t n = 1; n < 6; ++n) CHECK(g0.at(n + 1) >= g0.at(n) + 2);
}

TEST_CASE("bound against independent oracles") {
  CHECK(bound(1, C(5), BoundBudget{}) == 6);
  CHECK(bound(2, C(1), BoundBudget{}) == 25);
  CHECK(bound(2, C(1), BoundBudget{}) <= bound(2, C(2), BoundBudget{}));
  for (std::uint64_t c = 1; c <= 6; ++c) {
    const auto lib = bound(2, C(c), BoundBudget{});
    CHECK(lib == Natural(static_cast<unsigned long>(testing::closed_form_bound2(c))));
    CHECK(lib == Natural(static_cast<unsigned long>(testing::transcribed_bound(2, [c](std::uint64_t) { return c; }))));
    for (std::uint64_t b = 0; b <= 3; ++b) {
      CHECK(bmk(2, 1, C(c), N({b}), BoundBudget{}) == testing::closed_form_bmk21(c, b));
    }
  }
  // Non-constant functions against the transcription.
  Random rng(52);
  for (int it = 0; it < 30; ++it) {
    std::vector<std::uint64_t> values;
    std::uint64_t v = 1;
    for (int i = 0; i < rng.uniform(1, 4); ++i) {
      v += static_cast<std::uint64_t>(rng.uniform(0, 1));
      values.push_back(v);
    }
    std::vector<Natural> nat;
    for (auto x : values) nat.emplace_back(static_cast<unsigned long>(x));
    const auto f = DegreeFunction::table(nat);
    const testing::SmallFunction small = [values](std::uint64_t n) {
      return n <= values.size() ? values[n - 1] : values.back();
    };
    CHECK(bound(2, f, BoundBudget{}) == testing::transcribed_bound(2, small));
  }
  CHECK(bound(3, C(1), BoundBudget{}) ==
        Natural(static_cast<unsigned long>(testing::transcribed_bound(3, [](std::uint64_t) { return 1; }))));
}

TEST_CASE("chi and gamma") {
  CHECK(chi(0, 5) == 0);
  CHECK(chi(2, 2) == 16);
  CHECK_THROWS_AS(chi(1, 0), PreconditionError);
  Random rng(53);
  for (int it = 0; it < 50; ++it) {
    const auto n = static_cast<std::uint64_t>(rng.uniform(0, 40));
    const Natural d = static_cast<unsigned long>(rng.uniform(1, 100));
    CHECK(chi(n + 1, d) == 3 * chi(n, d) + 2 * d);
  }
  CHECK(gamma(1, 1, 0, BoundBudget{}) == 26);
  CHECK(gamma(1, 1, 7, BoundBudget{}) == 33);
  CHECK(gamma(1, 2, 0, BoundBudget{}) == 1456);
  CHECK_THROWS_AS(gamma(2, 1, 0, BoundBudget{}), BudgetError);
}

TEST_CASE("budget exhaustion is reported, not hung") {
  const auto start = std::chrono::steady_clock::now();
  try {
    bound(3, C(2), BoundBudget{1000, 100'000});
    FAIL("expected a budget error");
  } catch (const BudgetExceeded& e) {
    CHECK(e.reason() == BudgetExceeded::Reason::steps);
    CHECK(e.steps_used() <= 1000);
    CHECK_FALSE(e.progress().empty());
  }
  CHECK_THROWS_AS(bound(2, DegreeFunction::geometric(1), BoundBudget{}), BudgetExceeded);
  try {
    bound(2, C(1000), BoundBudget{1'000'000, 8});
    FAIL("expected a budget error");
  } catch (const BudgetExceeded& e) {
    CHECK(e.reason() == BudgetExceeded::Reason::bits);
  }
  CHECK(std::chrono::steady_clock::now() - start < std::chrono::seconds(5));
}

TEST_CASE("parsing degree functions") {
  CHECK(parse_degree_function("const:3").at(9) == 3);
  CHECK(parse_degree_function("table:1,2,4").at(3) == 4);
  CHECK(parse_degree_function("geom:2").at(2) == 18);
  CHECK(parse_degree_function("id").at(7) == 7);
  CHECK(parse_degree_function("table:3,1,2", true).at(3) == 3);
  CHECK_THROWS_AS(parse_degree_function("table:3,1,2"), PreconditionError);
  CHECK_THROWS_AS(parse_degree_function("const:"), InvalidInputError);
  CHECK_THROWS_AS(parse_degree_function("poly:3"), InvalidInputError);
  CHECK_THROWS_AS(parse_degree_function("const:0"), PreconditionError);
  CHECK(summarize(Natural(42)) == "42");
}

TEST_CASE("monotone in f and beta") {
  Random rng(54);
  for (int it = 0; it < 40; ++it) {
    std::vector<Natural> lo, hi;
    unsigned long a = 1, b = 1;
    for (int i = 0; i < rng.uniform(1, 3); ++i) {
      a += static_cast<unsigned long>(rng.uniform(0, 1));
      b = std::max(b, a) + static_cast<unsigned long>(rng.uniform(0, 1));
      lo.emplace_back(a);
      hi.emplace_back(b);
    }
    const auto f = DegreeFunction::table(lo);
    const auto g = DegreeFunction::table(hi);
    const Natural beta = static_cast<unsigned long>(rng.uniform(0, 2));
    const Natural beta2 = beta + static_cast<unsigned long>(rng.uniform(0, 2));
    CHECK(bound(2, f, BoundBudget{}) <= bound(2, g, BoundBudget{}));
    CHECK(bmk(2, 1, f, std::vector{beta}, BoundBudget{}) <= bmk(2, 1, g, std::vector{beta2}, BoundBudget{}));
  }
}
