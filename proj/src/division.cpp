#include "chainbound/division.hpp"

#include <map>
#include <string>

#include "chainbound/errors.hpp"

namespace chainbound {

namespace {

using WorkMap = std::map<ExponentVector, Rational, OrderLess>;

void check_divisors(std::span<const Polynomial> divisors, std::size_t ambient) {
  for (std::size_t i = 0; i < divisors.size(); ++i) {
    if (divisors[i].is_zero()) throw InvalidDivisorError("divisor " + std::to_string(i + 1) + " is zero");
    if (divisors[i].ambient() != ambient) {
      throw DimensionError("divisor " + std::to_string(i + 1) + " has the wrong number of variables");
    }
  }
}

}  // namespace

DivisionResult reduce(const Polynomial& f, std::span<const Polynomial> divisors, MonomialOrder order) {
  const std::size_t m = f.ambient();
  check_divisors(divisors, m);

  std::vector<LeadingTerm> leads;
  leads.reserve(divisors.size());
  for (const auto& d : divisors) leads.push_back(leading_term(d, order));

  WorkMap work(OrderLess{order});
  for (const auto& t : f.terms()) work.emplace(t.exps, t.coeff);

  std::vector<std::vector<Term>> quotient_terms(divisors.size());
  std::vector<Term> remainder_terms;

  while (!work.empty()) {
    auto top = std::prev(work.end());
    const ExponentVector mono = top->first;
    const Rational coeff = top->second;
    work.erase(top);

    std::size_t which = divisors.size();
    for (std::size_t i = 0; i < leads.size(); ++i) {
      if (divides(leads[i].exps, mono)) {
        which = i;
        break;
      }
    }
    if (which == divisors.size()) {
      remainder_terms.push_back(Term{mono, coeff});
      continue;
    }

    const ExponentVector shift = quotient(mono, leads[which].exps);
    const Rational factor = coeff / leads[which].coeff;
    quotient_terms[which].push_back(Term{shift, factor});
    // Subtract factor * x^shift * divisor; its leading term cancels `mono`, already removed.
    for (const auto& t : divisors[which].terms()) {
      if (t.exps == leads[which].exps) continue;
      ExponentVector e = t.exps + shift;
      Rational delta = factor * t.coeff;
      auto [it, inserted] = work.try_emplace(std::move(e), 0);
      it->second -= delta;
      if (sgn(it->second) == 0) work.erase(it);
    }
  }

  DivisionResult result;
  result.quotients.reserve(divisors.size());
  for (auto& q : quotient_terms) result.quotients.emplace_back(m, std::move(q));
  result.remainder = Polynomial(m, std::move(remainder_terms));
  return result;
}

bool is_reduced(const Polynomial& p, std::span<const Polynomial> divisors, MonomialOrder order) {
  check_divisors(divisors, p.ambient());
  for (const auto& d : divisors) {
    const auto lm = leading_monomial(d, order);
    for (const auto& t : p.terms()) {
      if (divides(lm, t.exps)) return false;
    }
  }
  return true;
}

}  // namespace chainbound
