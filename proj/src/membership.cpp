#include "chainbound/membership.hpp"

#include <algorithm>
#include <limits>
#include <map>
#include <utility>

#include "chainbound/division.hpp"
#include "chainbound/errors.hpp"
#include "chainbound/groebner.hpp"

namespace chainbound {

namespace {

Degree max_degree(std::span<const Polynomial> polys) {
  Degree d = 0;
  for (const auto& p : polys) d = std::max(d, p.degree());
  return d;
}

void validate_generators(std::span<const Polynomial> inputs, const Polynomial& g) {
  if (inputs.empty()) throw InvalidInputError("ideal has no generators");
  for (std::size_t i = 0; i < inputs.size(); ++i) {
    if (inputs[i].is_zero()) throw InvalidInputError("generator " + std::to_string(i + 1) + " is zero");
  }
  require_ambient(inputs, g.ambient());
}

Natural trace_bound(std::size_t r, Degree d, Degree deg_g) {
  const Natural base = d == 0 ? Natural(0) : chi(r, Natural(static_cast<unsigned long>(d)));
  return base + Natural(static_cast<unsigned long>(deg_g));
}

using SparseRow = std::vector<std::pair<std::size_t, Rational>>;

/// row -= factor * pivot, both sorted by column.
SparseRow subtract_scaled(const SparseRow& row, const Rational& factor, const SparseRow& pivot) {
  SparseRow out;
  out.reserve(row.size() + pivot.size());
  auto a = row.begin();
  auto b = pivot.begin();
  while (a != row.end() || b != pivot.end()) {
    if (b == pivot.end() || (a != row.end() && a->first < b->first)) {
      out.push_back(*a++);
    } else if (a == row.end() || b->first < a->first) {
      out.emplace_back(b->first, -factor * b->second);
      ++b;
    } else {
      Rational v = a->second - factor * b->second;
      if (sgn(v) != 0) out.emplace_back(a->first, std::move(v));
      ++a;
      ++b;
    }
  }
  return out;
}

}  // namespace

MembershipCertificate membership(const Polynomial& g, std::span<const Polynomial> inputs, MonomialOrder order,
                                 std::optional<Degree> d) {
  if (!order.graded()) {
    throw OrderNotGradedError("certified membership needs a graded order, got " + std::string(order.name()));
  }
  validate_generators(inputs, g);
  const Degree input_degree = max_degree(inputs);
  if (d && *d < input_degree) {
    throw PreconditionError("d = " + std::to_string(*d) + " is below input degree " + std::to_string(input_degree));
  }

  MembershipCertificate cert;
  cert.d = d.value_or(input_degree);
  if (g.is_zero()) {
    cert.member = true;
    cert.bound_used = 0;
    return cert;
  }

  const auto trace = buchberger_trace(inputs, order);
  const auto& basis_elems = trace.stage(trace.r());
  const auto basis = trace.basis();
  auto division = reduce(g, basis, order);
  cert.trace_r = trace.r();
  cert.bound_used = trace_bound(cert.trace_r, cert.d, g.degree());
  cert.provenance = BoundProvenance::trace_derived;
  cert.member = division.remainder.is_zero();
  if (!cert.member) return cert;

  const std::size_t s = inputs.size();
  cert.cofactors.assign(s, Polynomial(g.ambient()));
  for (std::size_t t = 0; t < basis.size(); ++t) {
    const auto& q = division.quotients[t];
    if (q.is_zero()) continue;
    for (std::size_t k = 0; k < s; ++k) {
      const auto& a = basis_elems[t].cofactors[k];
      if (!a.is_zero()) cert.cofactors[k] += q * a;
    }
  }
  cert.max_cofactor_degree = max_cofactor_degree(cert.cofactors);
  return cert;
}

bool ideal_contains(std::span<const Polynomial> generators, const Polynomial& g, MonomialOrder order) {
  validate_generators(generators, g);
  if (g.is_zero()) return true;
  const auto basis = groebner_basis(generators, order);
  return reduce(g, basis, order).remainder.is_zero();
}

CertificateBoundReport verify_cor45(const MembershipCertificate& cert, const Polynomial& g, std::span<const Polynomial> inputs,
                         std::size_t m, Degree d, const BoundBudget& budget) {
  if (!cert.member) throw PreconditionError("cannot verify a degree bound for a non-member");
  validate_generators(inputs, g);
  if (m != g.ambient()) {
    throw DimensionError("m = " + std::to_string(m) + " but the ring has " + std::to_string(g.ambient()) +
                         " variables");
  }
  if (d < 1) throw PreconditionError("d must be at least 1");
  if (max_degree(inputs) > d) throw PreconditionError("an input polynomial has degree above d");

  CertificateBoundReport report;
  const Degree deg_g = g.is_zero() ? 0 : g.degree();
  if (g.is_zero()) {
    report.identity_ok = cert.cofactors.empty() || combine(cert.cofactors, inputs).is_zero();
  } else {
    report.identity_ok = cert.cofactors.size() == inputs.size() && combine(cert.cofactors, inputs) == g;
  }
  report.observed_degree = max_cofactor_degree(cert.cofactors);
  report.trace_bound = trace_bound(cert.trace_r, d, deg_g);
  report.trace_bound_ok = Natural(static_cast<unsigned long>(report.observed_degree)) <= report.trace_bound;

  try {
    report.gamma_value =
        gamma(m, Natural(static_cast<unsigned long>(d)), Natural(static_cast<unsigned long>(deg_g)), budget);
    report.gamma_evaluated = true;
    report.gamma_ok = Natural(static_cast<unsigned long>(report.observed_degree)) <= report.gamma_value &&
                      report.trace_bound <= report.gamma_value;
  } catch (const BudgetError& e) {
    report.gamma_evaluated = false;
    report.notice = std::string("gamma not evaluated (") + e.what() + "); checked the trace-derived bound instead";
  }
  report.pass = report.identity_ok && report.trace_bound_ok && (!report.gamma_evaluated || report.gamma_ok);
  return report;
}

std::uint64_t monomial_count(std::size_t m, Degree d) {
  // C(d + m, m), saturating.
  constexpr auto kMax = std::numeric_limits<std::uint64_t>::max();
  Natural c = 1;
  for (std::size_t i = 1; i <= m; ++i) {
    c *= Natural(static_cast<unsigned long>(d + i));
    c /= Natural(static_cast<unsigned long>(i));
  }
  return c.fits_ulong_p() ? c.get_ui() : kMax;
}

bool brute_force_membership(const Polynomial& g, std::span<const Polynomial> inputs, Degree degree_cap,
                            std::size_t max_unknowns) {
  if (g.is_zero()) return true;
  require_ambient(inputs, g.ambient());
  const std::size_t m = g.ambient();
  const std::uint64_t per_cofactor = monomial_count(m, degree_cap);
  if (inputs.empty()) return false;
  if (per_cofactor > max_unknowns / inputs.size()) {
    throw BudgetError("linear system would need " + std::to_string(per_cofactor) + " unknowns per generator, over " +
                      "the budget of " + std::to_string(max_unknowns) + " in total");
  }
  const auto basis = exponents_up_to(m, degree_cap);
  const std::size_t unknowns = basis.size() * inputs.size();
  const std::size_t rhs = unknowns;

  // One equation per monomial: coefficient of x^gamma in sum h_i F_i equals g's.
  std::map<ExponentVector, SparseRow> equations;
  for (std::size_t i = 0; i < inputs.size(); ++i) {
    for (std::size_t b = 0; b < basis.size(); ++b) {
      const std::size_t col = i * basis.size() + b;
      for (const auto& t : inputs[i].terms()) equations[basis[b] + t.exps].emplace_back(col, t.coeff);
    }
  }
  for (const auto& t : g.terms()) equations[t.exps].emplace_back(rhs, t.coeff);

  std::map<std::size_t, SparseRow> pivots;  // leading column -> normalized row
  for (auto& [mono, row] : equations) {
    SparseRow current = std::move(row);
    while (!current.empty()) {
      const std::size_t lead = current.front().first;
      if (lead == rhs) return false;  // 0 = nonzero
      auto pivot = pivots.find(lead);
      if (pivot == pivots.end()) {
        const Rational inv = 1 / current.front().second;
        for (auto& [col, v] : current) v *= inv;
        pivots.emplace(lead, std::move(current));
        break;
      }
      const Rational factor = current.front().second;
      current = subtract_scaled(current, factor, pivot->second);
    }
  }
  return true;
}

}  // namespace chainbound
