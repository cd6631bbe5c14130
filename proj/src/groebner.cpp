#include "chainbound/groebner.hpp"

#include <algorithm>
#include <string>

#include "chainbound/division.hpp"
#include "chainbound/errors.hpp"

namespace chainbound {

namespace {

/// S(f, g) written as f_mul * f - g_mul * g with monomial multipliers.
struct SPair {
  ExponentVector f_shift;
  Rational f_coeff;
  ExponentVector g_shift;
  Rational g_coeff;
  Polynomial value;
};

SPair make_s_pair(const Polynomial& f, const Polynomial& g, MonomialOrder order) {
  if (f.is_zero() || g.is_zero()) throw ZeroPolynomialError("S-polynomial of the zero polynomial");
  if (f.ambient() != g.ambient()) throw DimensionError("S-polynomial of polynomials in different rings");
  const auto lf = leading_term(f, order);
  const auto lg = leading_term(g, order);
  const auto l = lcm(lf.exps, lg.exps);
  SPair pair{quotient(l, lf.exps), Rational(1 / lf.coeff), quotient(l, lg.exps), Rational(1 / lg.coeff),
             Polynomial(f.ambient())};
  pair.value = monomial_mul(f, pair.f_shift, pair.f_coeff) - monomial_mul(g, pair.g_shift, pair.g_coeff);
  return pair;
}

void require_nonzero(std::span<const Polynomial> polys, const char* what) {
  for (std::size_t i = 0; i < polys.size(); ++i) {
    if (polys[i].is_zero()) {
      throw InvalidInputError(std::string(what) + " " + std::to_string(i + 1) + " is the zero polynomial");
    }
  }
}

bool contains(std::span<const CertifiedPolynomial> elems, const Polynomial& p) {
  return std::any_of(elems.begin(), elems.end(), [&](const CertifiedPolynomial& c) { return c.poly == p; });
}

std::vector<ExponentVector> stage_leads(std::span<const CertifiedPolynomial> stage, MonomialOrder order) {
  std::vector<ExponentVector> leads;
  leads.reserve(stage.size());
  for (const auto& c : stage) leads.push_back(leading_monomial(c.poly, order));
  return leads;
}

Natural pow3(Degree n) {
  Natural out;
  mpz_ui_pow_ui(out.get_mpz_t(), 3, n);
  return out;
}

}  // namespace

Polynomial combine(std::span<const Polynomial> cofactors, std::span<const Polynomial> inputs) {
  if (cofactors.size() != inputs.size()) {
    throw DimensionError("certificate has " + std::to_string(cofactors.size()) + " cofactors for " +
                         std::to_string(inputs.size()) + " inputs");
  }
  Polynomial sum(inputs.empty() ? 1 : inputs.front().ambient());
  for (std::size_t i = 0; i < inputs.size(); ++i) {
    if (!cofactors[i].is_zero()) sum += cofactors[i] * inputs[i];
  }
  return sum;
}

bool verify_certificate(const CertifiedPolynomial& c, std::span<const Polynomial> inputs) {
  return combine(c.cofactors, inputs) == c.poly;
}

Degree max_cofactor_degree(std::span<const Polynomial> cofactors) {
  Degree d = 0;
  for (const auto& c : cofactors) {
    if (!c.is_zero()) d = std::max(d, c.degree());
  }
  return d;
}

std::vector<ExponentVector> minimal_generators(std::vector<ExponentVector> monomials) {
  std::sort(monomials.begin(), monomials.end());
  monomials.erase(std::unique(monomials.begin(), monomials.end()), monomials.end());
  std::vector<ExponentVector> out;
  for (std::size_t i = 0; i < monomials.size(); ++i) {
    bool redundant = false;
    for (std::size_t j = 0; j < monomials.size() && !redundant; ++j) {
      redundant = j != i && divides(monomials[j], monomials[i]);
    }
    if (!redundant) out.push_back(monomials[i]);
  }
  return out;
}

std::span<const CertifiedPolynomial> BuchbergerTrace::stage(std::size_t i) const {
  if (i >= stage_sizes.size()) throw PreconditionError("stage index out of range");
  return std::span<const CertifiedPolynomial>(elements).first(stage_sizes[i]);
}

std::vector<Polynomial> BuchbergerTrace::stage_polynomials(std::size_t i) const {
  std::vector<Polynomial> out;
  for (const auto& c : stage(i)) out.push_back(c.poly);
  return out;
}

Polynomial s_polynomial(const Polynomial& f, const Polynomial& g, MonomialOrder order) {
  return make_s_pair(f, g, order).value;
}

std::vector<Polynomial> s_reductions(std::span<const Polynomial> basis, MonomialOrder order) {
  require_nonzero(basis, "basis element");
  std::vector<Polynomial> out;
  for (std::size_t i = 0; i < basis.size(); ++i) {
    for (std::size_t j = i + 1; j < basis.size(); ++j) {
      auto rem = reduce(s_polynomial(basis[i], basis[j], order), basis, order).remainder;
      if (rem.is_zero()) continue;
      if (std::find(out.begin(), out.end(), rem) == out.end()) out.push_back(std::move(rem));
    }
  }
  return out;
}

namespace {

BuchbergerTrace run_batch(std::span<const Polynomial> inputs, MonomialOrder order, bool certify) {
  if (inputs.empty()) throw InvalidInputError("Buchberger input is empty");
  require_nonzero(inputs, "input polynomial");
  const std::size_t m = inputs.front().ambient();
  require_ambient(inputs, m);
  const std::size_t s = inputs.size();

  BuchbergerTrace trace;
  trace.input.assign(inputs.begin(), inputs.end());
  trace.order = order;

  for (std::size_t i = 0; i < s; ++i) {
    if (contains(trace.elements, inputs[i])) continue;
    std::vector<Polynomial> unit;
    if (certify) {
      unit.assign(s, Polynomial(m));
      unit[i] = Polynomial::constant(m, 1);
    }
    trace.elements.push_back(CertifiedPolynomial{inputs[i], std::move(unit)});
  }
  trace.stage_sizes.push_back(trace.elements.size());
  trace.lt_generators.push_back(minimal_generators(stage_leads(trace.elements, order)));

  // Pairs already seen to reduce to zero. Earlier stages are prefixes of later ones and
  // division always takes the first usable divisor, so such a pair replays the same steps.
  std::vector<std::vector<bool>> vanished;
  while (true) {
    const std::size_t n = trace.elements.size();
    vanished.resize(n);
    for (auto& row : vanished) row.resize(n, false);
    std::vector<Polynomial> current;
    current.reserve(n);
    for (std::size_t i = 0; i < n; ++i) current.push_back(trace.elements[i].poly);

    std::vector<CertifiedPolynomial> fresh;
    for (std::size_t i = 0; i < n; ++i) {
      for (std::size_t j = i + 1; j < n; ++j) {
        if (vanished[i][j]) continue;
        const auto pair = make_s_pair(current[i], current[j], order);
        auto division = reduce(pair.value, current, order);
        if (division.remainder.is_zero()) {
          vanished[i][j] = true;
          continue;
        }
        if (contains(fresh, division.remainder)) continue;
        if (!certify) {
          fresh.push_back(CertifiedPolynomial{std::move(division.remainder), {}});
          continue;
        }

        // remainder = f_mul*b_i - g_mul*b_j - sum_t q_t*b_t, expanded over F.
        const auto& ci = trace.elements[i].cofactors;
        const auto& cj = trace.elements[j].cofactors;
        std::vector<Polynomial> cof(s, Polynomial(m));
        for (std::size_t k = 0; k < s; ++k) {
          cof[k] = monomial_mul(ci[k], pair.f_shift, pair.f_coeff) - monomial_mul(cj[k], pair.g_shift, pair.g_coeff);
        }
        for (std::size_t t = 0; t < n; ++t) {
          const auto& q = division.quotients[t];
          if (q.is_zero()) continue;
          for (std::size_t k = 0; k < s; ++k) {
            const auto& a = trace.elements[t].cofactors[k];
            if (!a.is_zero()) cof[k] -= q * a;
          }
        }
        fresh.push_back(CertifiedPolynomial{std::move(division.remainder), std::move(cof)});
      }
    }
    if (fresh.empty()) break;
    for (auto& c : fresh) trace.elements.push_back(std::move(c));
    trace.stage_sizes.push_back(trace.elements.size());
    trace.lt_generators.push_back(minimal_generators(stage_leads(trace.elements, order)));
  }
  return trace;
}

}  // namespace

BuchbergerTrace buchberger_trace(std::span<const Polynomial> inputs, MonomialOrder order) {
  return run_batch(inputs, order, true);
}

std::vector<Polynomial> groebner_basis(std::span<const Polynomial> inputs, MonomialOrder order) {
  return run_batch(inputs, order, false).basis();
}

bool is_groebner(std::span<const Polynomial> basis, MonomialOrder order) {
  require_nonzero(basis, "basis element");
  for (std::size_t i = 0; i < basis.size(); ++i) {
    for (std::size_t j = i + 1; j < basis.size(); ++j) {
      if (!reduce(s_polynomial(basis[i], basis[j], order), basis, order).remainder.is_zero()) return false;
    }
  }
  return true;
}

StageBoundReport verify_prop43(const BuchbergerTrace& trace, Degree d) {
  if (!trace.order.graded()) {
    throw OrderNotGradedError("degree bounds on Buchberger stages need a graded order, got " +
                              std::string(trace.order.name()));
  }
  for (const auto& f : trace.input) {
    if (f.degree() > d) {
      throw PreconditionError("d = " + std::to_string(d) + " is below input degree " + std::to_string(f.degree()));
    }
  }
  StageBoundReport report;
  report.d = d;
  for (std::size_t n = 0; n <= trace.r(); ++n) {
    StageBoundEntry st;
    st.stage = n;
    st.lead_bound = pow3(n) * Natural(static_cast<unsigned long>(d));
    st.cofactor_bound = st.lead_bound - Natural(static_cast<unsigned long>(d));
    for (const auto& c : trace.stage(n)) {
      st.max_cofactor_degree = std::max(st.max_cofactor_degree, max_cofactor_degree(c.cofactors));
      st.max_lead_degree = std::max(st.max_lead_degree, leading_monomial(c.poly, trace.order).total_degree());
      if (!verify_certificate(c, trace.input)) st.certificates_ok = false;
    }
    st.cofactors_ok = Natural(static_cast<unsigned long>(st.max_cofactor_degree)) <= st.cofactor_bound;
    st.leads_ok = Natural(static_cast<unsigned long>(st.max_lead_degree)) <= st.lead_bound;
    report.pass = report.pass && st.cofactors_ok && st.leads_ok && st.certificates_ok;
    report.stages.push_back(std::move(st));
  }
  return report;
}

bool lt_chain_strictly_ascends(const BuchbergerTrace& trace) {
  for (std::size_t i = 0; i < trace.r(); ++i) {
    const auto previous = stage_leads(trace.stage(i), trace.order);
    bool grew = false;
    for (std::size_t e = trace.stage_sizes[i]; e < trace.stage_sizes[i + 1] && !grew; ++e) {
      const auto lm = leading_monomial(trace.elements[e].poly, trace.order);
      grew = std::none_of(previous.begin(), previous.end(),
                          [&](const ExponentVector& p) { return divides(p, lm); });
    }
    if (!grew) return false;
  }
  return true;
}

}  // namespace chainbound
