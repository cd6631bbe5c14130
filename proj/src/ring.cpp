#include "chainbound/ring.hpp"

#include <algorithm>
#include <numeric>
#include <string>

#include "chainbound/errors.hpp"

namespace chainbound {

namespace {

void require_same_length(const ExponentVector& a, const ExponentVector& b) {
  if (a.size() != b.size()) {
    throw DimensionError("exponent vectors of length " + std::to_string(a.size()) + " and " +
                         std::to_string(b.size()));
  }
}

void require_same_ambient(const Polynomial& p, const Polynomial& q) {
  if (p.ambient() != q.ambient()) {
    throw DimensionError("polynomials in " + std::to_string(p.ambient()) + " and " +
                         std::to_string(q.ambient()) + " variables");
  }
}

bool term_less(const Term& a, const Term& b) { return a.exps < b.exps; }

}  // namespace

Degree ExponentVector::total_degree() const noexcept {
  return std::accumulate(exps_.begin(), exps_.end(), Degree{0});
}

bool ExponentVector::is_zero() const noexcept {
  return std::all_of(exps_.begin(), exps_.end(), [](Exponent e) { return e == 0; });
}

bool divides(const ExponentVector& a, const ExponentVector& b) {
  require_same_length(a, b);
  for (std::size_t i = 0; i < a.size(); ++i) {
    if (a[i] > b[i]) return false;
  }
  return true;
}

Degree total_degree(const ExponentVector& a) noexcept { return a.total_degree(); }

ExponentVector operator+(const ExponentVector& a, const ExponentVector& b) {
  require_same_length(a, b);
  ExponentVector out(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) out[i] = a[i] + b[i];
  return out;
}

ExponentVector lcm(const ExponentVector& a, const ExponentVector& b) {
  require_same_length(a, b);
  ExponentVector out(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) out[i] = std::max(a[i], b[i]);
  return out;
}

ExponentVector quotient(const ExponentVector& b, const ExponentVector& a) {
  if (!divides(a, b)) throw PreconditionError("monomial quotient of non-divisible exponents");
  ExponentVector out(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) out[i] = b[i] - a[i];
  return out;
}

namespace {

void fill_exponents(std::vector<Exponent>& prefix, std::size_t m, Degree left, std::vector<ExponentVector>& out) {
  if (prefix.size() + 1 == m) {
    for (Degree e = left + 1; e-- > 0;) {
      prefix.push_back(static_cast<Exponent>(e));
      out.emplace_back(prefix);
      prefix.pop_back();
    }
    return;
  }
  for (Degree e = left + 1; e-- > 0;) {
    prefix.push_back(static_cast<Exponent>(e));
    fill_exponents(prefix, m, left - e, out);
    prefix.pop_back();
  }
}

}  // namespace

std::vector<ExponentVector> exponents_up_to(std::size_t m, Degree max_degree) {
  if (m == 0) throw DimensionError("exponent vectors need at least one coordinate");
  std::vector<ExponentVector> out;
  std::vector<Exponent> prefix;
  prefix.reserve(m);
  fill_exponents(prefix, m, max_degree, out);
  return out;
}

MonomialOrder MonomialOrder::parse(std::string_view name) {
  if (name == "lex") return lex();
  if (name == "deglex") return deglex();
  throw InvalidInputError("unknown monomial order '" + std::string(name) + "' (expected lex or deglex)");
}

std::string_view MonomialOrder::name() const noexcept {
  return kind_ == OrderKind::lex ? "lex" : "deglex";
}

std::strong_ordering MonomialOrder::compare(const ExponentVector& a, const ExponentVector& b) const {
  require_same_length(a, b);
  if (kind_ == OrderKind::deglex) {
    const auto da = a.total_degree();
    const auto db = b.total_degree();
    if (da != db) return da <=> db;
  }
  // x1 has the highest precedence, so the first differing coordinate decides.
  return a.values() <=> b.values();
}

std::strong_ordering compare(MonomialOrder order, const ExponentVector& a, const ExponentVector& b) {
  return order.compare(a, b);
}

Polynomial::Polynomial(std::size_t ambient, std::vector<Term> terms) : ambient_(ambient) {
  for (auto& t : terms) {
    t.coeff.canonicalize();
    if (t.exps.size() != ambient) {
      throw DimensionError("term of length " + std::to_string(t.exps.size()) + " in a polynomial over " +
                           std::to_string(ambient) + " variables");
    }
  }
  std::sort(terms.begin(), terms.end(), term_less);
  for (auto& t : terms) {
    if (!terms_.empty() && terms_.back().exps == t.exps) {
      terms_.back().coeff += t.coeff;
      if (sgn(terms_.back().coeff) == 0) terms_.pop_back();
    } else if (sgn(t.coeff) != 0) {
      terms_.push_back(std::move(t));
    }
  }
}

Polynomial Polynomial::constant(std::size_t ambient, const Rational& c) {
  return monomial(ExponentVector(ambient), c);
}

Polynomial Polynomial::monomial(const ExponentVector& exps, const Rational& c) {
  Polynomial p(exps.size());
  if (sgn(c) != 0) {
    p.terms_.push_back(Term{exps, c});
    p.terms_.back().coeff.canonicalize();
  }
  return p;
}

Polynomial Polynomial::variable(std::size_t ambient, std::size_t index) {
  if (index == 0 || index > ambient) {
    throw DimensionError("variable x" + std::to_string(index) + " outside 1.." + std::to_string(ambient));
  }
  ExponentVector e(ambient);
  e[index - 1] = 1;
  return monomial(e);
}

Rational Polynomial::coefficient(const ExponentVector& exps) const {
  auto it = std::lower_bound(terms_.begin(), terms_.end(), Term{exps, 0}, term_less);
  if (it != terms_.end() && it->exps == exps) return it->coeff;
  return 0;
}

Degree Polynomial::degree() const {
  if (is_zero()) throw ZeroPolynomialError("degree of the zero polynomial");
  Degree d = 0;
  for (const auto& t : terms_) d = std::max(d, t.exps.total_degree());
  return d;
}

std::vector<Term> Polynomial::terms_descending(MonomialOrder order) const {
  std::vector<Term> out(terms_.begin(), terms_.end());
  std::sort(out.begin(), out.end(),
            [order](const Term& a, const Term& b) { return order.compare(a.exps, b.exps) > 0; });
  return out;
}

Polynomial Polynomial::operator-() const {
  Polynomial out = *this;
  for (auto& t : out.terms_) t.coeff = -t.coeff;
  return out;
}

void Polynomial::combine(const Polynomial& rhs, int sign) {
  require_same_ambient(*this, rhs);
  if (rhs.is_zero()) return;
  std::vector<Term> merged;
  merged.reserve(terms_.size() + rhs.terms_.size());
  auto a = terms_.begin();
  auto b = rhs.terms_.begin();
  while (a != terms_.end() || b != rhs.terms_.end()) {
    if (b == rhs.terms_.end() || (a != terms_.end() && a->exps < b->exps)) {
      merged.push_back(std::move(*a++));
    } else if (a == terms_.end() || b->exps < a->exps) {
      merged.push_back(Term{b->exps, sign > 0 ? b->coeff : Rational(-b->coeff)});
      ++b;
    } else {
      Rational c = sign > 0 ? Rational(a->coeff + b->coeff) : Rational(a->coeff - b->coeff);
      if (sgn(c) != 0) merged.push_back(Term{std::move(a->exps), std::move(c)});
      ++a;
      ++b;
    }
  }
  terms_ = std::move(merged);
}

Polynomial& Polynomial::operator+=(const Polynomial& rhs) {
  combine(rhs, +1);
  return *this;
}

Polynomial& Polynomial::operator-=(const Polynomial& rhs) {
  combine(rhs, -1);
  return *this;
}

Polynomial operator*(const Polynomial& lhs, const Polynomial& rhs) {
  require_same_ambient(lhs, rhs);
  if (lhs.is_zero() || rhs.is_zero()) return Polynomial(lhs.ambient());
  std::vector<Term> products;
  products.reserve(lhs.size() * rhs.size());
  for (const auto& a : lhs.terms_) {
    for (const auto& b : rhs.terms_) products.push_back(Term{a.exps + b.exps, a.coeff * b.coeff});
  }
  return Polynomial(lhs.ambient(), std::move(products));
}

Polynomial add(const Polynomial& p, const Polynomial& q) { return p + q; }

Polynomial mul(const Polynomial& p, const Polynomial& q) { return p * q; }

Polynomial scale(const Polynomial& p, const Rational& c) {
  if (sgn(c) == 0) return Polynomial(p.ambient());
  std::vector<Term> terms(p.terms().begin(), p.terms().end());
  for (auto& t : terms) t.coeff *= c;
  return Polynomial(p.ambient(), std::move(terms));
}

Polynomial monomial_mul(const Polynomial& p, const ExponentVector& a, const Rational& c) {
  if (a.size() != p.ambient()) throw DimensionError("monomial multiplier has the wrong length");
  if (sgn(c) == 0) return Polynomial(p.ambient());
  std::vector<Term> terms;
  terms.reserve(p.size());
  for (const auto& t : p.terms()) terms.push_back(Term{t.exps + a, t.coeff * c});
  return Polynomial(p.ambient(), std::move(terms));
}

Degree degree(const Polynomial& p) { return p.degree(); }

LeadingTerm leading_term(const Polynomial& p, MonomialOrder order) {
  if (p.is_zero()) throw ZeroPolynomialError("leading term of the zero polynomial");
  const Term* best = &p.terms().front();
  for (const auto& t : p.terms()) {
    if (order.compare(t.exps, best->exps) > 0) best = &t;
  }
  return LeadingTerm{best->exps, best->coeff};
}

ExponentVector leading_monomial(const Polynomial& p, MonomialOrder order) {
  return leading_term(p, order).exps;
}

bool structural_less(const Polynomial& a, const Polynomial& b) {
  if (a.ambient() != b.ambient()) return a.ambient() < b.ambient();
  if (a.size() != b.size()) return a.size() < b.size();
  for (std::size_t i = 0; i < a.size(); ++i) {
    const auto& ta = a.terms()[i];
    const auto& tb = b.terms()[i];
    if (ta.exps != tb.exps) return ta.exps < tb.exps;
    if (ta.coeff != tb.coeff) return ta.coeff < tb.coeff;
  }
  return false;
}

void require_ambient(std::span<const Polynomial> polys, std::size_t ambient) {
  for (const auto& p : polys) {
    if (p.ambient() != ambient) {
      throw DimensionError("polynomial over " + std::to_string(p.ambient()) + " variables, expected " +
                           std::to_string(ambient));
    }
  }
}

}  // namespace chainbound
