#pragma once

#include <compare>
#include <cstddef>
#include <cstdint>
#include <initializer_list>
#include <span>
#include <string_view>
#include <vector>

#include <gmpxx.h>

namespace chainbound {

using Rational = mpq_class;
using Natural = mpz_class;
using Exponent = std::uint32_t;
using Degree = std::uint64_t;

/// A point of N^m, read as the monomial x1^a1 * ... * xm^am.
///
/// The built-in comparison operators are the structural (lexicographic on
/// coordinates) order used for container keys; monomial orders live in
/// MonomialOrder.
class ExponentVector {
 public:
  ExponentVector() = default;
  explicit ExponentVector(std::size_t m) : exps_(m, 0) {}
  ExponentVector(std::initializer_list<Exponent> exps) : exps_(exps) {}
  explicit ExponentVector(std::vector<Exponent> exps) : exps_(std::move(exps)) {}

  std::size_t size() const noexcept { return exps_.size(); }
  Exponent operator[](std::size_t i) const { return exps_[i]; }
  Exponent& operator[](std::size_t i) { return exps_[i]; }
  auto begin() const noexcept { return exps_.begin(); }
  auto end() const noexcept { return exps_.end(); }
  const std::vector<Exponent>& values() const noexcept { return exps_; }

  Degree total_degree() const noexcept;
  bool is_zero() const noexcept;

  friend bool operator==(const ExponentVector&, const ExponentVector&) = default;
  friend auto operator<=>(const ExponentVector&, const ExponentVector&) = default;

 private:
  std::vector<Exponent> exps_;
};

/// Componentwise a <= b, i.e. x^a divides x^b.
bool divides(const ExponentVector& a, const ExponentVector& b);
Degree total_degree(const ExponentVector& a) noexcept;
ExponentVector operator+(const ExponentVector& a, const ExponentVector& b);
ExponentVector lcm(const ExponentVector& a, const ExponentVector& b);
/// b - a; requires divides(a, b).
ExponentVector quotient(const ExponentVector& b, const ExponentVector& a);

/// All exponent vectors of length m with total degree <= max_degree, in
/// descending structural (lexicographic) order.
std::vector<ExponentVector> exponents_up_to(std::size_t m, Degree max_degree);

enum class OrderKind { lex, deglex };

/// Admissible monomial order with variable precedence x1 > x2 > ... > xm.
class MonomialOrder {
 public:
  constexpr explicit MonomialOrder(OrderKind kind) noexcept : kind_(kind) {}

  static constexpr MonomialOrder lex() noexcept { return MonomialOrder(OrderKind::lex); }
  static constexpr MonomialOrder deglex() noexcept { return MonomialOrder(OrderKind::deglex); }
  /// Accepts "lex" or "deglex"; throws InvalidInputError otherwise.
  static MonomialOrder parse(std::string_view name);

  constexpr OrderKind kind() const noexcept { return kind_; }
  constexpr bool graded() const noexcept { return kind_ == OrderKind::deglex; }
  std::string_view name() const noexcept;

  std::strong_ordering compare(const ExponentVector& a, const ExponentVector& b) const;
  bool less(const ExponentVector& a, const ExponentVector& b) const { return compare(a, b) < 0; }

  friend constexpr bool operator==(MonomialOrder, MonomialOrder) = default;

 private:
  OrderKind kind_;
};

std::strong_ordering compare(MonomialOrder order, const ExponentVector& a, const ExponentVector& b);

/// Strict-weak-ordering adaptor so containers can be keyed by a monomial order.
struct OrderLess {
  MonomialOrder order;
  bool operator()(const ExponentVector& a, const ExponentVector& b) const {
    return order.compare(a, b) < 0;
  }
};

struct Term {
  ExponentVector exps;
  Rational coeff;

  friend bool operator==(const Term&, const Term&) = default;
};

/// Sparse polynomial over Q in a fixed number of variables.
///
/// Terms are kept sorted by the structural exponent order with no zero
/// coefficients, so equality is structural and a single value serves every
/// monomial order.
class Polynomial {
 public:
  explicit Polynomial(std::size_t ambient = 1) : ambient_(ambient) {}
  /// Canonicalizes: duplicate exponents are summed, zero coefficients dropped.
  Polynomial(std::size_t ambient, std::vector<Term> terms);

  static Polynomial constant(std::size_t ambient, const Rational& c);
  static Polynomial monomial(const ExponentVector& exps, const Rational& c = 1);
  /// x_index with index in 1..ambient.
  static Polynomial variable(std::size_t ambient, std::size_t index);

  std::size_t ambient() const noexcept { return ambient_; }
  bool is_zero() const noexcept { return terms_.empty(); }
  std::size_t size() const noexcept { return terms_.size(); }
  std::span<const Term> terms() const noexcept { return terms_; }
  Rational coefficient(const ExponentVector& exps) const;

  /// Maximum total degree of the support; throws ZeroPolynomialError on 0.
  Degree degree() const;

  /// Terms sorted by `order`, greatest first.
  std::vector<Term> terms_descending(MonomialOrder order) const;

  Polynomial operator-() const;
  Polynomial& operator+=(const Polynomial& rhs);
  Polynomial& operator-=(const Polynomial& rhs);

  friend Polynomial operator+(Polynomial lhs, const Polynomial& rhs) { return lhs += rhs; }
  friend Polynomial operator-(Polynomial lhs, const Polynomial& rhs) { return lhs -= rhs; }
  friend Polynomial operator*(const Polynomial& lhs, const Polynomial& rhs);
  friend bool operator==(const Polynomial&, const Polynomial&) = default;

 private:
  void combine(const Polynomial& rhs, int sign);

  std::size_t ambient_;
  std::vector<Term> terms_;
};

Polynomial add(const Polynomial& p, const Polynomial& q);
Polynomial mul(const Polynomial& p, const Polynomial& q);
Polynomial scale(const Polynomial& p, const Rational& c);
/// c * x^a * p
Polynomial monomial_mul(const Polynomial& p, const ExponentVector& a, const Rational& c);
Degree degree(const Polynomial& p);

struct LeadingTerm {
  ExponentVector exps;
  Rational coeff;
};

/// Greatest support element under `order`; throws ZeroPolynomialError on 0.
LeadingTerm leading_term(const Polynomial& p, MonomialOrder order);
ExponentVector leading_monomial(const Polynomial& p, MonomialOrder order);

/// Structural total order on polynomials (size, then terms), used to merge
/// independently computed sets deterministically.
bool structural_less(const Polynomial& a, const Polynomial& b);

/// Throws DimensionError unless every polynomial lives in `ambient` variables.
void require_ambient(std::span<const Polynomial> polys, std::size_t ambient);

}  // namespace chainbound
