#pragma once

#include <span>
#include <vector>

#include "chainbound/ring.hpp"

namespace chainbound {

/// f = sum quotients[i] * divisors[i] + remainder, with the remainder reduced.
struct DivisionResult {
  std::vector<Polynomial> quotients;
  Polynomial remainder;
};

/// Multivariable division of `f` by `divisors`.
///
/// Works top-down through the support of f: the greatest remaining monomial
/// is cancelled by the lowest-index divisor whose leading monomial divides it,
/// or moved to the remainder when no such divisor exists. Cancellation only
/// touches smaller monomials, so this always reduces the globally greatest
/// reducible monomial and leaves no support element of the remainder
/// divisible by any leading monomial.
///
/// Throws InvalidDivisorError on a zero divisor and DimensionError on an
/// ambient mismatch.
DivisionResult reduce(const Polynomial& f, std::span<const Polynomial> divisors, MonomialOrder order);

/// True iff no divisor's leading monomial divides a support element of `p`.
bool is_reduced(const Polynomial& p, std::span<const Polynomial> divisors, MonomialOrder order);

}  // namespace chainbound
