#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "chainbound/bounds.hpp"
#include "chainbound/ring.hpp"

namespace chainbound {

enum class BoundProvenance { trace_derived, gamma };

/// Outcome of an ideal-membership query. When `member` holds,
/// g == sum cofactors[i] * F[i] exactly.
struct MembershipCertificate {
  bool member = false;
  std::vector<Polynomial> cofactors;
  Degree max_cofactor_degree = 0;
  /// (3^r - 1) d + deg(g) for the Buchberger run that produced the cofactors.
  Natural bound_used;
  BoundProvenance provenance = BoundProvenance::trace_derived;
  std::size_t trace_r = 0;
  Degree d = 0;
};

/// Decides g in <F> by reducing g modulo the batch-Buchberger basis of F and
/// assembles cofactors over F from the division quotients and the basis
/// certificates. `d` defaults to the largest input degree; a larger value may
/// be supplied.
///
/// Throws OrderNotGradedError for non-graded orders and InvalidInputError
/// for empty F or zero generators.
MembershipCertificate membership(const Polynomial& g, std::span<const Polynomial> inputs, MonomialOrder order,
                                 std::optional<Degree> d = std::nullopt);

/// g in <F>, without certificates.
bool ideal_contains(std::span<const Polynomial> generators, const Polynomial& g, MonomialOrder order);

struct CertificateBoundReport {
  bool identity_ok = false;
  Degree observed_degree = 0;
  Natural trace_bound;
  bool trace_bound_ok = false;
  bool gamma_evaluated = false;
  Natural gamma_value;
  bool gamma_ok = false;
  std::string notice;
  bool pass = false;
};

/// Checks a member certificate against the degree bound
/// gamma_{m,d}(deg g) = (3^(B(m, n -> 3^n d) - 1) - 1) d + deg g.
///
/// When gamma does not evaluate within `budget`, falls back to the
/// trace-derived bound (3^r - 1) d + deg g (which gamma dominates) and says so
/// in `notice`. The certificate identity is always re-verified.
CertificateBoundReport verify_cor45(const MembershipCertificate& cert, const Polynomial& g, std::span<const Polynomial> inputs,
                         std::size_t m, Degree d, const BoundBudget& budget);

/// Exact search for cofactors of degree <= degree_cap with g = sum h_i F[i],
/// posed as one linear system over Q on the monomial bases. Throws
/// BudgetError when the system would have more than `max_unknowns` unknowns.
bool brute_force_membership(const Polynomial& g, std::span<const Polynomial> inputs, Degree degree_cap,
                            std::size_t max_unknowns = 20'000);

/// Number of exponent vectors in m variables of total degree <= d.
std::uint64_t monomial_count(std::size_t m, Degree d);

}  // namespace chainbound
