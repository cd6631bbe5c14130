#pragma once

#include <cstddef>
#include <span>
#include <string>
#include <vector>

#include "chainbound/ring.hpp"

namespace chainbound {

/// A polynomial together with cofactors over the original input F:
/// poly == sum cofactors[i] * F[i].
struct CertifiedPolynomial {
  Polynomial poly;
  std::vector<Polynomial> cofactors;
};

/// Recomputes sum cofactors[i] * inputs[i].
Polynomial combine(std::span<const Polynomial> cofactors, std::span<const Polynomial> inputs);
bool verify_certificate(const CertifiedPolynomial& c, std::span<const Polynomial> inputs);

/// Largest degree among the nonzero cofactors (0 when all vanish).
Degree max_cofactor_degree(std::span<const Polynomial> cofactors);

/// Minimal generators of the monomial ideal spanned by `monomials`, sorted
/// structurally.
std::vector<ExponentVector> minimal_generators(std::vector<ExponentVector> monomials);

/// Record of a batch Buchberger run: B_0 = F, B_{i+1} = B_i u S_{B_i}.
///
/// Stages are cumulative, so the run is stored as one insertion-ordered
/// element list plus the size of each stage.
struct BuchbergerTrace {
  std::vector<Polynomial> input;
  MonomialOrder order = MonomialOrder::deglex();
  std::vector<CertifiedPolynomial> elements;
  std::vector<std::size_t> stage_sizes;
  /// Minimal generators of <LT(B_i)> for each stage.
  std::vector<std::vector<ExponentVector>> lt_generators;

  /// Index of the final stage, which is a Groebner basis of <F>.
  std::size_t r() const noexcept { return stage_sizes.size() - 1; }
  std::span<const CertifiedPolynomial> stage(std::size_t i) const;
  std::vector<Polynomial> stage_polynomials(std::size_t i) const;
  std::vector<Polynomial> basis() const { return stage_polynomials(r()); }
};

/// (x^a / lt(f)) * f - (x^a / lt(g)) * g with x^a = lcm(lm f, lm g).
Polynomial s_polynomial(const Polynomial& f, const Polynomial& g, MonomialOrder order);

/// Nonzero reductions modulo B of S(b_i, b_j) over unordered pairs i < j,
/// in pair order with structural duplicates dropped.
std::vector<Polynomial> s_reductions(std::span<const Polynomial> basis, MonomialOrder order);

/// Runs batch Buchberger to its fixpoint, certifying every element over F.
/// Throws InvalidInputError on an empty input or a zero polynomial.
BuchbergerTrace buchberger_trace(std::span<const Polynomial> inputs, MonomialOrder order);

/// Final stage of the same batch run without certificate bookkeeping.
std::vector<Polynomial> groebner_basis(std::span<const Polynomial> inputs, MonomialOrder order);

/// Every pairwise S-polynomial reduces to zero modulo G.
bool is_groebner(std::span<const Polynomial> basis, MonomialOrder order);

struct StageBoundEntry {
  std::size_t stage = 0;
  Degree max_cofactor_degree = 0;
  Degree max_lead_degree = 0;
  Natural cofactor_bound;  // (3^n - 1) d
  Natural lead_bound;      // 3^n d
  bool cofactors_ok = true;
  bool leads_ok = true;
  bool certificates_ok = true;
};

struct StageBoundReport {
  Degree d = 0;
  std::vector<StageBoundEntry> stages;
  bool pass = true;
};

/// Checks per-stage degree bounds on certificates and leading terms:
/// cofactors of B_n elements have degree <= (3^n - 1) d and leading terms
/// degree <= 3^n d, re-verifying every certificate identity.
///
/// Throws OrderNotGradedError for lex traces and PreconditionError when d is
/// below an input degree.
StageBoundReport verify_prop43(const BuchbergerTrace& trace, Degree d);

/// True iff for every i < r some element added at stage i+1 has a leading
/// monomial outside <LT(B_i)>.
bool lt_chain_strictly_ascends(const BuchbergerTrace& trace);

}  // namespace chainbound
