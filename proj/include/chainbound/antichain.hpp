#pragma once

#include <cstddef>
#include <cstdint>
#include <span>
#include <vector>

#include "chainbound/bounds.hpp"
#include "chainbound/errors.hpp"
#include "chainbound/ring.hpp"

namespace chainbound {

/// A sequence in N^m where no earlier element divides a later one.
struct AntichainWitness {
  std::vector<ExponentVector> elements;
  std::size_t length() const noexcept { return elements.size(); }
};

/// No earlier element componentwise-divides a later one.
bool is_antichain(std::span<const ExponentVector> seq);
/// |seq[i]| <= f(i + 1) for every position.
bool is_f_bounded(std::span<const ExponentVector> seq, const DegreeFunction& f);
/// f-bounded, and coordinate j of every element is <= beta[j] for j < beta.size().
bool is_f_beta_bounded(std::span<const ExponentVector> seq, const DegreeFunction& f, std::span<const Natural> beta);

/// x^{seq[i+1]} lies outside the monomial ideal <x^{seq[0]}, ..., x^{seq[i]}>
/// for every i, decided by dividing by the generating monomials.
bool escapes_monomial_ideals(std::span<const ExponentVector> seq);

struct AntichainSearchResult {
  std::size_t length = 0;
  AntichainWitness witness;
  std::uint64_t nodes = 0;
  /// Candidates are exactly the exponents of degree <= this value.
  Natural universe_degree;
  std::uint64_t universe_size = 0;
};

class SearchBudgetExceeded : public BudgetError {
 public:
  SearchBudgetExceeded(const std::string& what, AntichainWitness best)
      : BudgetError(what), best_(std::move(best)) {}
  const AntichainWitness& best_so_far() const noexcept { return best_; }

 private:
  AntichainWitness best_;
};

/// Exhaustive depth-first search for a longest f-bounded antichain in N^m.
///
/// Candidates are tried in descending lexicographic order and the first
/// longest sequence found is reported. The candidate universe is
/// {a : |a| <= D} where D = f(U) and U is the universe size at D, found by
/// iterating to a fixpoint. Throws SearchBudgetExceeded (carrying the best
/// witness) once more than `search_budget` nodes are visited or the universe
/// alone exceeds the budget.
AntichainSearchResult longest_f_bounded_antichain(std::size_t m, const DegreeFunction& f,
                                                  std::uint64_t search_budget);

/// Generators of each ideal in an ascending chain I_1 < I_2 < ... .
struct IdealChainInput {
  std::vector<std::vector<Polynomial>> stages;
  MonomialOrder order = MonomialOrder::deglex();
};

struct ChainAntichainResult {
  AntichainWitness witness;
  /// The chosen h_j, one per stage.
  std::vector<Polynomial> selected;
  /// H_t: h_1 followed by each h_j reduced modulo the earlier entries.
  std::vector<Polynomial> reduced;
  /// Largest generator degree of each stage.
  std::vector<Degree> stage_degrees;
};

/// Turns a strictly ascending chain of ideals into an antichain of the same
/// length whose i-th element has degree at most the i-th stage's generator
/// degree, by picking a new generator per stage and reducing it modulo the
/// previously reduced ones.
///
/// Throws OrderNotGradedError for non-graded orders, ChainNotStrictError when
/// a stage is not contained in the next or adds nothing new, and
/// InvalidInputError for empty stages or zero generators.
ChainAntichainResult chain_to_antichain(const IdealChainInput& input);

}  // namespace chainbound
