#include "chainbound/antichain.hpp"

#include <algorithm>
#include <string>

#include "chainbound/division.hpp"
#include "chainbound/groebner.hpp"
#include "chainbound/membership.hpp"

namespace chainbound {

namespace {

void require_uniform(std::span<const ExponentVector> seq) {
  for (const auto& e : seq) {
    if (e.size() != seq.front().size()) throw DimensionError("exponent vectors of different lengths in a sequence");
  }
}

class AntichainSearch {
 public:
  AntichainSearch(std::vector<ExponentVector> candidates, std::vector<Degree> caps, std::uint64_t budget)
      : cand_(std::move(candidates)), caps_(std::move(caps)), budget_(budget), alive_(cand_.size(), true),
        alive_count_(cand_.size()) {
    degrees_.reserve(cand_.size());
    for (const auto& c : cand_) degrees_.push_back(c.total_degree());
  }

  void run() { visit(); }
  const std::vector<std::size_t>& best() const { return best_; }
  std::uint64_t nodes() const { return nodes_; }

  AntichainWitness witness(const std::vector<std::size_t>& picks) const {
    AntichainWitness w;
    for (auto idx : picks) w.elements.push_back(cand_[idx]);
    return w;
  }

 private:
  void visit() {
    if (++nodes_ > budget_) {
      throw SearchBudgetExceeded("antichain search exceeded " + std::to_string(budget_) + " nodes", witness(best_));
    }
    if (chosen_.size() > best_.size()) best_ = chosen_;
    if (best_.size() == cand_.size()) return;
    const std::size_t position = chosen_.size();  // 0-based slot being filled
    for (std::size_t c = 0; c < cand_.size(); ++c) {
      if (chosen_.size() + alive_count_ <= best_.size() || best_.size() == cand_.size()) return;
      if (!alive_[c] || degrees_[c] > caps_[position]) continue;

      std::vector<std::size_t> killed;
      for (std::size_t x = 0; x < cand_.size(); ++x) {
        if (alive_[x] && divides(cand_[c], cand_[x])) {
          alive_[x] = false;
          killed.push_back(x);
        }
      }
      alive_count_ -= killed.size();
      chosen_.push_back(c);
      visit();
      chosen_.pop_back();
      for (auto x : killed) alive_[x] = true;
      alive_count_ += killed.size();
    }
  }

  std::vector<ExponentVector> cand_;
  std::vector<Degree> degrees_;
  std::vector<Degree> caps_;
  std::uint64_t budget_;
  std::vector<bool> alive_;
  std::size_t alive_count_;
  std::vector<std::size_t> chosen_;
  std::vector<std::size_t> best_;
  std::uint64_t nodes_ = 0;
};

Degree max_generator_degree(const std::vector<Polynomial>& gens) {
  Degree d = 0;
  for (const auto& g : gens) d = std::max(d, g.degree());
  return d;
}

}  // namespace

bool is_antichain(std::span<const ExponentVector> seq) {
  require_uniform(seq);
  for (std::size_t j = 1; j < seq.size(); ++j) {
    for (std::size_t i = 0; i < j; ++i) {
      if (divides(seq[i], seq[j])) return false;
    }
  }
  return true;
}

bool is_f_bounded(std::span<const ExponentVector> seq, const DegreeFunction& f) {
  require_uniform(seq);
  BudgetMeter meter;
  for (std::size_t i = 0; i < seq.size(); ++i) {
    if (Natural(static_cast<unsigned long>(seq[i].total_degree())) > f(Natural(static_cast<unsigned long>(i + 1)), meter)) {
      return false;
    }
  }
  return true;
}

bool is_f_beta_bounded(std::span<const ExponentVector> seq, const DegreeFunction& f, std::span<const Natural> beta) {
  if (!is_f_bounded(seq, f)) return false;
  for (const auto& e : seq) {
    if (beta.size() > e.size()) throw DimensionError("beta is longer than the exponent vectors");
    for (std::size_t j = 0; j < beta.size(); ++j) {
      if (Natural(static_cast<unsigned long>(e[j])) > beta[j]) return false;
    }
  }
  return true;
}

bool escapes_monomial_ideals(std::span<const ExponentVector> seq) {
  require_uniform(seq);
  std::vector<Polynomial> generators;
  for (std::size_t i = 0; i < seq.size(); ++i) {
    const auto mono = Polynomial::monomial(seq[i]);
    if (!generators.empty() && reduce(mono, generators, MonomialOrder::deglex()).remainder.is_zero()) return false;
    generators.push_back(mono);
  }
  return true;
}

AntichainSearchResult longest_f_bounded_antichain(std::size_t m, const DegreeFunction& f,
                                                  std::uint64_t search_budget) {
  if (m == 0) throw DimensionError("antichain search needs m >= 1");
  BudgetMeter meter;
  auto too_large = [&](const Natural& degree) {
    return SearchBudgetExceeded("candidate universe for degree " + summarize(degree) + " exceeds the search budget of " +
                                    std::to_string(search_budget),
                                {});
  };

  // Any antichain places its first U entries inside {|a| <= f(U)}; at the
  // fixpoint D = f(U(D)) that set has exactly U elements, so nothing is longer.
  Natural degree = f(1, meter);
  std::uint64_t universe = 0;
  while (true) {
    if (!degree.fits_ulong_p()) throw too_large(degree);
    universe = monomial_count(m, degree.get_ui());
    if (universe > search_budget) throw too_large(degree);
    const Natural next = f(Natural(static_cast<unsigned long>(universe)), meter);
    if (next == degree) break;
    degree = next;
  }

  std::vector<Degree> caps;
  caps.reserve(universe);
  for (std::uint64_t p = 1; p <= universe; ++p) {
    caps.push_back(f(Natural(static_cast<unsigned long>(p)), meter).get_ui());
  }

  AntichainSearch search(exponents_up_to(m, degree.get_ui()), std::move(caps), search_budget);
  search.run();
  AntichainSearchResult result;
  result.witness = search.witness(search.best());
  result.length = result.witness.length();
  result.nodes = search.nodes();
  result.universe_degree = degree;
  result.universe_size = universe;
  return result;
}

ChainAntichainResult chain_to_antichain(const IdealChainInput& input) {
  const auto order = input.order;
  if (!order.graded()) {
    throw OrderNotGradedError("chain-to-antichain needs a graded order, got " + std::string(order.name()));
  }
  if (input.stages.empty()) throw InvalidInputError("chain has no stages");
  const std::size_t m = input.stages.front().empty() ? 0 : input.stages.front().front().ambient();
  for (std::size_t j = 0; j < input.stages.size(); ++j) {
    const auto& stage = input.stages[j];
    if (stage.empty()) throw InvalidInputError("stage " + std::to_string(j + 1) + " has no generators");
    for (const auto& g : stage) {
      if (g.is_zero()) throw InvalidInputError("stage " + std::to_string(j + 1) + " has a zero generator");
    }
    require_ambient(stage, m);
  }

  for (std::size_t j = 1; j < input.stages.size(); ++j) {
    const auto& previous = input.stages[j - 1];
    const auto& current = input.stages[j];
    const auto previous_basis = groebner_basis(previous, order);
    const auto current_basis = groebner_basis(current, order);
    for (const auto& g : previous) {
      if (!reduce(g, current_basis, order).remainder.is_zero()) {
        throw ChainNotStrictError("stage " + std::to_string(j) + " is not contained in stage " + std::to_string(j + 1),
                                  j + 1);
      }
    }
    const bool grows = std::any_of(current.begin(), current.end(), [&](const Polynomial& g) {
      return !reduce(g, previous_basis, order).remainder.is_zero();
    });
    if (!grows) {
      throw ChainNotStrictError("stage " + std::to_string(j + 1) + " generates the same ideal as stage " +
                                    std::to_string(j),
                                j + 1);
    }
  }

  ChainAntichainResult result;
  for (std::size_t j = 0; j < input.stages.size(); ++j) {
    const auto& stage = input.stages[j];
    result.stage_degrees.push_back(max_generator_degree(stage));
    if (j == 0) {
      result.selected.push_back(stage.front());
      result.reduced.push_back(stage.front());
      result.witness.elements.push_back(leading_monomial(stage.front(), order));
      continue;
    }
    // <h_1, ..., h_{j-1}> = <H_{j-1}>
    const auto basis = groebner_basis(result.reduced, order);
    auto pick = std::find_if(stage.begin(), stage.end(), [&](const Polynomial& g) {
      return !reduce(g, basis, order).remainder.is_zero();
    });
    if (pick == stage.end()) {
      throw ChainNotStrictError("no generator of stage " + std::to_string(j + 1) + " escapes the selected ones", j + 1);
    }
    auto remainder = reduce(*pick, result.reduced, order).remainder;
    result.witness.elements.push_back(leading_monomial(remainder, order));
    result.selected.push_back(*pick);
    result.reduced.push_back(std::move(remainder));
  }
  return result;
}

}  // namespace chainbound
