#pragma once

#include <cstddef>
#include <cstdint>
#include <memory>
#include <span>
#include <string>
#include <vector>

#include "chainbound/errors.hpp"
#include "chainbound/ring.hpp"

namespace chainbound {

/// Caps on how much work a bound evaluation may do before giving up.
struct BoundBudget {
  std::uint64_t max_recursion_steps = 1'000'000;
  std::uint64_t max_value_bits = 100'000;
};

/// How far one recursively defined function got before the budget ran out.
struct RecursionProgress {
  std::size_t m = 0;
  std::size_t k = 0;
  std::uint64_t evaluated_up_to = 0;  // largest n with g(n) known
  Natural last_value;                 // g(evaluated_up_to)
};

class BudgetExceeded : public BudgetError {
 public:
  enum class Reason { steps, bits, search };

  BudgetExceeded(Reason reason, const std::string& what, std::uint64_t steps_used)
      : BudgetError(what), reason_(reason), steps_used_(steps_used) {}

  Reason reason() const noexcept { return reason_; }
  std::uint64_t steps_used() const noexcept { return steps_used_; }
  /// Innermost recursion first.
  const std::vector<RecursionProgress>& progress() const noexcept { return progress_; }
  void add_progress(RecursionProgress p) { progress_.push_back(std::move(p)); }

 private:
  Reason reason_;
  std::uint64_t steps_used_;
  std::vector<RecursionProgress> progress_;
};

/// Tracks consumption against a BoundBudget for one top-level evaluation.
class BudgetMeter {
 public:
  explicit BudgetMeter(BoundBudget budget = {});

  const BoundBudget& budget() const noexcept { return budget_; }
  std::uint64_t steps_used() const noexcept { return steps_; }
  std::uint64_t steps_left() const noexcept { return budget_.max_recursion_steps - steps_; }

  void step(std::uint64_t count = 1);
  /// Throws if `value` needs more than max_value_bits bits.
  const Natural& check(const Natural& value) const;
  /// Throws unless 3^exponent fits in the bit budget.
  void require_pow3(const Natural& exponent) const;

 private:
  BoundBudget budget_;
  std::uint64_t steps_ = 0;
};

/// A non-decreasing function N1 -> N1, evaluated lazily and memoized.
///
/// Values are immutable handles to a shared construction tree; copying is
/// cheap. Evaluation takes a BudgetMeter because arguments demanded by the
/// bound recursion are only known at run time and can be astronomically large.
class DegreeFunction {
 public:
  class Node;

  static DegreeFunction constant(const Natural& c);
  /// n -> n
  static DegreeFunction identity();
  /// values[n-1] for n <= size, then the last value. Must be non-decreasing.
  static DegreeFunction table(std::vector<Natural> values);
  /// n -> max(raw[0..n-1]); raw may be any positive sequence, extended by its last value.
  static DegreeFunction running_max(std::vector<Natural> raw);
  /// n -> 3^n * d
  static DegreeFunction geometric(const Natural& d);
  /// n -> f(s + n)
  static DegreeFunction shift(const Natural& s, const DegreeFunction& f);
  /// n -> outer(inner(n))
  static DegreeFunction compose(const DegreeFunction& outer, const DegreeFunction& inner);

  explicit DegreeFunction(std::shared_ptr<const Node> node);

  Natural operator()(const Natural& n, BudgetMeter& meter) const;
  /// Convenience evaluation under a fresh default budget.
  Natural at(std::uint64_t n) const;

  std::string describe() const;
  const std::shared_ptr<const Node>& node() const noexcept { return node_; }

 private:
  std::shared_ptr<const Node> node_;
};

class DegreeFunction::Node {
 public:
  virtual ~Node() = default;
  virtual Natural eval(const Natural& n, BudgetMeter& meter) const = 0;
  virtual std::string describe() const = 0;
  /// Set for functions that are constant everywhere.
  virtual const Natural* constant_value() const { return nullptr; }
};

/// f(1) + 1
Natural b1(const DegreeFunction& f, BudgetMeter& meter);
Natural b1(const DegreeFunction& f);

/// prod (beta_i + 1); the bound for antichains confined to a box. Ignores f.
Natural bmm(std::span<const Natural> beta);

/// The helper g with g(1) = 1 and
/// g(n+1) = 1 + g(n) + B_m^{k+1}(shift(g(n), f), beta ++ f(g(n))).
/// Requires m >= 2, k <= m - 1, beta.size() == k.
DegreeFunction cf(std::size_t m, std::size_t k, const DegreeFunction& f, std::vector<Natural> beta);

/// B_m^k(f, beta) = g(B_{m-1}(f o g) + 1) with g = cf(m, k, f, beta);
/// delegates to bmm when k == m.
Natural bmk(std::size_t m, std::size_t k, const DegreeFunction& f, std::span<const Natural> beta,
            BudgetMeter& meter);
Natural bmk(std::size_t m, std::size_t k, const DegreeFunction& f, std::span<const Natural> beta,
            const BoundBudget& budget);

/// Bound on the length of f-bounded antichains in N^m.
Natural bound(std::size_t m, const DegreeFunction& f, BudgetMeter& meter);
Natural bound(std::size_t m, const DegreeFunction& f, const BoundBudget& budget);

/// (3^n - 1) d
Natural chi(std::uint64_t n, const Natural& d);

/// (3^(B - 1) - 1) d + i with B = bound(m, n -> 3^n d).
Natural gamma(std::size_t m, const Natural& d, const Natural& i, const BoundBudget& budget);

/// Parses "const:C", "table:a1,a2,...", "geom:D" (and "id").
/// With `running_max`, a table may be non-monotone and is wrapped accordingly.
DegreeFunction parse_degree_function(std::string_view text, bool running_max = false);

/// Short human-readable rendering; very large values are summarized by bit length.
std::string summarize(const Natural& v);

}  // namespace chainbound
