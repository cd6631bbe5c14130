#include "chainbound/bounds.hpp"

#include <algorithm>
#include <cctype>
#include <cmath>
#include <mutex>
#include <string_view>

namespace chainbound {

namespace {

constexpr double kLog2Of3 = 1.5849625007211562;

std::string to_dec(const Natural& v) { return v.get_str(); }

std::uint64_t bit_length(const Natural& v) {
  return sgn(v) == 0 ? 0 : static_cast<std::uint64_t>(mpz_sizeinbase(v.get_mpz_t(), 2));
}

void require_positive_argument(const Natural& n) {
  if (n < 1) throw PreconditionError("degree functions are defined on n >= 1, got " + to_dec(n));
}

class ConstantNode final : public DegreeFunction::Node {
 public:
  explicit ConstantNode(Natural c) : c_(std::move(c)) {}
  Natural eval(const Natural& n, BudgetMeter&) const override {
    require_positive_argument(n);
    return c_;
  }
  std::string describe() const override { return "const:" + to_dec(c_); }
  const Natural* constant_value() const override { return &c_; }

 private:
  Natural c_;
};

class IdentityNode final : public DegreeFunction::Node {
 public:
  Natural eval(const Natural& n, BudgetMeter& meter) const override {
    require_positive_argument(n);
    return meter.check(n);
  }
  std::string describe() const override { return "id"; }
};

/// Backs both table and running_max: `values` is already non-decreasing.
class TableNode final : public DegreeFunction::Node {
 public:
  TableNode(std::vector<Natural> values, std::string label) : values_(std::move(values)), label_(std::move(label)) {}
  Natural eval(const Natural& n, BudgetMeter&) const override {
    require_positive_argument(n);
    if (n > values_.size()) return values_.back();
    return values_[n.get_ui() - 1];
  }
  std::string describe() const override { return label_; }
  const Natural* constant_value() const override {
    return values_.front() == values_.back() ? &values_.front() : nullptr;
  }
  const std::vector<Natural>& values() const { return values_; }

 private:
  std::vector<Natural> values_;
  std::string label_;
};

class GeometricNode final : public DegreeFunction::Node {
 public:
  explicit GeometricNode(Natural d) : d_(std::move(d)) {}
  Natural eval(const Natural& n, BudgetMeter& meter) const override {
    require_positive_argument(n);
    meter.require_pow3(n);
    meter.step();
    Natural out;
    mpz_ui_pow_ui(out.get_mpz_t(), 3, n.get_ui());
    out *= d_;
    return meter.check(out);
  }
  std::string describe() const override { return "geom:" + to_dec(d_); }

 private:
  Natural d_;
};

class ShiftNode final : public DegreeFunction::Node {
 public:
  ShiftNode(Natural s, DegreeFunction f) : s_(std::move(s)), f_(std::move(f)) {}
  Natural eval(const Natural& n, BudgetMeter& meter) const override {
    require_positive_argument(n);
    return f_(s_ + n, meter);
  }
  std::string describe() const override { return "shift(" + summarize(s_) + ", " + f_.describe() + ")"; }
  const Natural& offset() const { return s_; }
  const DegreeFunction& inner() const { return f_; }

 private:
  Natural s_;
  DegreeFunction f_;
};

class ComposeNode final : public DegreeFunction::Node {
 public:
  ComposeNode(DegreeFunction outer, DegreeFunction inner) : outer_(std::move(outer)), inner_(std::move(inner)) {}
  Natural eval(const Natural& n, BudgetMeter& meter) const override {
    return outer_(inner_(n, meter), meter);
  }
  std::string describe() const override { return "compose(" + outer_.describe() + ", " + inner_.describe() + ")"; }

 private:
  DegreeFunction outer_;
  DegreeFunction inner_;
};

/// The recursively defined g of cf, memoized as the prefix g(1), g(2), ...
class RecursiveNode final : public DegreeFunction::Node {
 public:
  RecursiveNode(std::size_t m, std::size_t k, DegreeFunction f, std::vector<Natural> beta)
      : m_(m), k_(k), f_(std::move(f)), beta_(std::move(beta)), memo_{Natural(1)} {}

  Natural eval(const Natural& n, BudgetMeter& meter) const override {
    require_positive_argument(n);
    std::size_t known;
    Natural current;
    {
      std::lock_guard lock(mutex_);
      if (n <= memo_.size()) return memo_[n.get_ui() - 1];
      known = memo_.size();
      current = memo_.back();
    }
    try {
      if (!n.fits_ulong_p() || n.get_ui() - known > meter.steps_left()) {
        throw BudgetExceeded(BudgetExceeded::Reason::steps,
                             "recursion needs g(" + summarize(n) + "), more steps than the budget allows",
                             meter.steps_used());
      }
      const std::uint64_t target = n.get_ui();
      for (std::uint64_t idx = known; idx < target; ++idx) {
        meter.step();
        const Natural fg = f_(current, meter);
        std::vector<Natural> extended = beta_;
        extended.push_back(fg);
        const Natural inner = bmk(m_, k_ + 1, DegreeFunction::shift(current, f_), extended, meter);
        Natural next = 1 + current + inner;
        meter.check(next);
        {
          std::lock_guard lock(mutex_);
          if (memo_.size() == idx) memo_.push_back(next);
        }
        current = std::move(next);
      }
      return current;
    } catch (BudgetExceeded& e) {
      std::lock_guard lock(mutex_);
      e.add_progress(RecursionProgress{m_, k_, memo_.size(), memo_.back()});
      throw;
    }
  }

  std::string describe() const override {
    return "cf(m=" + std::to_string(m_) + ", k=" + std::to_string(k_) + ", " + f_.describe() + ")";
  }

 private:
  std::size_t m_;
  std::size_t k_;
  DegreeFunction f_;
  std::vector<Natural> beta_;
  mutable std::mutex mutex_;
  mutable std::vector<Natural> memo_;
};

Natural parse_natural(std::string_view text) {
  if (text.empty() || !std::all_of(text.begin(), text.end(), [](unsigned char c) { return std::isdigit(c); })) {
    throw InvalidInputError("expected a natural number, got '" + std::string(text) + "'");
  }
  return Natural(std::string(text));
}

std::vector<Natural> parse_list(std::string_view text) {
  std::vector<Natural> out;
  std::size_t start = 0;
  while (true) {
    const auto comma = text.find(',', start);
    auto item = text.substr(start, comma == std::string_view::npos ? std::string_view::npos : comma - start);
    while (!item.empty() && std::isspace(static_cast<unsigned char>(item.front()))) item.remove_prefix(1);
    while (!item.empty() && std::isspace(static_cast<unsigned char>(item.back()))) item.remove_suffix(1);
    out.push_back(parse_natural(item));
    if (comma == std::string_view::npos) break;
    start = comma + 1;
  }
  return out;
}

void require_codomain(std::span<const Natural> values) {
  if (values.empty()) throw PreconditionError("a table-backed degree function needs at least one value");
  for (const auto& v : values) {
    if (v < 1) throw PreconditionError("degree functions take values >= 1, got " + to_dec(v));
  }
}

}  // namespace

BudgetMeter::BudgetMeter(BoundBudget budget) : budget_(budget) {
  if (budget_.max_recursion_steps == 0 || budget_.max_value_bits == 0) {
    throw PreconditionError("budget limits must be positive");
  }
}

void BudgetMeter::step(std::uint64_t count) {
  if (count > steps_left()) {
    steps_ = budget_.max_recursion_steps;
    throw BudgetExceeded(BudgetExceeded::Reason::steps,
                         "recursion step budget of " + std::to_string(budget_.max_recursion_steps) + " exhausted",
                         steps_);
  }
  steps_ += count;
}

const Natural& BudgetMeter::check(const Natural& value) const {
  if (bit_length(value) > budget_.max_value_bits) {
    throw BudgetExceeded(BudgetExceeded::Reason::bits,
                         "value of " + std::to_string(bit_length(value)) + " bits exceeds the " +
                             std::to_string(budget_.max_value_bits) + "-bit budget",
                         steps_);
  }
  return value;
}

void BudgetMeter::require_pow3(const Natural& exponent) const {
  const bool too_big = !exponent.fits_ulong_p() ||
                       static_cast<double>(exponent.get_ui()) * kLog2Of3 > static_cast<double>(budget_.max_value_bits);
  if (too_big) {
    throw BudgetExceeded(BudgetExceeded::Reason::bits,
                         "3^" + summarize(exponent) + " exceeds the " + std::to_string(budget_.max_value_bits) +
                             "-bit budget",
                         steps_);
  }
}

DegreeFunction::DegreeFunction(std::shared_ptr<const Node> node) : node_(std::move(node)) {}

DegreeFunction DegreeFunction::constant(const Natural& c) {
  if (c < 1) throw PreconditionError("degree functions take values >= 1, got " + to_dec(c));
  return DegreeFunction(std::make_shared<ConstantNode>(c));
}

DegreeFunction DegreeFunction::identity() { return DegreeFunction(std::make_shared<IdentityNode>()); }

DegreeFunction DegreeFunction::table(std::vector<Natural> values) {
  require_codomain(values);
  for (std::size_t i = 1; i < values.size(); ++i) {
    if (values[i] < values[i - 1]) {
      throw PreconditionError("table-backed degree function decreases at position " + std::to_string(i + 1) +
                              "; use the running-max adapter for non-monotone input");
    }
  }
  std::string label = "table:";
  for (std::size_t i = 0; i < values.size(); ++i) label += (i ? "," : "") + to_dec(values[i]);
  return DegreeFunction(std::make_shared<TableNode>(std::move(values), std::move(label)));
}

DegreeFunction DegreeFunction::running_max(std::vector<Natural> raw) {
  require_codomain(raw);
  std::string label = "running_max(table:";
  for (std::size_t i = 0; i < raw.size(); ++i) label += (i ? "," : "") + to_dec(raw[i]);
  label += ")";
  for (std::size_t i = 1; i < raw.size(); ++i) raw[i] = std::max(raw[i], raw[i - 1]);
  return DegreeFunction(std::make_shared<TableNode>(std::move(raw), std::move(label)));
}

DegreeFunction DegreeFunction::geometric(const Natural& d) {
  if (d < 1) throw PreconditionError("geometric degree function needs d >= 1");
  return DegreeFunction(std::make_shared<GeometricNode>(d));
}

DegreeFunction DegreeFunction::shift(const Natural& s, const DegreeFunction& f) {
  if (sgn(s) == 0) return f;
  if (f.node_->constant_value()) return f;
  if (const auto* inner = dynamic_cast<const ShiftNode*>(f.node_.get())) {
    return DegreeFunction(std::make_shared<ShiftNode>(s + inner->offset(), inner->inner()));
  }
  if (const auto* tab = dynamic_cast<const TableNode*>(f.node_.get()); tab && s >= tab->values().size()) {
    return constant(tab->values().back());
  }
  return DegreeFunction(std::make_shared<ShiftNode>(s, f));
}

DegreeFunction DegreeFunction::compose(const DegreeFunction& outer, const DegreeFunction& inner) {
  if (outer.node_->constant_value()) return outer;
  return DegreeFunction(std::make_shared<ComposeNode>(outer, inner));
}

Natural DegreeFunction::operator()(const Natural& n, BudgetMeter& meter) const { return node_->eval(n, meter); }

Natural DegreeFunction::at(std::uint64_t n) const {
  BudgetMeter meter;
  return (*this)(Natural(static_cast<unsigned long>(n)), meter);
}

std::string DegreeFunction::describe() const { return node_->describe(); }

Natural b1(const DegreeFunction& f, BudgetMeter& meter) { return meter.check(f(1, meter) + 1); }

Natural b1(const DegreeFunction& f) {
  BudgetMeter meter;
  return b1(f, meter);
}

Natural bmm(std::span<const Natural> beta) {
  if (beta.empty()) throw DimensionError("box bound needs at least one coordinate bound");
  Natural out = 1;
  for (const auto& b : beta) out *= b + 1;
  return out;
}

DegreeFunction cf(std::size_t m, std::size_t k, const DegreeFunction& f, std::vector<Natural> beta) {
  if (m < 2) throw PreconditionError("cf needs m >= 2");
  if (k + 1 > m) throw PreconditionError("cf needs k <= m - 1");
  if (beta.size() != k) throw DimensionError("cf needs beta of length k");
  return DegreeFunction(std::make_shared<RecursiveNode>(m, k, f, std::move(beta)));
}

Natural bmk(std::size_t m, std::size_t k, const DegreeFunction& f, std::span<const Natural> beta,
            BudgetMeter& meter) {
  if (m < 2) throw PreconditionError("bmk needs m >= 2");
  if (k > m) throw PreconditionError("bmk needs k <= m");
  if (beta.size() != k) throw DimensionError("bmk needs beta of length k");
  if (k == m) {
    meter.step();
    return meter.check(bmm(beta));
  }
  const auto g = cf(m, k, f, std::vector<Natural>(beta.begin(), beta.end()));
  const Natural inner = bound(m - 1, DegreeFunction::compose(f, g), meter);
  return g(inner + 1, meter);
}

Natural bmk(std::size_t m, std::size_t k, const DegreeFunction& f, std::span<const Natural> beta,
            const BoundBudget& budget) {
  BudgetMeter meter(budget);
  return bmk(m, k, f, beta, meter);
}

Natural bound(std::size_t m, const DegreeFunction& f, BudgetMeter& meter) {
  if (m < 1) throw PreconditionError("bound needs m >= 1");
  if (m == 1) return b1(f, meter);
  return bmk(m, 0, f, {}, meter);
}

Natural bound(std::size_t m, const DegreeFunction& f, const BoundBudget& budget) {
  BudgetMeter meter(budget);
  return bound(m, f, meter);
}

Natural chi(std::uint64_t n, const Natural& d) {
  if (d < 1) throw PreconditionError("chi needs d >= 1");
  Natural p;
  mpz_ui_pow_ui(p.get_mpz_t(), 3, n);
  return (p - 1) * d;
}

Natural gamma(std::size_t m, const Natural& d, const Natural& i, const BoundBudget& budget) {
  if (m < 1) throw PreconditionError("gamma needs m >= 1");
  if (d < 1) throw PreconditionError("gamma needs d >= 1");
  BudgetMeter meter(budget);
  const Natural b = bound(m, DegreeFunction::geometric(d), meter);
  const Natural exponent = b - 1;
  meter.require_pow3(exponent);
  Natural p;
  mpz_ui_pow_ui(p.get_mpz_t(), 3, exponent.get_ui());
  return meter.check((p - 1) * d + i);
}

DegreeFunction parse_degree_function(std::string_view text, bool running_max) {
  const auto colon = text.find(':');
  const auto kind = text.substr(0, colon);
  const auto arg = colon == std::string_view::npos ? std::string_view{} : text.substr(colon + 1);
  if (kind == "id" && colon == std::string_view::npos) return DegreeFunction::identity();
  if (colon == std::string_view::npos) {
    throw InvalidInputError("degree function must look like const:C, table:a1,a2,... or geom:D");
  }
  if (kind == "const") return DegreeFunction::constant(parse_natural(arg));
  if (kind == "geom") return DegreeFunction::geometric(parse_natural(arg));
  if (kind == "table") {
    auto values = parse_list(arg);
    return running_max ? DegreeFunction::running_max(std::move(values)) : DegreeFunction::table(std::move(values));
  }
  throw InvalidInputError("unknown degree function kind '" + std::string(kind) + "'");
}

std::string summarize(const Natural& v) {
  const auto digits = mpz_sizeinbase(v.get_mpz_t(), 10);
  if (digits <= 60) return to_dec(v);
  return "<" + std::to_string(bit_length(v)) + "-bit number>";
}

}  // namespace chainbound
