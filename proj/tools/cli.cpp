#include "cli.hpp"

#include <algorithm>
#include <fstream>
#include <functional>
#include <optional>
#include <sstream>
#include <stdexcept>

#include <CLI11.hpp>
#include <json.hpp>

#include "chainbound/antichain.hpp"
#include "chainbound/bounds.hpp"
#include "chainbound/division.hpp"
#include "chainbound/errors.hpp"
#include "chainbound/groebner.hpp"
#include "chainbound/membership.hpp"
#include "chainbound/poly_io.hpp"
#include "chainbound/ring.hpp"

#ifndef CHAINBOUND_VERSION
#define CHAINBOUND_VERSION "0.0.0"
#endif

namespace chainbound::cli {

namespace {

using json = nlohmann::ordered_json;

/// Raised while turning flags into typed inputs; maps to exit code 2.
class UsageError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

template <class Fn>
auto validated(Fn&& fn) -> decltype(fn()) {
  try {
    return fn();
  } catch (const Error& e) {
    throw UsageError(e.what());
  }
}

std::ifstream open_input(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw UsageError("cannot open " + path);
  return in;
}

std::string dec(const Natural& v) { return v.get_str(); }

json to_json(const std::vector<Polynomial>& polys, MonomialOrder order) {
  json out = json::array();
  for (const auto& p : polys) out.push_back(to_string(p, order));
  return out;
}

json to_json(const std::vector<ExponentVector>& seq) {
  json out = json::array();
  for (const auto& e : seq) out.push_back(e.values());
  return out;
}

std::string join_sequence(const std::vector<ExponentVector>& seq) {
  std::string out;
  for (std::size_t i = 0; i < seq.size(); ++i) {
    if (i) out += ";";
    out += to_string(seq[i]);
  }
  return out;
}

std::vector<Natural> parse_naturals(const std::string& text) {
  std::vector<Natural> out;
  std::stringstream ss(text);
  std::string item;
  while (std::getline(ss, item, ',')) {
    item.erase(std::remove_if(item.begin(), item.end(), ::isspace), item.end());
    Natural v;
    if (item.empty() || !std::all_of(item.begin(), item.end(), ::isdigit) || v.set_str(item, 10) != 0) {
      throw UsageError("expected a comma-separated list of naturals, got '" + text + "'");
    }
    out.push_back(v);
  }
  if (out.empty()) throw UsageError("empty list");
  return out;
}

/// Splits a flattened parse back into the shapes it came from.
std::vector<std::vector<Polynomial>> parse_grouped(const std::vector<std::vector<std::string>>& groups) {
  std::vector<std::string> flat;
  for (const auto& g : groups) flat.insert(flat.end(), g.begin(), g.end());
  auto polys = validated([&] { return parse_polynomials(flat); });
  std::vector<std::vector<Polynomial>> out;
  std::size_t at = 0;
  for (const auto& g : groups) {
    out.emplace_back(polys.begin() + at, polys.begin() + at + g.size());
    at += g.size();
  }
  return out;
}

std::vector<std::string> split_semicolons(const std::string& text) {
  std::vector<std::string> out;
  std::stringstream ss(text);
  std::string item;
  while (std::getline(ss, item, ';')) out.push_back(item);
  if (out.empty()) throw UsageError("expected at least one polynomial");
  return out;
}

struct Context {
  std::ostream& out;
  std::ostream& err;
  bool as_json = false;
};

void write_budget_report(Context& ctx, const std::string& command, const BudgetError& e) {
  json doc{{"command", command}, {"status", "budget_exhausted"}, {"message", e.what()}};
  std::ostringstream text;
  text << "budget exhausted: " << e.what() << "\n";
  if (const auto* be = dynamic_cast<const BudgetExceeded*>(&e)) {
    static constexpr const char* kReasons[] = {"steps", "bits", "search"};
    doc["reason"] = kReasons[static_cast<int>(be->reason())];
    doc["steps_used"] = be->steps_used();
    json progress = json::array();
    text << "steps used: " << be->steps_used() << "\n";
    for (const auto& p : be->progress()) {
      progress.push_back({{"m", p.m}, {"k", p.k}, {"evaluated_up_to", p.evaluated_up_to},
                          {"last_value", summarize(p.last_value)}});
      text << "  helper for B(m=" << p.m << ", k=" << p.k << "): known up to n=" << p.evaluated_up_to
           << ", last value " << summarize(p.last_value) << "\n";
    }
    doc["progress"] = progress;
  }
  if (const auto* se = dynamic_cast<const SearchBudgetExceeded*>(&e)) {
    doc["best_so_far"] = to_json(se->best_so_far().elements);
    text << "best so far: length " << se->best_so_far().length() << " "
         << join_sequence(se->best_so_far().elements) << "\n";
  }
  if (ctx.as_json) {
    ctx.out << doc.dump(2) << "\n";
  } else {
    ctx.out << text.str();
  }
}

void emit(Context& ctx, const json& doc, const std::string& text) {
  if (ctx.as_json) {
    ctx.out << doc.dump(2) << "\n";
  } else {
    ctx.out << text;
  }
}

// ---- bound / gamma -------------------------------------------------------

struct BudgetFlags {
  std::uint64_t max_steps = BoundBudget{}.max_recursion_steps;
  std::uint64_t max_bits = BoundBudget{}.max_value_bits;
  BoundBudget budget() const { return {max_steps, max_bits}; }
};

void add_budget_flags(CLI::App* cmd, BudgetFlags& flags) {
  cmd->add_option("--max-steps", flags.max_steps, "recursion step budget")->check(CLI::PositiveNumber);
  cmd->add_option("--max-bits", flags.max_bits, "largest intermediate value, in bits")->check(CLI::PositiveNumber);
}

struct BoundFlags {
  std::size_t m = 0;
  std::string f;
  bool running_max = false;
  BudgetFlags budget;
};

std::function<int(Context&)> prepare_bound(const BoundFlags& flags) {
  auto f = validated([&] { return parse_degree_function(flags.f, flags.running_max); });
  return [flags, f](Context& ctx) {
    const auto value = bound(flags.m, f, flags.budget.budget());
    emit(ctx, {{"command", "bound"}, {"status", "ok"}, {"m", flags.m}, {"f", f.describe()}, {"value", dec(value)}},
         dec(value) + "\n");
    return kOk;
  };
}

struct GammaFlags {
  std::size_t m = 0;
  std::uint64_t d = 0;
  std::uint64_t i = 0;
  BudgetFlags budget;
};

std::function<int(Context&)> prepare_gamma(const GammaFlags& flags) {
  return [flags](Context& ctx) {
    const auto value = gamma(flags.m, Natural(static_cast<unsigned long>(flags.d)),
                             Natural(static_cast<unsigned long>(flags.i)), flags.budget.budget());
    emit(ctx,
         {{"command", "gamma"}, {"status", "ok"}, {"m", flags.m}, {"d", flags.d}, {"i", flags.i}, {"value", dec(value)}},
         dec(value) + "\n");
    return kOk;
  };
}

// ---- antichain -----------------------------------------------------------

struct CheckFlags {
  std::string seq;
  std::string f;
  std::string beta;
  bool running_max = false;
};

std::function<int(Context&)> prepare_check(const CheckFlags& flags) {
  auto seq = validated([&] { return parse_exponent_sequence(flags.seq); });
  std::optional<DegreeFunction> f;
  if (!flags.f.empty()) f = validated([&] { return parse_degree_function(flags.f, flags.running_max); });
  std::optional<std::vector<Natural>> beta;
  if (!flags.beta.empty()) beta = parse_naturals(flags.beta);
  return [seq, f, beta](Context& ctx) {
    const bool anti = is_antichain(seq);
    json doc{{"command", "antichain check"}, {"status", "ok"}, {"sequence", to_json(seq)}, {"antichain", anti}};
    std::string text = anti ? "antichain\n" : "not an antichain\n";
    if (!anti) {
      for (std::size_t j = 1; j < seq.size() && doc.find("violation") == doc.end(); ++j) {
        for (std::size_t i = 0; i < j; ++i) {
          if (divides(seq[i], seq[j])) {
            doc["violation"] = {i + 1, j + 1};
            text += "element " + std::to_string(i + 1) + " " + to_string(seq[i]) + " divides element " +
                    std::to_string(j + 1) + " " + to_string(seq[j]) + "\n";
            break;
          }
        }
      }
    }
    if (f) {
      const bool ok = is_f_bounded(seq, *f);
      doc["f"] = f->describe();
      doc["f_bounded"] = ok;
      text += std::string("f-bounded: ") + (ok ? "yes" : "no") + "\n";
      if (beta) {
        const bool bok = is_f_beta_bounded(seq, *f, *beta);
        doc["f_beta_bounded"] = bok;
        text += std::string("(f, beta)-bounded: ") + (bok ? "yes" : "no") + "\n";
      }
    }
    emit(ctx, doc, text);
    return kOk;
  };
}

struct SearchFlags {
  std::size_t m = 0;
  std::string f;
  bool running_max = false;
  std::uint64_t budget = 1'000'000;
};

std::function<int(Context&)> prepare_search(const SearchFlags& flags) {
  auto f = validated([&] { return parse_degree_function(flags.f, flags.running_max); });
  return [flags, f](Context& ctx) {
    const auto result = longest_f_bounded_antichain(flags.m, f, flags.budget);
    json doc{{"command", "antichain search"},
             {"status", "ok"},
             {"m", flags.m},
             {"f", f.describe()},
             {"length", result.length},
             {"witness", to_json(result.witness.elements)},
             {"nodes", result.nodes},
             {"universe_degree", dec(result.universe_degree)},
             {"universe_size", result.universe_size}};
    std::ostringstream text;
    text << "length " << result.length << "\n"
         << "witness " << join_sequence(result.witness.elements) << "\n"
         << "nodes " << result.nodes << "\n"
         << "universe degree " << dec(result.universe_degree) << ", size " << result.universe_size << "\n";
    emit(ctx, doc, text.str());
    return kOk;
  };
}

struct FromChainFlags {
  std::string order = "deglex";
  std::string chain;
};

std::function<int(Context&)> prepare_from_chain(const FromChainFlags& flags) {
  const auto order = validated([&] { return MonomialOrder::parse(flags.order); });
  auto in = open_input(flags.chain);
  const auto texts = read_chain_stages(in);
  if (texts.empty()) throw UsageError(flags.chain + " holds no stages");
  IdealChainInput input{parse_grouped(texts), order};
  return [input](Context& ctx) {
    const auto result = chain_to_antichain(input);
    const auto& w = result.witness.elements;
    bool degrees_ok = is_antichain(w);
    json positions = json::array();
    std::ostringstream text;
    text << (is_antichain(w) ? "antichain" : "not an antichain") << "\n";
    for (std::size_t j = 0; j < w.size(); ++j) {
      const bool ok = w[j].total_degree() <= result.stage_degrees[j];
      degrees_ok = degrees_ok && ok;
      positions.push_back({{"alpha", w[j].values()},
                           {"degree", w[j].total_degree()},
                           {"stage_degree", result.stage_degrees[j]},
                           {"selected", to_string(result.selected[j], input.order)},
                           {"reduced", to_string(result.reduced[j], input.order)}});
      text << j + 1 << ": " << to_string(w[j]) << " degree " << w[j].total_degree() << " <= "
           << result.stage_degrees[j] << "  h = " << to_string(result.selected[j], input.order)
           << "  reduced = " << to_string(result.reduced[j], input.order) << "\n";
    }
    json doc{{"command", "antichain from-chain"},
             {"status", "ok"},
             {"order", input.order.name()},
             {"antichain", is_antichain(w)},
             {"witness", to_json(w)},
             {"positions", positions}};
    emit(ctx, doc, text.str());
    return degrees_ok ? kOk : kDomainError;
  };
}

// ---- groebner / divide ---------------------------------------------------

struct GroebnerFlags {
  std::string order = "deglex";
  std::string input;
  std::string trace;
  std::optional<std::uint64_t> stage_check_d;
};

json trace_document(const BuchbergerTrace& trace) {
  json stages = json::array();
  for (std::size_t i = 0; i <= trace.r(); ++i) {
    stages.push_back({{"index", i}, {"size", trace.stage_sizes[i]}, {"lt_generators", to_json(trace.lt_generators[i])}});
  }
  json elements = json::array();
  std::size_t stage = 0;
  for (std::size_t k = 0; k < trace.elements.size(); ++k) {
    while (k >= trace.stage_sizes[stage]) ++stage;
    elements.push_back({{"stage", stage},
                        {"poly", to_string(trace.elements[k].poly, trace.order)},
                        {"cofactors", to_json(trace.elements[k].cofactors, trace.order)}});
  }
  return {{"order", trace.order.name()},
          {"input", to_json(trace.input, trace.order)},
          {"r", trace.r()},
          {"stages", stages},
          {"elements", elements}};
}

std::function<int(Context&)> prepare_groebner(const GroebnerFlags& flags) {
  const auto order = validated([&] { return MonomialOrder::parse(flags.order); });
  auto in = open_input(flags.input);
  const auto lines = read_polynomial_lines(in);
  auto inputs = parse_grouped({lines}).front();
  auto trace_out = std::make_shared<std::ofstream>();
  if (!flags.trace.empty()) {
    trace_out->open(flags.trace);
    if (!*trace_out) throw UsageError("cannot write " + flags.trace);
  }
  return [flags, order, inputs, trace_out](Context& ctx) {
    const auto trace = buchberger_trace(inputs, order);
    const auto basis = trace.basis();
    json doc{{"command", "groebner"}, {"status", "ok"}, {"order", order.name()}, {"r", trace.r()},
             {"stage_sizes", trace.stage_sizes}, {"basis", to_json(basis, order)}};
    std::ostringstream text;
    text << "r = " << trace.r() << "\nstage sizes:";
    for (auto s : trace.stage_sizes) text << " " << s;
    text << "\nbasis:\n";
    for (const auto& b : basis) text << "  " << to_string(b, order) << "\n";

    int code = kOk;
    if (flags.stage_check_d) {
      const auto report = verify_prop43(trace, *flags.stage_check_d);
      json stages = json::array();
      text << "stage bounds (d = " << report.d << "):\n";
      for (const auto& s : report.stages) {
        stages.push_back({{"stage", s.stage},
                          {"max_cofactor_degree", s.max_cofactor_degree},
                          {"cofactor_bound", dec(s.cofactor_bound)},
                          {"max_lead_degree", s.max_lead_degree},
                          {"lead_bound", dec(s.lead_bound)},
                          {"certificates_ok", s.certificates_ok},
                          {"pass", s.cofactors_ok && s.leads_ok && s.certificates_ok}});
        text << "  " << s.stage << ": cofactors " << s.max_cofactor_degree << " <= " << dec(s.cofactor_bound)
             << ", leads " << s.max_lead_degree << " <= " << dec(s.lead_bound)
             << (s.certificates_ok ? "" : ", certificate mismatch")
             << (s.cofactors_ok && s.leads_ok && s.certificates_ok ? "" : "  FAIL") << "\n";
      }
      doc["stage_bounds"] = {{"d", report.d}, {"pass", report.pass}, {"stages", stages}};
      text << "stage bounds " << (report.pass ? "hold" : "VIOLATED") << "\n";
      if (!report.pass) {
        ctx.err << "error: per-stage degree bounds violated\n";
        code = kDomainError;
      }
    }
    if (trace_out->is_open()) {
      *trace_out << trace_document(trace).dump(2) << "\n";
      trace_out->close();
    }
    emit(ctx, doc, text.str());
    return code;
  };
}

struct DivideFlags {
  std::string order = "deglex";
  std::string f;
  std::string by;
};

std::function<int(Context&)> prepare_divide(const DivideFlags& flags) {
  const auto order = validated([&] { return MonomialOrder::parse(flags.order); });
  auto groups = parse_grouped({{flags.f}, split_semicolons(flags.by)});
  return [order, f = groups[0][0], divisors = groups[1]](Context& ctx) {
    const auto result = reduce(f, divisors, order);
    json doc{{"command", "divide"}, {"status", "ok"}, {"order", order.name()},
             {"quotients", to_json(result.quotients, order)}, {"remainder", to_string(result.remainder, order)}};
    std::ostringstream text;
    for (std::size_t i = 0; i < result.quotients.size(); ++i) {
      text << "q" << i + 1 << " = " << to_string(result.quotients[i], order) << "\n";
    }
    text << "remainder = " << to_string(result.remainder, order) << "\n";
    emit(ctx, doc, text.str());
    return kOk;
  };
}

// ---- member --------------------------------------------------------------

struct MemberFlags {
  std::string order = "deglex";
  std::string g;
  std::string ideal;
  std::string gamma_check;
  std::optional<std::uint64_t> d;
  std::optional<std::uint64_t> oracle_cap;
  std::size_t oracle_unknowns = 20'000;
  BudgetFlags budget;
};

std::function<int(Context&)> prepare_member(const MemberFlags& flags) {
  const auto order = validated([&] { return MonomialOrder::parse(flags.order); });
  auto in = open_input(flags.ideal);
  auto groups = parse_grouped({{flags.g}, read_polynomial_lines(in)});
  if (groups[1].empty()) throw UsageError(flags.ideal + " holds no generators");
  std::optional<std::pair<std::size_t, Degree>> gamma_check;
  if (!flags.gamma_check.empty()) {
    const auto md = parse_naturals(flags.gamma_check);
    if (md.size() != 2 || !md[0].fits_ulong_p() || !md[1].fits_ulong_p()) {
      throw UsageError("--verify-cor45 expects m,d");
    }
    gamma_check.emplace(md[0].get_ui(), md[1].get_ui());
  }
  return [flags, order, gamma_check, g = groups[0][0], inputs = groups[1]](Context& ctx) {
    const auto cert = membership(g, inputs, order, flags.d);
    json doc{{"command", "member"}, {"status", "ok"}, {"order", order.name()}, {"g", to_string(g, order)},
             {"member", cert.member}};
    std::ostringstream text;
    text << (cert.member ? "member" : "non-member") << "\n";
    if (cert.member) {
      doc["cofactors"] = to_json(cert.cofactors, order);
      doc["max_cofactor_degree"] = cert.max_cofactor_degree;
      for (std::size_t i = 0; i < cert.cofactors.size(); ++i) {
        text << "h" << i + 1 << " = " << to_string(cert.cofactors[i], order) << "\n";
      }
      text << "max cofactor degree " << cert.max_cofactor_degree << "\n";
    }
    doc["bound"] = {{"value", dec(cert.bound_used)}, {"provenance", "trace-derived"}, {"r", cert.trace_r},
                    {"d", cert.d}};
    text << "bound " << summarize(cert.bound_used) << " (trace-derived, r = " << cert.trace_r << ", d = " << cert.d
         << ")\n";

    int code = kOk;
    if (gamma_check) {
      if (!cert.member) {
        doc["gamma_check"] = {{"skipped", "non-member"}};
        text << "degree-bound check skipped for a non-member\n";
      } else {
        const auto report = verify_cor45(cert, g, inputs, gamma_check->first, gamma_check->second, flags.budget.budget());
        json r{{"m", gamma_check->first},
               {"d", gamma_check->second},
               {"identity_ok", report.identity_ok},
               {"observed_degree", report.observed_degree},
               {"trace_bound", dec(report.trace_bound)},
               {"trace_bound_ok", report.trace_bound_ok},
               {"gamma_evaluated", report.gamma_evaluated},
               {"pass", report.pass}};
        text << "identity " << (report.identity_ok ? "verified" : "MISMATCH") << "\n"
             << "trace bound " << report.observed_degree << " <= " << summarize(report.trace_bound) << ": "
             << (report.trace_bound_ok ? "yes" : "NO") << "\n";
        if (report.gamma_evaluated) {
          r["gamma"] = dec(report.gamma_value);
          r["gamma_ok"] = report.gamma_ok;
          text << "gamma bound " << report.observed_degree << " <= " << summarize(report.gamma_value) << ": "
               << (report.gamma_ok ? "yes" : "NO") << "\n";
        } else {
          r["notice"] = report.notice;
          text << report.notice << "\n";
        }
        doc["gamma_check"] = r;
        if (!report.pass) {
          ctx.err << "error: certificate failed the degree-bound check\n";
          code = kDomainError;
        }
      }
    }
    if (flags.oracle_cap) {
      const bool oracle = brute_force_membership(g, inputs, *flags.oracle_cap, flags.oracle_unknowns);
      // Below the certified degree the oracle may miss members; a disagreement
      // is only a defect when the cap covers the certificate.
      const bool comparable = !cert.member || cert.max_cofactor_degree <= *flags.oracle_cap;
      const bool agree = oracle == cert.member;
      doc["oracle"] = {{"cap", *flags.oracle_cap}, {"member", oracle}, {"agree", agree}, {"comparable", comparable}};
      text << "oracle (cap " << *flags.oracle_cap << "): " << (oracle ? "member" : "non-member") << ", "
           << (agree ? "agrees" : "disagrees") << (comparable ? "" : " (cap below the certificate degree)") << "\n";
      if (!agree && comparable) {
        ctx.err << "error: oracle disagrees with the certified answer\n";
        code = kDomainError;
      }
    }
    emit(ctx, doc, text.str());
    return code;
  };
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Effective bounds for ascending chains, Groebner bases and ideal membership", "chainbound"};
  app.set_version_flag("--version", std::string("chainbound ") + CHAINBOUND_VERSION);
  app.require_subcommand(1);
  app.fallthrough();
  std::string format = "text";
  app.add_option("--format", format, "text or json")->check(CLI::IsMember({"text", "json"}));

  std::function<std::function<int(Context&)>()> prepare;
  std::string command;
  auto bind = [&](CLI::App* cmd, std::string name, auto fn) {
    cmd->callback([&prepare, &command, name, fn] {
      command = name;
      prepare = fn;
    });
  };

  BoundFlags bound_flags;
  auto* bound_cmd = app.add_subcommand("bound", "bound on the length of f-bounded antichains");
  bound_cmd->add_option("--m", bound_flags.m, "number of variables")->required()->check(CLI::PositiveNumber);
  bound_cmd->add_option("--f", bound_flags.f, "const:C, table:a1,a2,..., geom:D or id")->required();
  bound_cmd->add_flag("--running-max", bound_flags.running_max, "wrap a table in its running maximum");
  add_budget_flags(bound_cmd, bound_flags.budget);
  bind(bound_cmd, "bound", [&] { return prepare_bound(bound_flags); });

  GammaFlags gamma_flags;
  auto* gamma_cmd = app.add_subcommand("gamma", "degree bound on membership cofactors");
  gamma_cmd->add_option("--m", gamma_flags.m, "number of variables")->required()->check(CLI::PositiveNumber);
  gamma_cmd->add_option("--d", gamma_flags.d, "generator degree bound")->required()->check(CLI::PositiveNumber);
  gamma_cmd->add_option("--i", gamma_flags.i, "degree of g")->required()->check(CLI::NonNegativeNumber);
  add_budget_flags(gamma_cmd, gamma_flags.budget);
  bind(gamma_cmd, "gamma", [&] { return prepare_gamma(gamma_flags); });

  auto* antichain_cmd = app.add_subcommand("antichain", "antichain checks and searches");
  antichain_cmd->require_subcommand(1);

  CheckFlags check_flags;
  auto* check_cmd = antichain_cmd->add_subcommand("check", "test a sequence");
  check_cmd->add_option("--seq", check_flags.seq, "e.g. \"(1,0);(0,1)\"")->required();
  check_cmd->add_option("--f", check_flags.f, "degree function to test against");
  check_cmd->add_option("--beta", check_flags.beta, "coordinate caps, e.g. 3,2")->needs("--f");
  check_cmd->add_flag("--running-max", check_flags.running_max, "wrap a table in its running maximum");
  bind(check_cmd, "antichain check", [&] { return prepare_check(check_flags); });

  SearchFlags search_flags;
  auto* search_cmd = antichain_cmd->add_subcommand("search", "exhaustive longest f-bounded antichain");
  search_cmd->add_option("--m", search_flags.m, "number of variables")->required()->check(CLI::PositiveNumber);
  search_cmd->add_option("--f", search_flags.f, "degree function")->required();
  search_cmd->add_flag("--running-max", search_flags.running_max, "wrap a table in its running maximum");
  search_cmd->add_option("--budget", search_flags.budget, "node budget")->check(CLI::PositiveNumber);
  bind(search_cmd, "antichain search", [&] { return prepare_search(search_flags); });

  FromChainFlags chain_flags;
  auto* chain_cmd = antichain_cmd->add_subcommand("from-chain", "antichain from a strictly ascending ideal chain");
  chain_cmd->add_option("--order", chain_flags.order)->check(CLI::IsMember({"lex", "deglex"}));
  chain_cmd->add_option("--chain", chain_flags.chain, "stages separated by blank lines")->required();
  bind(chain_cmd, "antichain from-chain", [&] { return prepare_from_chain(chain_flags); });

  GroebnerFlags groebner_flags;
  auto* groebner_cmd = app.add_subcommand("groebner", "batch Buchberger with certificates");
  groebner_cmd->add_option("--order", groebner_flags.order)->check(CLI::IsMember({"lex", "deglex"}));
  groebner_cmd->add_option("--input", groebner_flags.input, "one polynomial per line")->required();
  groebner_cmd->add_option("--trace", groebner_flags.trace, "write the full run as JSON");
  groebner_cmd->add_option("--check-prop43", groebner_flags.stage_check_d, "check per-stage degree bounds for d")
      ->check(CLI::PositiveNumber);
  bind(groebner_cmd, "groebner", [&] { return prepare_groebner(groebner_flags); });

  DivideFlags divide_flags;
  auto* divide_cmd = app.add_subcommand("divide", "multivariable division");
  divide_cmd->add_option("--order", divide_flags.order)->check(CLI::IsMember({"lex", "deglex"}));
  divide_cmd->add_option("--f", divide_flags.f, "dividend")->required();
  divide_cmd->add_option("--by", divide_flags.by, "divisors separated by ';'")->required();
  bind(divide_cmd, "divide", [&] { return prepare_divide(divide_flags); });

  MemberFlags member_flags;
  auto* member_cmd = app.add_subcommand("member", "certified ideal membership");
  member_cmd->add_option("--order", member_flags.order)->check(CLI::IsMember({"lex", "deglex"}));
  member_cmd->add_option("--g", member_flags.g, "candidate polynomial")->required();
  member_cmd->add_option("--ideal", member_flags.ideal, "generators, one per line")->required();
  member_cmd->add_option("--d", member_flags.d, "degree bound d (default: largest generator degree)");
  member_cmd->add_option("--verify-cor45", member_flags.gamma_check, "check the certificate against gamma, as m,d");
  member_cmd->add_option("--oracle-cap", member_flags.oracle_cap, "cross-check by linear algebra up to this degree");
  member_cmd->add_option("--oracle-unknowns", member_flags.oracle_unknowns, "oracle system size limit")
      ->check(CLI::PositiveNumber);
  add_budget_flags(member_cmd, member_flags.budget);
  bind(member_cmd, "member", [&] { return prepare_member(member_flags); });

  try {
    app.parse(std::vector<std::string>(args.rbegin(), args.rend()));
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? kOk : kUsageError;
  }

  Context ctx{out, err, format == "json"};
  std::function<int(Context&)> action;
  try {
    action = prepare();
  } catch (const UsageError& e) {
    err << "error: " << e.what() << "\n";
    return kUsageError;
  }

  try {
    return action(ctx);
  } catch (const BudgetError& e) {
    write_budget_report(ctx, command, e);
    err << "error: " << e.what() << "\n";
    return kBudgetExhausted;
  } catch (const Error& e) {
    err << "error: " << e.what() << "\n";
    return kDomainError;
  }
}

}  // namespace chainbound::cli
