#include "chainbound/poly_io.hpp"

#include <algorithm>
#include <cctype>
#include <limits>
#include <sstream>
#include <utility>

#include "chainbound/errors.hpp"

namespace chainbound {

namespace {

struct RawTerm {
  Rational coeff;
  std::vector<std::pair<std::size_t, Exponent>> factors;  // (1-based index, power)
};

class Parser {
 public:
  explicit Parser(std::string_view text) : text_(text) {}

  std::vector<RawTerm> parse_poly() {
    std::vector<RawTerm> terms;
    skip_ws();
    int sign = +1;
    if (peek() == '+' || peek() == '-') {
      sign = take() == '-' ? -1 : +1;
    }
    terms.push_back(parse_term(sign));
    while (true) {
      skip_ws();
      if (at_end()) break;
      const char op = peek();
      if (op != '+' && op != '-') fail("expected '+' or '-'");
      take();
      terms.push_back(parse_term(op == '-' ? -1 : +1));
    }
    return terms;
  }

 private:
  RawTerm parse_term(int sign) {
    RawTerm term;
    term.coeff = sign;
    skip_ws();
    if (std::isdigit(static_cast<unsigned char>(peek())) || peek() == '-' || peek() == '+') {
      term.coeff *= parse_coeff();
    } else if (peek() == 'x') {
      term.factors.push_back(parse_factor());
    } else {
      fail("expected a coefficient or a variable");
    }
    while (true) {
      skip_ws();
      if (peek() != '*') break;
      take();
      skip_ws();
      term.factors.push_back(parse_factor());
    }
    return term;
  }

  Rational parse_coeff() {
    std::string digits;
    if (peek() == '-' || peek() == '+') {
      if (take() == '-') digits.push_back('-');
      skip_ws();
    }
    const std::string num = parse_digits("integer");
    digits += num;
    Rational value;
    value.get_num() = mpz_class(digits);
    value.get_den() = 1;
    skip_ws();
    if (peek() == '/') {
      take();
      skip_ws();
      const std::size_t at = pos_;
      mpz_class den(parse_digits("denominator"));
      if (den == 0) throw ParseError("zero denominator", at);
      value.get_den() = den;
      value.canonicalize();
    }
    return value;
  }

  std::pair<std::size_t, Exponent> parse_factor() {
    if (peek() != 'x') fail("expected 'x'");
    take();
    const std::size_t at = pos_;
    const auto index = to_size(parse_digits("variable index"), at);
    if (index == 0) throw ParseError("variable indices start at 1", at);
    Exponent power = 1;
    skip_ws();
    if (peek() == '^') {
      take();
      skip_ws();
      const std::size_t pat = pos_;
      const auto p = to_size(parse_digits("exponent"), pat);
      if (p > std::numeric_limits<Exponent>::max()) throw ParseError("exponent too large", pat);
      power = static_cast<Exponent>(p);
    }
    return {index, power};
  }

  std::string parse_digits(const char* what) {
    const std::size_t start = pos_;
    while (std::isdigit(static_cast<unsigned char>(peek()))) take();
    if (pos_ == start) fail(std::string("expected ") + what);
    return std::string(text_.substr(start, pos_ - start));
  }

  static std::size_t to_size(const std::string& digits, std::size_t at) {
    if (digits.size() > 18) throw ParseError("number too large", at);
    return static_cast<std::size_t>(std::stoull(digits));
  }

  void skip_ws() {
    while (!at_end() && std::isspace(static_cast<unsigned char>(text_[pos_]))) ++pos_;
  }
  bool at_end() const { return pos_ >= text_.size(); }
  char peek() const { return at_end() ? '\0' : text_[pos_]; }
  char take() { return text_[pos_++]; }
  [[noreturn]] void fail(const std::string& msg) const { throw ParseError(msg, pos_); }

  std::string_view text_;
  std::size_t pos_ = 0;
};

std::size_t max_index(const std::vector<RawTerm>& terms) {
  std::size_t m = 0;
  for (const auto& t : terms) {
    for (const auto& [idx, pow] : t.factors) m = std::max(m, idx);
  }
  return m;
}

Polynomial build(const std::vector<RawTerm>& raw, std::size_t ambient) {
  std::vector<Term> terms;
  terms.reserve(raw.size());
  for (const auto& t : raw) {
    ExponentVector e(ambient);
    for (const auto& [idx, pow] : t.factors) {
      if (idx > ambient) {
        throw DimensionError("variable x" + std::to_string(idx) + " in a ring of " + std::to_string(ambient) +
                             " variables");
      }
      e[idx - 1] += pow;
    }
    terms.push_back(Term{std::move(e), t.coeff});
  }
  return Polynomial(ambient, std::move(terms));
}

std::string coeff_text(const Rational& c) { return c.get_str(); }

std::string strip_comment(std::string line) {
  if (auto hash = line.find('#'); hash != std::string::npos) line.erase(hash);
  const auto first = line.find_first_not_of(" \t\r\n");
  if (first == std::string::npos) return {};
  const auto last = line.find_last_not_of(" \t\r\n");
  return line.substr(first, last - first + 1);
}

bool is_blank(const std::string& line) {
  return std::all_of(line.begin(), line.end(), [](unsigned char c) { return std::isspace(c); });
}

}  // namespace

std::size_t max_variable_index(std::string_view text) { return max_index(Parser(text).parse_poly()); }

Polynomial parse_polynomial(std::string_view text, std::size_t ambient) {
  return build(Parser(text).parse_poly(), ambient);
}

std::vector<Polynomial> parse_polynomials(std::span<const std::string> texts, std::size_t min_ambient) {
  std::vector<std::vector<RawTerm>> raws;
  raws.reserve(texts.size());
  std::size_t ambient = std::max<std::size_t>(min_ambient, 1);
  for (const auto& text : texts) {
    raws.push_back(Parser(text).parse_poly());
    ambient = std::max(ambient, max_index(raws.back()));
  }
  std::vector<Polynomial> out;
  out.reserve(raws.size());
  for (const auto& raw : raws) out.push_back(build(raw, ambient));
  return out;
}

std::string to_string(const Polynomial& p, MonomialOrder order) {
  if (p.is_zero()) return "0";
  std::string out;
  bool first = true;
  for (const auto& t : p.terms_descending(order)) {
    const bool negative = sgn(t.coeff) < 0;
    if (first) {
      if (negative) out += "-";
    } else {
      out += negative ? " - " : " + ";
    }
    first = false;
    const Rational magnitude = abs(t.coeff);
    std::string body;
    const bool unit = magnitude == 1;
    if (!unit || t.exps.is_zero()) body = coeff_text(magnitude);
    for (std::size_t i = 0; i < t.exps.size(); ++i) {
      if (t.exps[i] == 0) continue;
      if (!body.empty()) body += "*";
      body += "x" + std::to_string(i + 1);
      if (t.exps[i] > 1) body += "^" + std::to_string(t.exps[i]);
    }
    out += body;
  }
  return out;
}

std::string to_string(const ExponentVector& e) {
  std::string out = "(";
  for (std::size_t i = 0; i < e.size(); ++i) {
    if (i) out += ",";
    out += std::to_string(e[i]);
  }
  return out + ")";
}

ExponentVector parse_exponent_vector(std::string_view text) {
  std::size_t pos = 0;
  auto skip = [&] {
    while (pos < text.size() && std::isspace(static_cast<unsigned char>(text[pos]))) ++pos;
  };
  skip();
  if (pos >= text.size() || text[pos] != '(') throw ParseError("expected '('", pos);
  ++pos;
  std::vector<Exponent> exps;
  while (true) {
    skip();
    const std::size_t start = pos;
    while (pos < text.size() && std::isdigit(static_cast<unsigned char>(text[pos]))) ++pos;
    if (pos == start) throw ParseError("expected a natural number", pos);
    if (pos - start > 9) throw ParseError("exponent too large", start);
    exps.push_back(static_cast<Exponent>(std::stoul(std::string(text.substr(start, pos - start)))));
    skip();
    if (pos < text.size() && text[pos] == ',') {
      ++pos;
      continue;
    }
    if (pos < text.size() && text[pos] == ')') {
      ++pos;
      break;
    }
    throw ParseError("expected ',' or ')'", pos);
  }
  skip();
  if (pos != text.size()) throw ParseError("trailing characters after exponent vector", pos);
  return ExponentVector(std::move(exps));
}

std::vector<ExponentVector> parse_exponent_sequence(std::string_view text) {
  std::vector<ExponentVector> out;
  if (strip_comment(std::string(text)).empty()) return out;
  std::size_t start = 0;
  while (true) {
    const auto semi = text.find(';', start);
    out.push_back(parse_exponent_vector(text.substr(start, semi - start)));
    if (semi == std::string_view::npos) break;
    start = semi + 1;
  }
  return out;
}

std::vector<std::string> read_polynomial_lines(std::istream& in) {
  std::vector<std::string> out;
  std::string line;
  while (std::getline(in, line)) {
    auto body = strip_comment(line);
    if (!body.empty()) out.push_back(std::move(body));
  }
  return out;
}

std::vector<std::vector<std::string>> read_chain_stages(std::istream& in) {
  std::vector<std::vector<std::string>> stages;
  std::vector<std::string> current;
  std::string line;
  while (std::getline(in, line)) {
    if (is_blank(line)) {
      if (!current.empty()) stages.push_back(std::move(current));
      current.clear();
      continue;
    }
    auto body = strip_comment(line);
    if (!body.empty()) current.push_back(std::move(body));
  }
  if (!current.empty()) stages.push_back(std::move(current));
  return stages;
}

}  // namespace chainbound
