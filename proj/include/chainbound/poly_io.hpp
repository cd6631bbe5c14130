#pragma once

#include <cstddef>
#include <istream>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "chainbound/ring.hpp"

namespace chainbound {

// Text grammar (whitespace insignificant):
//   poly   := ['+'|'-'] term (('+'|'-') term)*
//   term   := coeff ('*' factor)* | factor ('*' factor)*
//   factor := 'x' INDEX ('^' NAT)?
//   coeff  := INT ('/' POSINT)?
// e.g. "x1^2*x2 - 1/2*x3 + 4".

/// Largest variable index mentioned in `text` (0 for a constant).
std::size_t max_variable_index(std::string_view text);

/// Parses into a polynomial over `ambient` variables. Throws ParseError on
/// malformed text and DimensionError if a variable index exceeds `ambient`.
Polynomial parse_polynomial(std::string_view text, std::size_t ambient);

/// Parses a batch, inferring the ambient count as the largest index seen
/// (at least `min_ambient`).
std::vector<Polynomial> parse_polynomials(std::span<const std::string> texts, std::size_t min_ambient = 1);

/// Canonical text form, terms in descending `order`; re-parses to an equal value.
std::string to_string(const Polynomial& p, MonomialOrder order = MonomialOrder::deglex());

/// "(a1,a2,...,am)"
std::string to_string(const ExponentVector& e);
ExponentVector parse_exponent_vector(std::string_view text);
/// Semicolon-separated exponent vectors, e.g. "(1,0);(0,1)".
std::vector<ExponentVector> parse_exponent_sequence(std::string_view text);

/// One polynomial per non-blank line; '#' starts a comment.
std::vector<std::string> read_polynomial_lines(std::istream& in);

/// Stages separated by blank lines, one generator per line.
std::vector<std::vector<std::string>> read_chain_stages(std::istream& in);

}  // namespace chainbound
