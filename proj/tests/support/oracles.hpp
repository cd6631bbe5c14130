#pragma once

#include <cstdint>
#include <functional>
#include <span>
#include <vector>

#include "chainbound/ring.hpp"

namespace chainbound::testing {

/// Evaluates p at a rational point by summing terms one power at a time.
Rational evaluate(const Polynomial& p, std::span<const Rational> point);

/// Non-decreasing N1 -> N1 with native integers.
using SmallFunction = std::function<std::uint64_t(std::uint64_t)>;

/// Second, independent transcription of the antichain bound recursion
/// written against plain 64-bit integers. Throws std::overflow_error when a
/// value leaves 64 bits; only usable for tiny (m, f).
std::uint64_t transcribed_bound(std::size_t m, const SmallFunction& f);
std::uint64_t transcribed_bmk(std::size_t m, std::size_t k, const SmallFunction& f,
                              const std::vector<std::uint64_t>& beta);

/// Closed form of the m = 2 bound for f == c, solved by hand from the
/// recursion: the k = 1 helper grows by a constant step.
std::uint64_t closed_form_bound2(std::uint64_t c);
/// Same for the k = 1 level with beta = (b).
std::uint64_t closed_form_bmk21(std::uint64_t c, std::uint64_t b);

/// Longest sequence of distinct exponents with |a_i| <= c and no earlier
/// element dividing a later one, by enumerating every valid sequence.
std::size_t naive_longest_antichain(std::size_t m, std::uint64_t c);

}  // namespace chainbound::testing
