#pragma once

#include <cstddef>
#include <optional>
#include <string>
#include <utility>

#include <boost/multiprecision/cpp_int.hpp>

#include "fibnum/digit_word.hpp"

namespace fibnum {

/// Unbounded nonnegative integer. Representations of length ~90 already
/// overflow 64 bits.
using Nat = boost::multiprecision::cpp_int;

/// F_0 = 0, F_1 = 1, F_{i+1} = F_i + F_{i-1}.
Nat fib(std::size_t i);

/// Sum of a_i * F_{i+2+shift} over a single-track word. `shift` is 0 or 1.
Nat value(const DigitWord& w, int shift = 0);

/// Greedy Zeckendorf encoding, canonical (no trailing zero).
DigitWord zeck_encode(const Nat& n);

/// Chung-Graham encoding, computed by running the Zeckendorf form through
/// the synthesized fibcg converter.
DigitWord cg_encode(const Nat& n);

// A description of the first violated condition, or nullopt for a valid word.
// Both predicates are padding-invariant.
std::optional<std::string> zeck_violation(const DigitWord& w);
std::optional<std::string> cg_violation(const DigitWord& w);

inline bool zeck_valid(const DigitWord& w) { return !zeck_violation(w); }
inline bool cg_valid(const DigitWord& w) { return !cg_violation(w); }

struct SplitWords {
  DigitWord high;  // 1 where u has a 2
  DigitWord low;   // 1 where u is nonzero
};

/// Digitwise 0 -> (0,0), 1 -> (0,1), 2 -> (1,1).
SplitWords cg_split(const DigitWord& u);

/// floor(sqrt(n)) by Newton iteration, with a post-check s^2 <= n < (s+1)^2.
Nat isqrt(const Nat& n);

/// floor(phi * n) as (n + isqrt(5 n^2)) / 2.
Nat phi_floor(const Nat& n);

Nat parse_nat(const std::string& text);

}  // namespace fibnum
