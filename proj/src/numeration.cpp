#include "fibnum/numeration.hpp"

#include <cctype>
#include <mutex>
#include <vector>

#include "fibnum/errors.hpp"
#include "fibnum/synthesis.hpp"

namespace fibnum {

Nat fib(std::size_t i) {
  Nat a = 0, b = 1;
  for (std::size_t k = 0; k < i; ++k) {
    Nat c = a + b;
    a = std::move(b);
    b = std::move(c);
  }
  return a;
}

Nat value(const DigitWord& w, int shift) {
  if (w.tracks() != 1) throw InputError("value expects a single-track word");
  if (shift != 0 && shift != 1) throw InputError("weight shift must be 0 or 1");
  // Running pair (F_{i+2+shift}, F_{i+3+shift}).
  Nat lo = shift == 0 ? 1 : 2;
  Nat hi = shift == 0 ? 2 : 3;
  Nat total = 0;
  for (Digit d : w.flat()) {
    if (d) total += lo * d;
    Nat next = lo + hi;
    lo = std::move(hi);
    hi = std::move(next);
  }
  return total;
}

DigitWord zeck_encode(const Nat& n) {
  if (n == 0) return DigitWord(1);
  std::vector<Nat> weights{1, 2};  // F_2, F_3, ...
  while (weights.back() <= n) weights.push_back(weights[weights.size() - 1] + weights[weights.size() - 2]);
  weights.pop_back();
  std::vector<Digit> digits(weights.size(), 0);
  Nat rest = n;
  for (std::size_t i = weights.size(); i-- > 0;) {
    if (weights[i] <= rest) {
      digits[i] = 1;
      rest -= weights[i];
    }
  }
  return DigitWord::from_digits(std::move(digits)).stripped();
}

std::optional<std::string> zeck_violation(const DigitWord& w) {
  if (w.tracks() != 1) return "not a single-track word";
  const auto& d = w.flat();
  for (std::size_t i = 0; i < d.size(); ++i) {
    if (d[i] > 1) return "digit " + std::to_string(d[i]) + " at position " + std::to_string(i) + " is not in {0,1}";
    if (i + 1 < d.size() && d[i] == 1 && d[i + 1] == 1) {
      return "adjacent 1s at positions " + std::to_string(i) + " and " + std::to_string(i + 1) +
             " (requires a_i a_{i+1} = 0)";
    }
  }
  return std::nullopt;
}

std::optional<std::string> cg_violation(const DigitWord& w) {
  if (w.tracks() != 1) return "not a single-track word";
  const auto& d = w.flat();
  std::optional<std::size_t> open_two;  // last even position holding 2 with no even 0 since
  for (std::size_t i = 0; i < d.size(); ++i) {
    if (d[i] > 2) return "digit " + std::to_string(d[i]) + " at position " + std::to_string(i) + " is not in {0,1,2}";
    if (i % 2 == 1) {
      if (d[i] != 0) return "nonzero digit at odd position " + std::to_string(i) + " (requires a_i = 0 for odd i)";
      continue;
    }
    if (d[i] == 0) {
      open_two.reset();
    } else if (d[i] == 2) {
      if (open_two) {
        return "2s at even positions " + std::to_string(*open_two) + " and " + std::to_string(i) +
               " with no even 0 between them";
      }
      open_two = i;
    }
  }
  return std::nullopt;
}

DigitWord cg_encode(const Nat& n) {
  const std::size_t out_track = 1;
  const DigitWord inputs[] = {zeck_encode(n)};
  return apply_function(cached_automaton("fibcg"), inputs, out_track);
}

SplitWords cg_split(const DigitWord& u) {
  if (u.tracks() != 1) throw InputError("cg_split expects a single-track word");
  SplitWords out{DigitWord(1), DigitWord(1)};
  for (Digit d : u.flat()) {
    if (d > 2) throw InputError("cg_split digit outside {0,1,2}");
    out.high.push_back(d == 2 ? 1 : 0);
    out.low.push_back(d == 0 ? 0 : 1);
  }
  return out;
}

Nat isqrt(const Nat& n) {
  if (n < 2) return n;
  // Start above the root: 2^ceil(bits/2) > sqrt(n).
  std::size_t bits = boost::multiprecision::msb(n) + 1;
  Nat x = Nat(1) << ((bits + 1) / 2);
  while (true) {
    Nat y = (x + n / x) >> 1;
    if (y >= x) break;
    x = std::move(y);
  }
  if (!(x * x <= n && n < (x + 1) * (x + 1))) throw std::logic_error("isqrt post-check failed");
  return x;
}

Nat phi_floor(const Nat& n) { return (n + isqrt(5 * n * n)) / 2; }

Nat parse_nat(const std::string& text) {
  if (text.empty()) throw InputError("empty number");
  for (char c : text) {
    if (!std::isdigit(static_cast<unsigned char>(c))) throw InputError("'" + text + "' is not a nonnegative decimal integer");
  }
  // Nat's string constructor reads a leading 0 as an octal prefix.
  std::size_t first = text.find_first_not_of('0');
  return first == std::string::npos ? Nat(0) : Nat(text.substr(first));
}

}  // namespace fibnum
