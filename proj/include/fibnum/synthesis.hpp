#pragma once

#include <cstddef>
#include <cstdint>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "fibnum/automaton.hpp"

namespace fibnum {

/// One track of a linear value relation: contributes
/// coefficient * value(word, shift).
struct TrackTerm {
  TrackAlphabet alphabet;
  int coefficient = 1;  // +1 or -1
  int shift = 0;        // 0 weights position i by F_{i+2}, 1 by F_{i+3}
};

/// constant + sum_j coefficient_j * value(w_j, shift_j) = 0
struct ValueRelationSpec {
  std::vector<TrackTerm> tracks;
  int constant = 0;

  Signature signature() const;
};

/// Pending value a*F_{k+2} + b*F_{k+3} after k digits.
struct ResidualState {
  std::int64_t a = 0;
  std::int64_t b = 0;

  bool operator==(const ResidualState&) const = default;
};

/// Reads a digit tuple whose shift-0 contribution is `e` and shift-1
/// contribution is `e_shifted`.
constexpr ResidualState residual_step(ResidualState s, std::int64_t e, std::int64_t e_shifted) {
  return {s.b + e_shifted - s.a - e, s.a + e};
}

inline constexpr int kDefaultResidualBound = 8;

struct ResidualSynthesis {
  Automaton automaton;            // minimized
  std::size_t tagged_prefix = 0;  // positions whose states carry their index
  std::size_t residual_states = 0;
  std::int64_t largest_component = 0;  // max |a|,|b| over kept position-free states
  std::size_t certified_pruned = 0;    // successors outside the bound proven dead
};

/// Relation automaton for a ValueRelationSpec.
///
/// States past a short position-tagged prefix are ResidualState pairs with
/// |a|,|b| <= bound, accepting only at (0,0). A successor outside the bound
/// is dropped only when it is proven dead; otherwise a SynthesisError asks
/// for a larger bound.
ResidualSynthesis synthesize_value_relation(const ValueRelationSpec& spec, int bound = kDefaultResidualBound);
Automaton build_value_relation(const ValueRelationSpec& spec, int bound = kDefaultResidualBound);

/// Names the tracks of a multi-track relation so atoms can be placed on
/// them and quantified away.
class VariableFrame {
 public:
  struct Variable {
    std::string name;
    TrackAlphabet alphabet;
  };

  explicit VariableFrame(std::vector<Variable> vars);

  const Signature& signature() const noexcept { return signature_; }
  std::size_t index(std::string_view name) const;

  // The atom's track i is read from variable vars[i].
  Automaton lift(const Automaton& atom, std::span<const std::string> vars) const;
  Automaton lift(const Automaton& atom, std::initializer_list<std::string> vars) const {
    return lift(atom, std::span<const std::string>(vars.begin(), vars.size()));
  }

  // Remaining variables keep frame order.
  Automaton exists(const Automaton& a, std::initializer_list<std::string> vars,
                   Padding padding = Padding::stabilize) const;

 private:
  std::vector<Variable> vars_;
  Signature signature_;
};

// Tracks (x, y, z) over {0,1}: Zeckendorf x + y = z.
Automaton build_zeck_add();
// Tracks (u, x) over {0,1} x {0,1,2}: Zeckendorf u and Chung-Graham x of one integer.
Automaton build_fibcg();
// Tracks (x, y, z) over {0,1,2}: Chung-Graham x + y = z, all three valid.
Automaton build_cg_add();

enum class DigitOrder { lsd, msd };
// Tracks (x, y) over {0,1}: arbitrary binary x, Zeckendorf y, equal values.
Automaton build_fibrep(DigitOrder order);

// Tracks (r, z) over {0,1,2}: arbitrary r, Chung-Graham z, equal values.
// Composed through cgsplit, fibrep, Zeckendorf addition and fibcg.
Automaton build_cgrep();
// Same language from one equality relation intersected with cgval on z.
Automaton build_cgrep_direct();

// Tracks (x, s) over {0,1}: Zeckendorf x and s with value(s) = floor(phi value(x)).
Automaton build_phin();
// Tracks (u, v) over {0,1,2}: the same function in Chung-Graham form.
Automaton build_cgphin();

/// All canonical words w on `output_track` such that the inputs (given in
/// track order, skipping the output track), zero-padded, together with w
/// padded to a common length are accepted. Padding is searched up to the
/// automaton's state count past the longest input.
std::vector<DigitWord> apply_relation(const Automaton& r, std::span<const DigitWord> inputs, std::size_t output_track);

/// apply_relation that requires exactly one output; throws RelationError.
DigitWord apply_function(const Automaton& r, std::span<const DigitWord> inputs, std::size_t output_track);

/// Names accepted by build_named / cached_automaton, in a fixed order.
std::span<const std::string_view> automaton_names();
Automaton build_named(std::string_view name);
/// Process-wide memoized build_named; thread-safe.
const Automaton& cached_automaton(std::string_view name);

}  // namespace fibnum
