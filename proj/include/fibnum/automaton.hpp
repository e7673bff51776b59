#pragma once

#include <cstddef>
#include <cstdint>
#include <functional>
#include <optional>
#include <span>
#include <vector>

#include "fibnum/digit_word.hpp"

namespace fibnum {

using StateId = std::uint32_t;

struct StateCounts {
  std::size_t live = 0;   // reachable and co-reachable
  std::size_t total = 0;  // every stored state, dead state included

  bool operator==(const StateCounts&) const = default;
};

/// Deterministic, total finite automaton reading digit tuples on k parallel
/// tracks.
///
/// Symbols are the tuples of the product alphabet numbered in lexicographic
/// order (track 0 most significant), so symbol 0 is always the all-zero
/// tuple. Instances are immutable once constructed.
class Automaton {
 public:
  Automaton(Signature tracks, StateId initial, std::vector<bool> accepting,
            std::vector<StateId> transitions);

  // One state; accepts everything or nothing.
  static Automaton universal(Signature tracks);
  static Automaton empty(Signature tracks);

  const Signature& tracks() const noexcept { return tracks_; }
  std::size_t track_count() const noexcept { return tracks_.size(); }
  std::size_t state_count() const noexcept { return accepting_.size(); }
  std::size_t symbol_count() const noexcept { return symbols_; }
  StateId initial() const noexcept { return initial_; }
  bool is_accepting(StateId s) const { return accepting_.at(s); }
  const std::vector<bool>& accepting() const noexcept { return accepting_; }
  const std::vector<StateId>& transitions() const noexcept { return delta_; }

  StateId next(StateId s, std::size_t symbol) const { return delta_[s * symbols_ + symbol]; }

  std::size_t symbol_of(std::span<const Digit> tuple) const;
  std::vector<Digit> tuple_of(std::size_t symbol) const;

  // Throws InputError when the word's arity or digits do not fit the signature.
  bool accepts(const DigitWord& w) const;
  StateId run(const DigitWord& w) const;

  StateCounts counts() const;
  // States that can reach an accepting state.
  std::vector<bool> coreachable() const;

  // Bit-exact equality: same signature, numbering and transitions.
  bool operator==(const Automaton&) const = default;

 private:
  Signature tracks_;
  std::size_t symbols_ = 1;
  StateId initial_ = 0;
  std::vector<bool> accepting_;
  std::vector<StateId> delta_;
};

/// How existential projection treats the positions past the end of the
/// remaining tracks.
enum class Padding {
  // Accept w when some w·0^t has a witness (numbers, not strings).
  stabilize,
  // The witness must have exactly the length of w.
  exact,
};

Automaton product(const Automaton& a, const Automaton& b, const std::function<bool(bool, bool)>& combine);
Automaton intersect(const Automaton& a, const Automaton& b);
Automaton unite(const Automaton& a, const Automaton& b);
Automaton complement(const Automaton& a);

/// Re-reads `a` inside a wider signature: track i of `a` is fed from track
/// `track_map[i]` of `target`. Tracks of `target` not in the map are free.
Automaton embed(const Automaton& a, const Signature& target, std::span<const std::size_t> track_map);

/// Existentially quantifies the given tracks away. The result is determinized
/// and minimized.
Automaton project(const Automaton& a, std::span<const std::size_t> removed, Padding padding = Padding::stabilize);
Automaton project(const Automaton& a, std::size_t removed, Padding padding = Padding::stabilize);

/// Language reversal (lsd <-> msd), determinized and minimized.
Automaton reverse(const Automaton& a);

/// Minimal total DFA, states numbered in BFS order from the initial state
/// with symbols taken in lexicographic order.
Automaton minimize(const Automaton& a);

/// Marks q accepting iff an all-zero path from q reaches an accepting state.
Automaton zero_stabilize(const Automaton& a);

bool is_empty(const Automaton& a);
bool equivalent(const Automaton& a, const Automaton& b);

/// Shortest accepted word (lexicographically least among the shortest).
std::optional<DigitWord> shortest_accepted(const Automaton& a);

}  // namespace fibnum
