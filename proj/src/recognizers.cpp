#include "fibnum/recognizers.hpp"

#include <algorithm>
#include <functional>
#include <optional>
#include <map>
#include <vector>

namespace fibnum {
namespace {

// Builds a DFA by exploring a small explicit state type from `start`; states
// for which `step` returns nullopt fall into a shared dead state.
template <typename State>
Automaton explore(const Signature& sig, State start, const std::function<bool(const State&)>& accept,
                  const std::function<std::optional<State>(const State&, std::span<const Digit>)>& step) {
  Automaton probe = Automaton::universal(sig);
  std::map<State, StateId> ids;
  std::vector<State> states;
  std::vector<bool> accepting;
  std::vector<StateId> delta;
  constexpr StateId dead_marker = StateId(-1);
  bool need_dead = false;

  auto intern = [&](const State& s) {
    auto [it, fresh] = ids.emplace(s, static_cast<StateId>(states.size()));
    if (fresh) {
      states.push_back(s);
      accepting.push_back(accept(s));
    }
    return it->second;
  };
  intern(start);
  for (std::size_t i = 0; i < states.size(); ++i) {
    for (std::size_t sym = 0; sym < probe.symbol_count(); ++sym) {
      auto tuple = probe.tuple_of(sym);
      State cur = states[i];
      auto nxt = step(cur, tuple);
      if (!nxt) {
        need_dead = true;
        delta.push_back(dead_marker);
      } else {
        delta.push_back(intern(*nxt));
      }
    }
  }
  const auto n = static_cast<StateId>(states.size());
  if (need_dead) {
    for (auto& t : delta) {
      if (t == dead_marker) t = n;
    }
    accepting.push_back(false);
    delta.insert(delta.end(), probe.symbol_count(), n);
  }
  return minimize(Automaton(sig, 0, std::move(accepting), std::move(delta)));
}

}  // namespace

Automaton build_zeckval() {
  // State: previous digit was 1.
  return explore<bool>(
      {TrackAlphabet::binary()}, false, [](const bool&) { return true; },
      [](const bool& last_one, std::span<const Digit> t) -> std::optional<bool> {
        if (t[0] == 1 && last_one) return std::nullopt;
        return t[0] == 1;
      });
}

Automaton build_cgval() {
  // (next position is odd, a 2 was seen at an even position with no even 0 since)
  using S = std::pair<bool, bool>;
  return explore<S>(
      {TrackAlphabet::ternary()}, S{false, false}, [](const S&) { return true; },
      [](const S& s, std::span<const Digit> t) -> std::optional<S> {
        auto [odd, open_two] = s;
        Digit d = t[0];
        if (odd) {
          if (d != 0) return std::nullopt;
          return S{false, open_two};
        }
        if (d == 0) return S{true, false};
        if (d == 1) return S{true, open_two};
        if (open_two) return std::nullopt;
        return S{true, true};
      });
}

namespace {

// Accepts words whose last `zeros` stored digits are 0 (length >= zeros).
Automaton trailing_zeros(int zeros) {
  // State: number of consecutive trailing zeros read so far, capped.
  return explore<int>(
      {TrackAlphabet::ternary()}, 0, [zeros](const int& run) { return run >= zeros; },
      [zeros](const int& run, std::span<const Digit> t) -> std::optional<int> {
        if (t[0] != 0) return 0;
        return std::min(run + 1, zeros);
      });
}

}  // namespace

Automaton build_cg0() { return trailing_zeros(2); }

Automaton build_cg1() { return trailing_zeros(1); }

Automaton build_cgeq() {
  Signature sig{TrackAlphabet::ternary(), TrackAlphabet::ternary()};
  return explore<int>(
      sig, 0, [](const int&) { return true; },
      [](const int&, std::span<const Digit> t) -> std::optional<int> {
        if (t[0] != t[1]) return std::nullopt;
        return 0;
      });
}

Automaton build_cgsplit() {
  Signature sig{TrackAlphabet::ternary(), TrackAlphabet::binary(), TrackAlphabet::binary()};
  return explore<int>(
      sig, 0, [](const int&) { return true; },
      [](const int&, std::span<const Digit> t) -> std::optional<int> {
        bool listed = (t[0] == 0 && t[1] == 0 && t[2] == 0) || (t[0] == 1 && t[1] == 0 && t[2] == 1) ||
                      (t[0] == 2 && t[1] == 1 && t[2] == 1);
        if (!listed) return std::nullopt;
        return 0;
      });
}

}  // namespace fibnum
