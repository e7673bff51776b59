#pragma once

// Random automata and the engine invariants checked on them. Shared by the
// gtest property suite and the acceptance binary.

#include <cstdint>
#include <optional>
#include <random>
#include <string>
#include <vector>

#include "fibnum/automaton.hpp"
#include "fibnum/serialize.hpp"

namespace props {

using fibnum::Automaton;
using fibnum::DigitWord;
using fibnum::Signature;
using fibnum::TrackAlphabet;

inline Signature random_signature(std::mt19937_64& rng, std::size_t max_tracks) {
  std::size_t k = 1 + rng() % max_tracks;
  Signature sig;
  for (std::size_t t = 0; t < k; ++t) sig.push_back(rng() % 2 ? TrackAlphabet::binary() : TrackAlphabet::ternary());
  return sig;
}

inline Automaton random_automaton(std::mt19937_64& rng, const Signature& sig, std::size_t max_states) {
  std::size_t n = 1 + rng() % max_states;
  std::size_t symbols = 1;
  for (auto& a : sig) symbols *= a.size();
  std::vector<bool> acc(n);
  for (std::size_t s = 0; s < n; ++s) acc[s] = rng() % 3 == 0;
  std::vector<fibnum::StateId> delta(n * symbols);
  for (auto& d : delta) d = static_cast<fibnum::StateId>(rng() % n);
  return Automaton(sig, static_cast<fibnum::StateId>(rng() % n), std::move(acc), std::move(delta));
}

inline DigitWord random_word(std::mt19937_64& rng, const Signature& sig, std::size_t max_len) {
  DigitWord w(sig.size());
  std::size_t len = rng() % (max_len + 1);
  std::vector<fibnum::Digit> tuple(sig.size());
  for (std::size_t i = 0; i < len; ++i) {
    for (std::size_t t = 0; t < sig.size(); ++t) {
      auto digits = sig[t].digits();
      tuple[t] = digits[rng() % digits.size()];
    }
    w.push_back(tuple);
  }
  return w;
}

// Reference run: follows transitions by hand from tuple indices.
inline bool run_by_hand(const Automaton& a, const DigitWord& w) {
  auto s = a.initial();
  for (std::size_t i = 0; i < w.length(); ++i) {
    std::size_t sym = 0;
    for (std::size_t t = 0; t < a.track_count(); ++t) sym = sym * a.tracks()[t].size() + a.tracks()[t].index_of(w.at(i, t));
    s = a.next(s, sym);
  }
  return a.is_accepting(s);
}

using Failure = std::optional<std::string>;

inline Failure minimize_idempotent(const Automaton& a) {
  auto m = fibnum::minimize(a);
  if (!(fibnum::minimize(m) == m)) return "minimize(minimize(A)) differs from minimize(A)";
  if (!fibnum::equivalent(a, m)) return "minimize changed the language";
  if (m.state_count() > a.state_count() + 1) return "minimize grew the automaton";
  return std::nullopt;
}

inline Failure complement_involution(const Automaton& a) {
  auto c = fibnum::complement(a);
  if (!fibnum::equivalent(fibnum::complement(c), a)) return "complement(complement(A)) not equivalent to A";
  if (!fibnum::is_empty(fibnum::intersect(a, c))) return "A and its complement intersect";
  return std::nullopt;
}

inline Failure reverse_involution(const Automaton& a) {
  if (!fibnum::equivalent(fibnum::reverse(fibnum::reverse(a)), a)) return "reverse(reverse(A)) not equivalent to A";
  return std::nullopt;
}

inline Failure zero_stabilize_fixed_point(const Automaton& a, std::mt19937_64& rng) {
  auto z = fibnum::zero_stabilize(a);
  if (!fibnum::equivalent(fibnum::zero_stabilize(z), z)) return "zero_stabilize is not idempotent";
  // w is accepted by z iff some w 0^t is accepted by a, t < state count.
  for (int trial = 0; trial < 8; ++trial) {
    auto w = random_word(rng, a.tracks(), 6);
    bool expect = false;
    for (std::size_t t = 0; t <= a.state_count() && !expect; ++t) expect = run_by_hand(a, w.padded(w.length() + t));
    if (z.accepts(w) != expect) return "zero_stabilize disagrees with padding search on " + fibnum::to_text(w);
  }
  return std::nullopt;
}

inline Failure native_round_trip(const Automaton& a) {
  auto text = fibnum::to_native(a);
  auto back = fibnum::from_native(text);
  if (!(back == a)) {
    // Without a dead state the importer appends a sink only when needed,
    // so the language must still survive.
    if (!fibnum::equivalent(back, a)) return "native import changed the language";
    return "native round trip not bit-exact";
  }
  auto m = fibnum::minimize(a);
  if (!(fibnum::from_native(fibnum::to_native(m)) == m)) return "native round trip of minimized A not bit-exact";
  return std::nullopt;
}

inline Failure accepts_matches_run(const Automaton& a, std::mt19937_64& rng) {
  for (int trial = 0; trial < 8; ++trial) {
    auto w = random_word(rng, a.tracks(), 10);
    if (a.accepts(w) != run_by_hand(a, w)) return "accepts disagrees with a hand run on " + fibnum::to_text(w);
  }
  return std::nullopt;
}

struct SuiteResult {
  std::size_t cases = 0;
  std::size_t failures = 0;
  std::string first_failure;
};

// `cases` random automata, each checked against every invariant.
inline SuiteResult run_property_suite(std::size_t cases, std::uint64_t seed) {
  std::mt19937_64 rng(seed);
  SuiteResult r;
  for (std::size_t i = 0; i < cases; ++i) {
    auto sig = random_signature(rng, 2);
    auto a = random_automaton(rng, sig, 7);
    Failure checks[] = {
        minimize_idempotent(a),    complement_involution(a), reverse_involution(a),
        zero_stabilize_fixed_point(a, rng), native_round_trip(a),     accepts_matches_run(a, rng),
    };
    ++r.cases;
    for (auto& f : checks) {
      if (!f) continue;
      if (r.failures++ == 0) r.first_failure = "case " + std::to_string(i) + ": " + *f;
      break;
    }
  }
  return r;
}

}  // namespace props
