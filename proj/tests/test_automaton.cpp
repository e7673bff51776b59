#include <gtest/gtest.h>

#include <random>

#include "fibnum/automaton.hpp"
#include "fibnum/errors.hpp"
#include "support/properties.hpp"

using namespace fibnum;

namespace {

// Single track {0,1}: words with an even number of 1s.
Automaton even_ones() {
  return Automaton({TrackAlphabet::binary()}, 0, {true, false}, {0, 1, 1, 0});
}

// Single track {0,1}: words ending in 1.
Automaton ends_in_one() {
  return Automaton({TrackAlphabet::binary()}, 0, {false, true}, {0, 1, 0, 1});
}

DigitWord w(std::string_view text) { return parse_word(text); }

}  // namespace

TEST(Automaton, ConstructorValidates) {
  Signature sig{TrackAlphabet::binary()};
  EXPECT_THROW(Automaton(sig, 2, {true, false}, {0, 1, 1, 0}), InputError);
  EXPECT_THROW(Automaton(sig, 0, {true, false}, {0, 1, 1}), InputError);
  EXPECT_THROW(Automaton(sig, 0, {true, false}, {0, 1, 5, 0}), InputError);
}

TEST(Automaton, SymbolOrderIsLexicographic) {
  Automaton u = Automaton::universal({TrackAlphabet::binary(), TrackAlphabet::ternary()});
  EXPECT_EQ(u.symbol_count(), 6u);
  std::vector<Digit> t{1, 2};
  EXPECT_EQ(u.symbol_of(t), 5u);
  EXPECT_EQ(u.tuple_of(3), (std::vector<Digit>{1, 0}));
  EXPECT_EQ(u.symbol_of(u.tuple_of(0)), 0u);
}

TEST(Automaton, AcceptsRejectsForeignDigits) {
  auto a = even_ones();
  EXPECT_TRUE(a.accepts(w("")));
  EXPECT_TRUE(a.accepts(w("1001")));
  EXPECT_FALSE(a.accepts(w("1000")));
  EXPECT_THROW(a.accepts(w("2")), InputError);
  EXPECT_THROW(a.accepts(parse_word("[0,0]", 2)), InputError);
}

TEST(Automaton, BooleanOperations) {
  auto a = even_ones(), b = ends_in_one();
  auto both = intersect(a, b), either = unite(a, b), neither = complement(either);
  for (std::string text : {"", "1", "11", "011", "10", "0101", "111"}) {
    bool ea = a.accepts(w(text)), eb = b.accepts(w(text));
    EXPECT_EQ(both.accepts(w(text)), ea && eb) << text;
    EXPECT_EQ(either.accepts(w(text)), ea || eb) << text;
    EXPECT_EQ(neither.accepts(w(text)), !(ea || eb)) << text;
  }
  EXPECT_THROW(intersect(a, Automaton::universal({TrackAlphabet::ternary()})), InputError);
}

TEST(Automaton, CountsSeparateDeadStates) {
  auto e = Automaton::empty({TrackAlphabet::binary()});
  EXPECT_EQ(e.counts(), (StateCounts{0, 1}));
  auto u = Automaton::universal({TrackAlphabet::binary()});
  EXPECT_EQ(u.counts(), (StateCounts{1, 1}));
  auto m = minimize(intersect(even_ones(), ends_in_one()));
  EXPECT_EQ(m.counts().total, m.state_count());
}

TEST(Automaton, MinimizeCanonicalNumbering) {
  // Two copies of even_ones glued together: 4 states, 2 after minimizing.
  Automaton big({TrackAlphabet::binary()}, 0, {true, false, true, false}, {2, 1, 1, 2, 0, 3, 3, 0});
  auto m = minimize(big);
  EXPECT_EQ(m.state_count(), 2u);
  EXPECT_EQ(m, minimize(even_ones()));
  EXPECT_EQ(m.initial(), 0u);
}

TEST(Automaton, ProjectPaddingPolicies) {
  // Two tracks over {0,1}; accept when the last digit of track 1 is 1.
  Signature sig{TrackAlphabet::binary(), TrackAlphabet::binary()};
  Automaton a(sig, 0, {false, true}, {0, 1, 0, 1, 0, 1, 0, 1});
  auto stable = project(a, std::size_t{1});
  auto exact = project(a, std::size_t{1}, Padding::exact);
  EXPECT_TRUE(stable.accepts(w("")));  // witness [0,1] after one padding zero
  EXPECT_FALSE(exact.accepts(w("")));
  EXPECT_TRUE(exact.accepts(w("0")));
  EXPECT_TRUE(exact.accepts(w("110")));
}

TEST(Automaton, ProjectExactMatchesBruteForce) {
  std::mt19937_64 rng(7);
  for (int round = 0; round < 60; ++round) {
    Signature sig{TrackAlphabet::binary(), TrackAlphabet::ternary()};
    auto a = props::random_automaton(rng, sig, 6);
    auto p = project(a, std::size_t{1}, Padding::exact);
    for (std::size_t len = 0; len <= 5; ++len) {
      for (std::size_t code = 0; code < (1u << len); ++code) {
        DigitWord x(1);
        for (std::size_t i = 0; i < len; ++i) x.push_back(static_cast<Digit>((code >> i) & 1));
        bool expect = false;
        std::size_t combos = 1;
        for (std::size_t i = 0; i < len; ++i) combos *= 3;
        for (std::size_t c = 0; c < combos && !expect; ++c) {
          DigitWord y(1);
          for (std::size_t i = 0, r = c; i < len; ++i, r /= 3) y.push_back(static_cast<Digit>(r % 3));
          DigitWord tracks[] = {x, y};
          expect = a.accepts(DigitWord::zip(tracks));
        }
        ASSERT_EQ(p.accepts(x), expect) << "round " << round << " x=" << to_text(x);
      }
    }
  }
}

TEST(Automaton, EmbedReordersTracks) {
  auto a = ends_in_one();
  Signature sig{TrackAlphabet::ternary(), TrackAlphabet::binary()};
  std::size_t map[] = {1};
  auto e = embed(a, sig, map);
  EXPECT_TRUE(e.accepts(parse_word("[2,0][0,1]", 2)));
  EXPECT_FALSE(e.accepts(parse_word("[2,1][1,0]", 2)));
}

TEST(Automaton, ReverseOfEndsInOneStartsWithOne) {
  auto r = reverse(ends_in_one());
  EXPECT_TRUE(r.accepts(w("100")));
  EXPECT_FALSE(r.accepts(w("001")));
}

TEST(Automaton, ZeroStabilize) {
  // Words ending in 10.
  Automaton a({TrackAlphabet::binary()}, 0, {false, false, true}, {0, 1, 2, 1, 0, 1});
  auto z = zero_stabilize(a);
  EXPECT_FALSE(a.accepts(w("01")));
  EXPECT_TRUE(z.accepts(w("01")));
  EXPECT_TRUE(z.accepts(w("0110")));
  EXPECT_FALSE(z.accepts(w("0100")));
  EXPECT_TRUE(equivalent(zero_stabilize(ends_in_one()), ends_in_one()));
}

TEST(Automaton, ShortestAccepted) {
  auto s = shortest_accepted(intersect(complement(even_ones()), ends_in_one()));
  ASSERT_TRUE(s);
  EXPECT_EQ(to_text(*s), "1");
  EXPECT_FALSE(shortest_accepted(Automaton::empty({TrackAlphabet::binary()})));
  auto t = shortest_accepted(intersect(even_ones(), ends_in_one()));
  ASSERT_TRUE(t);
  EXPECT_EQ(to_text(*t), "11");
}
