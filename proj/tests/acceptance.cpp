// Acceptance run: one PASS/FAIL line per criterion, exit status 0 only when
// all pass. Time limits are wall-clock and include automaton construction.

#include <chrono>
#include <cstdio>
#include <functional>
#include <random>
#include <set>
#include <string>

#include "fibnum/numeration.hpp"
#include "fibnum/recognizers.hpp"
#include "fibnum/synthesis.hpp"
#include "fibnum/verify.hpp"
#include "support/oracles.hpp"
#include "support/properties.hpp"

using namespace fibnum;

namespace {

constexpr double kStateCountLimitS = 60;
constexpr double kEvalLimitS = 120;
constexpr double kBijectionLimitS = 30;
constexpr double kPhiLimitS = 120;
constexpr std::size_t kBijectionMaxLen = 20;
constexpr std::uint64_t kAdderExhaustive = 300;
constexpr std::size_t kAdderSamples = 10000;
constexpr std::uint64_t kAdderSampleMax = 1000000;
constexpr std::size_t kSplitMaxLen = 12;
constexpr std::uint64_t kPhinMax = 100000;
constexpr std::uint64_t kCgphinMax = 2000;
constexpr std::size_t kPropertyCases = 1200;
constexpr std::size_t kPropertyMinimum = 1000;
constexpr std::uint64_t kSeed = 20250131;

DigitWord word(const oracle::Word& w) { return DigitWord::from_digits(w); }

struct Outcome {
  bool ok = false;
  std::string detail;
};

int failures = 0;

void criterion(int id, const std::string& title, double limit_s, const std::function<Outcome()>& body) {
  auto t0 = std::chrono::steady_clock::now();
  Outcome o;
  try {
    o = body();
  } catch (const std::exception& e) {
    o = {false, std::string("exception: ") + e.what()};
  }
  double s = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
  bool in_time = limit_s <= 0 || s < limit_s;
  bool pass = o.ok && in_time;
  if (!pass) ++failures;
  char timing[64];
  if (limit_s > 0) std::snprintf(timing, sizeof timing, "%.2fs < %.0fs", s, limit_s);
  else std::snprintf(timing, sizeof timing, "%.2fs", s);
  std::printf("%s criterion %d: %s [%s] %s%s\n", pass ? "PASS" : "FAIL", id, title.c_str(), timing, o.detail.c_str(),
              in_time ? "" : " (over time limit)");
  std::fflush(stdout);
}

Outcome state_counts() {
  auto add = build_named("cgadd").counts();
  auto rep = build_named("cgrep").counts();
  // Live states: reachable and co-reachable. The stored total adds the dead state.
  bool ok = add.live == 33 && rep.live == 42;
  return {ok, "cgadd live=" + std::to_string(add.live) + " total=" + std::to_string(add.total) +
                  ", cgrep live=" + std::to_string(rep.live) + " total=" + std::to_string(rep.total)};
}

Outcome eval_checks() {
  CheckResult rs[] = {check_existence(), check_uniqueness(), check_one_zero_existence(), check_one_zero_uniqueness(),
                      check_addition_crosscheck()};
  Outcome o{true, ""};
  for (auto& r : rs) {
    o.ok &= r.passed;
    bool got = r.observed && std::holds_alternative<bool>(*r.observed) && std::get<bool>(*r.observed);
    o.detail += r.name + "=" + (r.observed ? (got ? "TRUE" : "FALSE") : "error") + " ";
  }
  return o;
}

// Values of the enumerated words, through the library, must be exactly 0..count-1.
Outcome contiguous(const std::vector<oracle::Word>& words, const std::function<bool(const DigitWord&)>& lib_valid,
                   const Automaton& recognizer, const char* label) {
  std::set<Nat> seen;
  for (auto& w : words) {
    DigitWord d = word(w);
    if (!lib_valid(d) || !recognizer.accepts(d)) return {false, std::string(label) + " word rejected: " + oracle::text(w)};
    if (!seen.insert(value(d)).second) return {false, std::string(label) + " duplicate value for " + oracle::text(w)};
  }
  bool ok = !seen.empty() && *seen.begin() == 0 && *seen.rbegin() == Nat(seen.size() - 1);
  return {ok, std::string(label) + " " + std::to_string(words.size()) + " words -> [0," + std::to_string(seen.size()) + ")"};
}

Outcome bijections() {
  auto z = contiguous(oracle::zeck_words(kBijectionMaxLen), [](const DigitWord& w) { return zeck_valid(w); },
                      build_zeckval(), "zeck");
  auto c = contiguous(oracle::cg_words(kBijectionMaxLen), [](const DigitWord& w) { return cg_valid(w); },
                      build_cgval(), "cg");
  // Same counts: both systems cover [0, F_22).
  bool same = z.detail.substr(z.detail.find(' ')) == c.detail.substr(c.detail.find(' '));
  return {z.ok && c.ok && same, z.detail + "; " + c.detail};
}

Outcome adders() {
  const auto& zadd = cached_automaton("zeckadd");
  const auto& cadd = cached_automaton("cgadd");
  auto table = oracle::cg_table(16);
  std::size_t checked = 0;

  auto check = [&](std::uint64_t m, std::uint64_t n, const DigitWord& cm, const DigitWord& cn) -> std::string {
    const DigitWord zin[] = {word(oracle::zeck_greedy(m)), word(oracle::zeck_greedy(n))};
    auto zs = apply_relation(zadd, zin, 2);
    if (zs.size() != 1 || !oracle::zeck_valid(zs[0].flat()) || oracle::value(zs[0].flat()) != m + n) {
      return "zeckadd wrong on " + std::to_string(m) + "+" + std::to_string(n);
    }
    const DigitWord cin[] = {cm, cn};
    auto cs = apply_relation(cadd, cin, 2);
    if (cs.size() != 1 || !oracle::cg_valid(cs[0].flat()) || oracle::value(cs[0].flat()) != m + n) {
      return "cgadd wrong on " + std::to_string(m) + "+" + std::to_string(n);
    }
    ++checked;
    return {};
  };

  for (std::uint64_t m = 0; m <= kAdderExhaustive; ++m) {
    for (std::uint64_t n = 0; n <= kAdderExhaustive; ++n) {
      auto err = check(m, n, word(table.at(m)), word(table.at(n)));
      if (!err.empty()) return {false, err};
    }
  }
  std::mt19937_64 rng(kSeed);
  std::uniform_int_distribution<std::uint64_t> dist(0, kAdderSampleMax);
  for (std::size_t i = 0; i < kAdderSamples; ++i) {
    std::uint64_t m = dist(rng), n = dist(rng);
    // Library encodings, checked against the oracle before use.
    DigitWord cm = cg_encode(m), cn = cg_encode(n);
    if (!oracle::cg_valid(cm.flat()) || oracle::value(cm.flat()) != m) return {false, "cg_encode wrong on " + std::to_string(m)};
    if (!oracle::cg_valid(cn.flat()) || oracle::value(cn.flat()) != n) return {false, "cg_encode wrong on " + std::to_string(n)};
    auto err = check(m, n, cm, cn);
    if (!err.empty()) return {false, err};
  }
  return {true, std::to_string(checked) + " pairs through zeckadd and cgadd"};
}

Outcome splits() {
  const auto& rel = build_cgsplit();
  std::size_t count = 0;
  for (std::size_t len = 0; len <= kSplitMaxLen; ++len) {
    std::string err;
    oracle::for_each_word((len + 1) / 2, 3, [&](const oracle::Word& evens) {
      if (!err.empty()) return;
      oracle::Word u(len, 0);
      for (std::size_t i = 0; i < evens.size(); ++i) u[2 * i] = evens[i];
      if (!oracle::cg_valid(u)) return;
      ++count;
      auto s = cg_split(word(u));
      DigitWord t[] = {word(u), s.high, s.low};
      if (!oracle::zeck_valid(s.high.flat()) || !oracle::zeck_valid(s.low.flat()) ||
          oracle::value(s.high.flat()) + oracle::value(s.low.flat()) != oracle::value(u) ||
          !rel.accepts(DigitWord::zip(t))) {
        err = "split failed on " + oracle::text(u);
      }
    });
    if (!err.empty()) return {false, err};
  }
  return {true, std::to_string(count) + " valid words, padded forms included"};
}

Outcome phi_functions() {
  const auto& phin = cached_automaton("phin");
  for (std::uint64_t n = 0; n <= kPhinMax; ++n) {
    const DigitWord in[] = {word(oracle::zeck_greedy(n))};
    if (apply_function(phin, in, 1).flat() != oracle::zeck_greedy(oracle::phi_floor(n))) {
      return {false, "phin wrong at n=" + std::to_string(n)};
    }
  }
  const auto& cgphin = cached_automaton("cgphin");
  auto table = oracle::cg_table(22);
  for (std::uint64_t n = 0; n <= kCgphinMax; ++n) {
    const DigitWord in[] = {word(table.at(n))};
    if (apply_function(cgphin, in, 1).flat() != table.at(oracle::phi_floor(n))) {
      return {false, "cgphin wrong at n=" + std::to_string(n)};
    }
  }
  // Functional: r(x,s) & r(x,t) & s != t is empty, for both relations.
  auto functional = [](const Automaton& r, const Automaton& eq) {
    const auto& a = r.tracks()[0];
    const auto& b = r.tracks()[1];
    Signature sig{a, b, b};
    std::size_t xs[] = {0, 1}, xt[] = {0, 2}, st[] = {1, 2};
    auto both = intersect(embed(r, sig, xs), embed(r, sig, xt));
    return is_empty(intersect(both, complement(embed(eq, sig, st))));
  };
  Automaton eq2 = Automaton({TrackAlphabet::binary(), TrackAlphabet::binary()}, 0, {true, false}, {0, 1, 1, 0, 1, 1, 1, 1});
  bool f1 = functional(phin, eq2), f2 = functional(cgphin, build_cgeq());
  return {f1 && f2, "phin n<=" + std::to_string(kPhinMax) + ", cgphin n<=" + std::to_string(kCgphinMax) +
                        ", functional " + (f1 ? "yes" : "no") + "/" + (f2 ? "yes" : "no")};
}

Outcome engine_properties() {
  auto r = props::run_property_suite(kPropertyCases, kSeed);
  bool ok = r.failures == 0 && r.cases >= kPropertyMinimum;
  return {ok, std::to_string(r.cases) + " generated automata, " + std::to_string(r.failures) + " failures" +
                  (r.first_failure.empty() ? "" : " (" + r.first_failure + ")")};
}

}  // namespace

int main() {
  criterion(1, "cgadd has 33 live states and cgrep 42", kStateCountLimitS, state_counts);
  criterion(2, "existence/uniqueness with two-zero and one-zero padding, addition cross-check", kEvalLimitS, eval_checks);
  criterion(3, "canonical words of length <= 20 biject onto [0, N)", kBijectionLimitS, bijections);
  criterion(4, "adders agree with integer addition", 0, adders);
  criterion(5, "cgsplit parts are Zeckendorf-valid and sum correctly", 0, splits);
  criterion(6, "phin and cgphin compute floor(phi n) and are functional", kPhiLimitS, phi_functions);
  criterion(7, "engine invariants on generated automata", 0, engine_properties);
  std::printf("%s %d/7\n", failures == 0 ? "ALL PASSED" : "FAILED", 7 - failures);
  return failures == 0 ? 0 : 1;
}
