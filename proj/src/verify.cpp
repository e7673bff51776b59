#include "fibnum/verify.hpp"

#include <chrono>
#include <fstream>
#include <functional>
#include <map>
#include <random>
#include <sstream>

#include <nlohmann/json.hpp>

#include "fibnum/numeration.hpp"
#include "fibnum/recognizers.hpp"
#include "fibnum/serialize.hpp"
#include "fibnum/synthesis.hpp"

#ifndef FIBNUM_GOLDEN_DIR
#define FIBNUM_GOLDEN_DIR "golden"
#endif

namespace fibnum {
namespace {

using Clock = std::chrono::steady_clock;

CheckResult timed(std::string name, std::string claim, CheckValue expected,
                  const std::function<CheckValue(std::string&)>& body) {
  CheckResult r{std::move(name), std::move(claim), expected, std::nullopt, false, 0, {}};
  auto t0 = Clock::now();
  try {
    r.observed = body(r.detail);
    r.passed = *r.observed == r.expected;
  } catch (const std::exception& e) {
    r.detail = std::string("error: ") + e.what();
  }
  r.runtime_ms = std::chrono::duration<double, std::milli>(Clock::now() - t0).count();
  return r;
}

// Canonical (no trailing zero) valid words of length <= max_len.
void enumerate_zeck(std::size_t max_len, std::vector<Digit>& prefix, std::vector<DigitWord>& out) {
  if (prefix.empty() || prefix.back() == 1) out.push_back(DigitWord::from_digits(prefix));
  if (prefix.size() == max_len) return;
  for (Digit d : {Digit{0}, Digit{1}}) {
    if (d == 1 && !prefix.empty() && prefix.back() == 1) continue;
    prefix.push_back(d);
    enumerate_zeck(max_len, prefix, out);
    prefix.pop_back();
  }
}

// All valid CG words (padded forms included when `canonical` is false).
void enumerate_cg(std::size_t max_len, bool canonical, bool open_two, std::vector<Digit>& prefix,
                  std::vector<DigitWord>& out) {
  if (!canonical || prefix.empty() || prefix.back() != 0) out.push_back(DigitWord::from_digits(prefix));
  if (prefix.size() == max_len) return;
  if (prefix.size() % 2 == 1) {
    prefix.push_back(0);
    enumerate_cg(max_len, canonical, open_two, prefix, out);
    prefix.pop_back();
    return;
  }
  for (Digit d : {Digit{0}, Digit{1}, Digit{2}}) {
    if (d == 2 && open_two) continue;
    prefix.push_back(d);
    enumerate_cg(max_len, canonical, d == 0 ? false : (open_two || d == 2), prefix, out);
    prefix.pop_back();
  }
}

std::vector<DigitWord> canonical_zeck_words(std::size_t max_len) {
  std::vector<DigitWord> out;
  std::vector<Digit> prefix;
  enumerate_zeck(max_len, prefix, out);
  return out;
}

std::vector<DigitWord> cg_words(std::size_t max_len, bool canonical) {
  std::vector<DigitWord> out;
  std::vector<Digit> prefix;
  enumerate_cg(max_len, canonical, false, prefix, out);
  return out;
}

// Values of `words` are exactly 0..size-1, each once. Fills `by_value`.
bool contiguous_bijection(const std::vector<DigitWord>& words, std::vector<DigitWord>& by_value, std::string& detail) {
  by_value.assign(words.size(), DigitWord(1));
  std::vector<bool> hit(words.size(), false);
  for (const auto& w : words) {
    Nat v = value(w);
    if (v >= words.size()) {
      detail = "value " + v.str() + " of " + to_text(w) + " lies outside [0, " + std::to_string(words.size()) + ")";
      return false;
    }
    auto i = static_cast<std::size_t>(v);
    if (hit[i]) {
      detail = "value " + std::to_string(i) + " represented twice";
      return false;
    }
    hit[i] = true;
    by_value[i] = w;
  }
  detail = std::to_string(words.size()) + " words cover [0, " + std::to_string(words.size()) + ")";
  return true;
}

// Chung-Graham words by value, from enumeration alone.
const std::vector<DigitWord>& cg_table() {
  static const std::vector<DigitWord> table = [] {
    std::vector<DigitWord> by_value;
    std::string ignored;
    contiguous_bijection(cg_words(20, true), by_value, ignored);
    return by_value;
  }();
  return table;
}

const DigitWord& cg_reference(std::uint64_t n) {
  const auto& t = cg_table();
  if (n >= t.size()) throw std::out_of_range("value beyond the enumerated Chung-Graham table");
  return t[n];
}

std::string golden_path(const std::string& dir, std::string_view name) {
  return dir + "/" + std::string(name) + ".native";
}

}  // namespace

std::string default_golden_dir() { return FIBNUM_GOLDEN_DIR; }

bool eval_existence(const Automaton& cgadd, const Automaton& cgval, const Automaton& pad) {
  const auto ter = TrackAlphabet::ternary();
  VariableFrame f({{"x", ter}, {"y", ter}});
  Automaton hyp = f.lift(pad, {"x"});
  hyp = intersect(hyp, f.lift(pad, {"y"}));
  hyp = intersect(hyp, f.lift(cgval, {"x"}));
  hyp = minimize(intersect(hyp, f.lift(cgval, {"y"})));
  // z ranges over words of the same length as x and y.
  Automaton some_z = project(cgadd, 2, Padding::exact);
  return is_empty(intersect(hyp, complement(some_z)));
}

bool eval_uniqueness(const Automaton& cgadd, const Automaton& cgval, const Automaton& pad, const Automaton& eq) {
  const auto ter = TrackAlphabet::ternary();
  VariableFrame f({{"w", ter}, {"x", ter}, {"y", ter}, {"z", ter}});
  Automaton body = f.lift(pad, {"x"});
  body = intersect(body, f.lift(pad, {"y"}));
  body = intersect(body, f.lift(cgval, {"x"}));
  body = minimize(intersect(body, f.lift(cgval, {"y"})));
  body = minimize(intersect(body, f.lift(cgadd, {"x", "y", "z"})));
  body = minimize(intersect(body, f.lift(cgadd, {"x", "y", "w"})));
  return is_empty(intersect(body, complement(f.lift(eq, {"z", "w"}))));
}

bool eval_addition_crosscheck(const Automaton& fibcg, const Automaton& zeckadd, const Automaton& cgadd) {
  const auto bin = TrackAlphabet::binary();
  const auto ter = TrackAlphabet::ternary();
  VariableFrame f({{"u", bin}, {"v", bin}, {"w", bin}, {"x", ter}, {"y", ter}, {"z", ter}});
  Automaton hyp = f.lift(fibcg, {"u", "x"});
  hyp = minimize(intersect(hyp, f.lift(fibcg, {"v", "y"})));
  hyp = minimize(intersect(hyp, f.lift(fibcg, {"w", "z"})));
  Automaton same = product(f.lift(zeckadd, {"u", "v", "w"}), f.lift(cgadd, {"x", "y", "z"}),
                           [](bool a, bool b) { return a == b; });
  return is_empty(intersect(hyp, complement(minimize(same))));
}

CheckResult check_existence() {
  return timed("existence", "forall x,y: cg0(x) & cg0(y) & cgval(x) & cgval(y) => exists z cgadd(x,y,z)", true,
               [](std::string&) {
                 return eval_existence(cached_automaton("cgadd"), cached_automaton("cgval"), cached_automaton("cg0"));
               });
}

CheckResult check_uniqueness() {
  return timed("uniqueness",
               "forall w,x,y,z: cg0(x) & cg0(y) & cgval(x) & cgval(y) & cgadd(x,y,z) & cgadd(x,y,w) => cgeq(z,w)",
               true, [](std::string&) {
                 return eval_uniqueness(cached_automaton("cgadd"), cached_automaton("cgval"), cached_automaton("cg0"),
                                        cached_automaton("cgeq"));
               });
}

CheckResult check_one_zero_existence() {
  return timed("one_zero_existence", "existence statement with a single padding 0 (expected to fail)", false,
               [](std::string& detail) {
                 bool holds = eval_existence(cached_automaton("cgadd"), cached_automaton("cgval"), build_cg1());
                 if (!holds) detail = "some padded pair has no same-length sum";
                 return holds;
               });
}

CheckResult check_one_zero_uniqueness() {
  return timed("one_zero_uniqueness", "uniqueness statement with a single padding 0", true, [](std::string&) {
    return eval_uniqueness(cached_automaton("cgadd"), cached_automaton("cgval"), build_cg1(), cached_automaton("cgeq"));
  });
}

CheckResult check_addition_crosscheck() {
  return timed("addition_crosscheck",
               "forall u,v,w,x,y,z: fibcg(u,x) & fibcg(v,y) & fibcg(w,z) => (u+v=w <=> cgadd(x,y,z))", true,
               [](std::string&) {
                 return eval_addition_crosscheck(cached_automaton("fibcg"), cached_automaton("zeckadd"),
                                                 cached_automaton("cgadd"));
               });
}

std::vector<CheckResult> check_state_counts() {
  std::vector<CheckResult> out;
  for (auto [name, expected] : {std::pair{"cgadd", 33}, std::pair{"cgrep", 42}}) {
    out.push_back(timed(std::string(name) + "_states", std::string("minimized ") + name + " has " +
                                                           std::to_string(expected) + " states",
                        std::int64_t{expected}, [name = std::string(name), expected](std::string& detail) {
                          auto c = cached_automaton(name).counts();
                          detail = "live=" + std::to_string(c.live) + " total=" + std::to_string(c.total);
                          std::int64_t observed = static_cast<std::int64_t>(c.live);
                          if (c.live == static_cast<std::size_t>(expected)) {
                            detail += " convention=live";
                          } else if (c.total == static_cast<std::size_t>(expected)) {
                            detail += " convention=total";
                            observed = static_cast<std::int64_t>(c.total);
                          } else {
                            detail += " convention=none";
                          }
                          return CheckValue{observed};
                        }));
  }
  return out;
}

std::vector<CheckResult> check_oracles(const VerifyScale& scale) {
  std::vector<CheckResult> out;
  const std::uint64_t small_n = std::min<std::uint64_t>(scale.max_n, 2000);

  out.push_back(timed("zeck_completeness", "canonical Zeckendorf words of length <= 20 biject onto [0, F_22)", true,
                      [](std::string& detail) {
                        std::vector<DigitWord> by_value;
                        auto words = canonical_zeck_words(20);
                        bool ok = contiguous_bijection(words, by_value, detail);
                        if (ok && Nat(words.size()) != fib(22)) {
                          detail += "; expected F_22 = " + fib(22).str() + " words";
                          ok = false;
                        }
                        for (const auto& w : words) ok = ok && zeck_valid(w);
                        return ok;
                      }));

  out.push_back(timed("cg_completeness", "canonical Chung-Graham words of length <= 20 biject onto [0, N)", true,
                      [](std::string& detail) {
                        std::vector<DigitWord> by_value;
                        auto words = cg_words(20, true);
                        bool ok = contiguous_bijection(words, by_value, detail);
                        for (const auto& w : words) ok = ok && cg_valid(w);
                        return ok;
                      }));

  out.push_back(timed("cgsplit_validity", "valid Chung-Graham u (length <= 12) splits into Zeckendorf v, w with v+w=u",
                      true, [](std::string& detail) {
                        auto words = cg_words(12, false);
                        for (const auto& u : words) {
                          auto [v, w] = cg_split(u);
                          if (!zeck_valid(v) || !zeck_valid(w) || value(v) + value(w) != value(u)) {
                            detail = "counterexample u = " + to_text(u);
                            return false;
                          }
                        }
                        detail = std::to_string(words.size()) + " words checked";
                        return true;
                      }));

  out.push_back(timed("fibcg_bijection", "fibcg maps zeck(n) <-> cg(n) both ways for n <= " + std::to_string(small_n),
                      true, [small_n](std::string& detail) {
                        const auto& fibcg = cached_automaton("fibcg");
                        for (std::uint64_t n = 0; n <= small_n; ++n) {
                          const DigitWord zeck[] = {zeck_encode(n)};
                          const DigitWord cg[] = {cg_reference(n)};
                          auto fwd = apply_relation(fibcg, zeck, 1);
                          auto back = apply_relation(fibcg, cg, 0);
                          if (fwd.size() != 1 || fwd[0] != cg[0] || back.size() != 1 || back[0] != zeck[0]) {
                            detail = "mismatch at n = " + std::to_string(n);
                            return false;
                          }
                        }
                        return true;
                      }));

  out.push_back(timed("phin_oracle", "phin maps zeck(n) to zeck(floor(phi n)) for n <= " + std::to_string(scale.max_n),
                      true, [&scale](std::string& detail) {
                        const auto& phin = cached_automaton("phin");
                        for (std::uint64_t n = 0; n <= scale.max_n; ++n) {
                          const DigitWord in[] = {zeck_encode(n)};
                          auto out = apply_relation(phin, in, 1);
                          if (out.size() != 1 || out[0] != zeck_encode(phi_floor(n))) {
                            detail = "mismatch at n = " + std::to_string(n);
                            return false;
                          }
                        }
                        // Automaton-level functionality: phin(x,s) & phin(x,t) & s != t is empty.
                        const auto bin = TrackAlphabet::binary();
                        VariableFrame f({{"x", bin}, {"s", bin}, {"t", bin}});
                        Automaton eq = minimize(f.lift(cached_automaton("fibrep-lsd"), {"s", "t"}));
                        Automaton clash = intersect(intersect(f.lift(phin, {"x", "s"}), f.lift(phin, {"x", "t"})),
                                                    complement(eq));
                        if (!is_empty(clash)) {
                          detail = "phin relates some x to two outputs";
                          return false;
                        }
                        detail = "functional by product emptiness";
                        return true;
                      }));

  out.push_back(timed("cgphin_oracle", "cgphin maps cg(n) to cg(floor(phi n)) for n <= " + std::to_string(small_n),
                      true, [small_n](std::string& detail) {
                        const auto& cgphin = cached_automaton("cgphin");
                        for (std::uint64_t n = 0; n <= small_n; ++n) {
                          const DigitWord in[] = {cg_reference(n)};
                          auto out = apply_relation(cgphin, in, 1);
                          auto expected = cg_reference(static_cast<std::uint64_t>(phi_floor(n)));
                          if (out.size() != 1 || out[0] != expected) {
                            detail = "mismatch at n = " + std::to_string(n);
                            return false;
                          }
                        }
                        return true;
                      }));

  const std::uint64_t exhaustive = std::min<std::uint64_t>(scale.max_n, 300);
  const std::size_t samples = scale.max_n >= 1000 ? 10000 : 0;
  out.push_back(timed("adder_oracle",
                      "zeckadd and cgadd agree with integer addition (m,n <= " + std::to_string(exhaustive) + " and " +
                          std::to_string(samples) + " random pairs <= 10^6)",
                      true, [&](std::string& detail) {
                        const auto& zadd = cached_automaton("zeckadd");
                        const auto& cadd = cached_automaton("cgadd");
                        auto agree = [&](std::uint64_t m, std::uint64_t n) {
                          const DigitWord z[] = {zeck_encode(m), zeck_encode(n)};
                          const DigitWord c[] = {cg_encode(m), cg_encode(n)};
                          auto zs = apply_relation(zadd, z, 2);
                          auto cs = apply_relation(cadd, c, 2);
                          return zs.size() == 1 && zs[0] == zeck_encode(m + n) && cs.size() == 1 &&
                                 value(cs[0]) == m + n && cg_valid(cs[0]);
                        };
                        for (std::uint64_t m = 0; m <= exhaustive; ++m) {
                          for (std::uint64_t n = 0; n <= exhaustive; ++n) {
                            if (!agree(m, n)) {
                              detail = "mismatch at " + std::to_string(m) + " + " + std::to_string(n);
                              return false;
                            }
                          }
                        }
                        std::mt19937_64 rng(scale.seed);
                        std::uniform_int_distribution<std::uint64_t> dist(0, 1000000);
                        for (std::size_t i = 0; i < samples; ++i) {
                          auto m = dist(rng), n = dist(rng);
                          if (!agree(m, n)) {
                            detail = "mismatch at " + std::to_string(m) + " + " + std::to_string(n);
                            return false;
                          }
                        }
                        detail = "seed " + std::to_string(scale.seed);
                        return true;
                      }));
  return out;
}

CheckResult check_golden_files(const std::string& dir) {
  return timed("golden_files", "synthesized automata match the checked-in native files", true,
               [&dir](std::string& detail) {
                 bool ok = true;
                 for (auto name : automaton_names()) {
                   std::ifstream in(golden_path(dir, name));
                   std::stringstream buf;
                   buf << in.rdbuf();
                   if (!in || buf.str() != to_native(cached_automaton(name))) {
                     if (!detail.empty()) detail += ",";
                     detail += std::string(name);
                     ok = false;
                   }
                 }
                 if (!ok) detail = "differs: " + detail;
                 return ok;
               });
}

bool Report::all_passed() const { return passed_count() == checks.size(); }

std::size_t Report::passed_count() const {
  std::size_t k = 0;
  for (const auto& c : checks) k += c.passed ? 1 : 0;
  return k;
}

Report run_all(const VerifyScale& scale) {
  Report report;
  report.checks.push_back(check_existence());
  report.checks.push_back(check_uniqueness());
  report.checks.push_back(check_one_zero_existence());
  report.checks.push_back(check_one_zero_uniqueness());
  report.checks.push_back(check_addition_crosscheck());
  for (auto& c : check_state_counts()) report.checks.push_back(std::move(c));
  for (auto& c : check_oracles(scale)) report.checks.push_back(std::move(c));
  report.checks.push_back(
      timed("cgrep_direct", "composed cgrep equals equality relation & cgval", true, [](std::string&) {
        return equivalent(cached_automaton("cgrep"), build_cgrep_direct());
      }));
  report.checks.push_back(check_golden_files(scale.golden_dir.empty() ? default_golden_dir() : scale.golden_dir));

  try {
    for (auto name : automaton_names()) {
      auto c = cached_automaton(name).counts();
      report.notes.push_back(std::string(name) + " live=" + std::to_string(c.live) + " total=" + std::to_string(c.total));
    }
    // cgadd without the validity conjunct on z.
    const auto ter = TrackAlphabet::ternary();
    ValueRelationSpec spec;
    spec.tracks = {{ter, +1, 0}, {ter, +1, 0}, {ter, -1, 0}};
    VariableFrame f({{"x", ter}, {"y", ter}, {"z", ter}});
    Automaton loose = build_value_relation(spec);
    for (const char* v : {"x", "y"}) loose = minimize(intersect(loose, f.lift(build_cgval(), {v})));
    bool cross = eval_addition_crosscheck(cached_automaton("fibcg"), cached_automaton("zeckadd"), loose);
    report.notes.push_back("cgadd without z validity: live=" + std::to_string(loose.counts().live) +
                           " addition_crosscheck=" + (cross ? "true" : "false"));
  } catch (const std::exception& e) {
    report.notes.push_back(std::string("notes unavailable: ") + e.what());
  }
  return report;
}

std::string format_report(const Report& report, bool include_runtime) {
  using nlohmann::ordered_json;
  auto to_json = [](const CheckValue& v) {
    return std::visit([](auto x) { return ordered_json(x); }, v);
  };
  std::ostringstream out;
  for (const auto& c : report.checks) {
    ordered_json j;
    j["name"] = c.name;
    j["claim"] = c.claim;
    j["expected"] = to_json(c.expected);
    j["observed"] = c.observed ? to_json(*c.observed) : ordered_json(nullptr);
    j["passed"] = c.passed;
    if (include_runtime) j["runtime_ms"] = static_cast<std::int64_t>(c.runtime_ms + 0.5);
    j["detail"] = c.detail;
    out << j.dump() << "\n";
  }
  for (const auto& n : report.notes) out << ordered_json{{"note", n}}.dump() << "\n";
  out << "PASSED " << report.passed_count() << "/" << report.checks.size() << "\n";
  return out.str();
}

}  // namespace fibnum
