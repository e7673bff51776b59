#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <variant>
#include <vector>

#include "fibnum/automaton.hpp"

namespace fibnum {

using CheckValue = std::variant<bool, std::int64_t>;

struct CheckResult {
  std::string name;
  std::string claim;
  CheckValue expected;
  std::optional<CheckValue> observed;  // empty when the check threw
  bool passed = false;                 // expected == observed
  double runtime_ms = 0;
  std::string detail;
};

struct VerifyScale {
  std::uint64_t max_n = 100000;
  std::uint64_t seed = 20250131;
  std::string golden_dir;  // empty: the checked-in directory
};

std::string default_golden_dir();

// Universal statements, evaluated only with automaton algebra.

/// forall x,y: pad(x) & pad(y) & cgval(x) & cgval(y) => exists z (same length) cgadd(x,y,z)
bool eval_existence(const Automaton& cgadd, const Automaton& cgval, const Automaton& pad);
/// forall w,x,y,z: pad(x) & pad(y) & cgval(x) & cgval(y) & cgadd(x,y,z) & cgadd(x,y,w) => eq(z,w)
bool eval_uniqueness(const Automaton& cgadd, const Automaton& cgval, const Automaton& pad, const Automaton& eq);
/// forall u,v,w,x,y,z: fibcg(u,x) & fibcg(v,y) & fibcg(w,z) => (zeckadd(u,v,w) <=> cgadd(x,y,z))
bool eval_addition_crosscheck(const Automaton& fibcg, const Automaton& zeckadd, const Automaton& cgadd);

CheckResult check_existence();
CheckResult check_uniqueness();
CheckResult check_one_zero_existence();
CheckResult check_one_zero_uniqueness();
CheckResult check_addition_crosscheck();
std::vector<CheckResult> check_state_counts();
std::vector<CheckResult> check_oracles(const VerifyScale& scale);
CheckResult check_golden_files(const std::string& dir);

struct Report {
  std::vector<CheckResult> checks;
  std::vector<std::string> notes;  // informative measurements, never asserted

  bool all_passed() const;
  std::size_t passed_count() const;
};

/// Builds everything and runs every check. Exceptions inside a check become
/// a failed CheckResult.
Report run_all(const VerifyScale& scale = {});

/// One JSON object per line, then "PASSED k/n".
std::string format_report(const Report& report, bool include_runtime = true);

}  // namespace fibnum
