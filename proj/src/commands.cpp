#include "fibnum/commands.hpp"

#include <fstream>
#include <sstream>

#include "fibnum/errors.hpp"
#include "fibnum/numeration.hpp"
#include "fibnum/synthesis.hpp"

namespace fibnum {
namespace {

CommandResult usage_error(const std::string& message) { return {kExitUsage, "", "error: " + message + "\n"}; }

DigitWord ingest(std::string_view text, bool msd) {
  DigitWord w = parse_word(text);
  return msd ? w.reversed() : w;
}

std::string emit(const DigitWord& w, bool msd) { return to_text(msd ? w.reversed() : w) + "\n"; }

void require_digits(const DigitWord& w, Digit max_digit, std::string_view system) {
  for (std::size_t i = 0; i < w.length(); ++i) {
    if (w.at(i, 0) > max_digit) {
      throw InputError("digit " + std::to_string(w.at(i, 0)) + " at position " + std::to_string(i) +
                       " is not allowed in " + std::string(system));
    }
  }
}

DigitWord ingest_valid(std::string_view system, std::string_view text, bool msd) {
  DigitWord w = ingest(text, msd);
  if (system == "zeck") {
    if (auto why = zeck_violation(w)) throw InputError("invalid Zeckendorf representation: " + *why);
  } else if (system == "cg") {
    if (auto why = cg_violation(w)) throw InputError("invalid Chung-Graham representation: " + *why);
  } else {
    throw InputError("unknown system '" + std::string(system) + "'");
  }
  return w.stripped();
}

// fibcg track 0 is Zeckendorf, track 1 Chung-Graham.
DigitWord zeck_to_cg(const DigitWord& z) {
  const DigitWord in[] = {z};
  return apply_function(cached_automaton("fibcg"), in, 1);
}

DigitWord cg_to_zeck(const DigitWord& c) {
  const DigitWord in[] = {c};
  return apply_function(cached_automaton("fibcg"), in, 0);
}

}  // namespace

CommandResult cmd_convert(std::string_view from, std::string_view to, std::string_view text, bool msd) {
  try {
    if (to != "dec" && to != "zeck" && to != "cg") return usage_error("unknown target system '" + std::string(to) + "'");
    DigitWord zeck(1), cg(1);
    bool have_zeck = false, have_cg = false;
    if (from == "dec") {
      Nat n = parse_nat(std::string(text));
      if (to == "dec") return {kExitOk, n.str() + "\n", ""};
      if (to == "zeck") return {kExitOk, emit(zeck_encode(n), msd), ""};
      return {kExitOk, emit(cg_encode(n), msd), ""};
    } else if (from == "zeck") {
      zeck = ingest_valid("zeck", text, msd);
      have_zeck = true;
    } else if (from == "cg") {
      cg = ingest_valid("cg", text, msd);
      have_cg = true;
    } else if (from == "raw2") {
      DigitWord r = ingest(text, msd);
      require_digits(r, 2, "raw2");
      const DigitWord in[] = {r};
      cg = apply_function(cached_automaton("cgrep"), in, 1);
      have_cg = true;
    } else {
      return usage_error("unknown source system '" + std::string(from) + "'");
    }

    if (to == "dec") return {kExitOk, value(have_zeck ? zeck : cg).str() + "\n", ""};
    if (to == "zeck") return {kExitOk, emit(have_zeck ? zeck : cg_to_zeck(cg), msd), ""};
    return {kExitOk, emit(have_cg ? cg : zeck_to_cg(zeck), msd), ""};
  } catch (const InputError& e) {
    return usage_error(e.what());
  } catch (const RelationError& e) {
    return {kExitInternal, "", std::string("internal error: ") + e.what() + "\n"};
  }
}

CommandResult cmd_add(std::string_view system, std::string_view x, std::string_view y, bool msd) {
  try {
    if (system != "zeck" && system != "cg") return usage_error("unknown system '" + std::string(system) + "'");
    const DigitWord in[] = {ingest_valid(system, x, msd), ingest_valid(system, y, msd)};
    DigitWord z = apply_function(cached_automaton(system == "zeck" ? "zeckadd" : "cgadd"), in, 2);
    bool valid = system == "zeck" ? zeck_valid(z) : cg_valid(z);
    if (!valid || value(z) != value(in[0]) + value(in[1])) {
      return {kExitInternal, "", "internal error: adder result " + to_text(z) + " disagrees with integer addition\n"};
    }
    return {kExitOk, emit(z, msd), ""};
  } catch (const InputError& e) {
    return usage_error(e.what());
  } catch (const RelationError& e) {
    return {kExitInternal, "", std::string("internal error: ") + e.what() + "\n"};
  }
}

CommandResult cmd_synth(std::string_view name, const std::string& out_path, Format format) {
  try {
    const Automaton& a = cached_automaton(name);
    std::string text = export_automaton(a, format, name);
    auto c = a.counts();
    std::string counts = "live states: " + std::to_string(c.live) + "\ntotal states: " + std::to_string(c.total) + "\n";
    if (out_path.empty()) return {kExitOk, text, counts};
    std::ofstream file(out_path, std::ios::binary);
    if (!file) return usage_error("cannot write '" + out_path + "'");
    file << text;
    if (!file.flush()) return usage_error("cannot write '" + out_path + "'");
    return {kExitOk, counts, ""};
  } catch (const InputError& e) {
    return usage_error(e.what());
  } catch (const SynthesisError& e) {
    return {kExitInternal, "", std::string("synthesis error: ") + e.what() + "\n"};
  }
}

CommandResult cmd_verify(const VerifyScale& scale) {
  Report report = run_all(scale);
  return {report.all_passed() ? kExitOk : kExitFailed, format_report(report), ""};
}

CommandResult cmd_accepts(const std::string& automaton_path, std::span<const std::string> words, bool msd) {
  std::ifstream file(automaton_path, std::ios::binary);
  if (!file) return usage_error("cannot read '" + automaton_path + "'");
  std::stringstream buf;
  buf << file.rdbuf();
  try {
    Automaton a = from_native(buf.str());
    std::string out;
    for (const auto& text : words) {
      DigitWord w = parse_word(text, a.track_count());
      if (msd) w = w.reversed();
      out += a.accepts(w) ? "true\n" : "false\n";
    }
    return {kExitOk, out, ""};
  } catch (const ParseError& e) {
    return usage_error(automaton_path + ":" + e.what());
  } catch (const InputError& e) {
    return usage_error(e.what());
  }
}

}  // namespace fibnum
