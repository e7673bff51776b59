#include "fibnum/serialize.hpp"

#include <charconv>
#include <map>
#include <optional>
#include <sstream>
#include <vector>

#include "fibnum/errors.hpp"

namespace fibnum {
namespace {

std::optional<StateId> find_dead(const Automaton& a) {
  for (StateId s = 0; s < a.state_count(); ++s) {
    if (a.is_accepting(s)) continue;
    bool sink = true;
    for (std::size_t sym = 0; sym < a.symbol_count() && sink; ++sym) sink = a.next(s, sym) == s;
    if (sink) return s;
  }
  return std::nullopt;
}

std::string tuple_text(const std::vector<Digit>& tuple) {
  std::string s = "[";
  for (std::size_t i = 0; i < tuple.size(); ++i) {
    if (i) s += ',';
    s += static_cast<char>('0' + tuple[i]);
  }
  return s + "]";
}

std::string_view trim(std::string_view s) {
  while (!s.empty() && (s.front() == ' ' || s.front() == '\t' || s.front() == '\r')) s.remove_prefix(1);
  while (!s.empty() && (s.back() == ' ' || s.back() == '\t' || s.back() == '\r')) s.remove_suffix(1);
  return s;
}

class LineParser {
 public:
  LineParser(std::string_view text, std::size_t line) : rest_(text), line_(line) {}

  bool done() {
    skip_space();
    return rest_.empty();
  }

  std::size_t number(const char* what) {
    skip_space();
    std::size_t v = 0;
    auto [ptr, ec] = std::from_chars(rest_.data(), rest_.data() + rest_.size(), v);
    if (ec != std::errc{} || ptr == rest_.data()) fail(std::string("expected ") + what);
    rest_.remove_prefix(static_cast<std::size_t>(ptr - rest_.data()));
    return v;
  }

  void expect(std::string_view token) {
    skip_space();
    if (rest_.substr(0, token.size()) != token) fail("expected '" + std::string(token) + "'");
    rest_.remove_prefix(token.size());
  }

  bool peek(char c) {
    skip_space();
    return !rest_.empty() && rest_.front() == c;
  }

  // "{0,1,2}" or "[1,0]"
  std::vector<Digit> group(char open, char close) {
    expect(std::string_view(&open, 1));
    std::vector<Digit> digits;
    while (true) {
      std::size_t d = number("digit");
      if (d > 9) fail("digit out of range");
      digits.push_back(static_cast<Digit>(d));
      skip_space();
      if (peek(',')) {
        rest_.remove_prefix(1);
        continue;
      }
      expect(std::string_view(&close, 1));
      return digits;
    }
  }

  [[noreturn]] void fail(const std::string& msg) const { throw ParseError(line_, msg); }

 private:
  void skip_space() {
    while (!rest_.empty() && (rest_.front() == ' ' || rest_.front() == '\t')) rest_.remove_prefix(1);
  }

  std::string_view rest_;
  std::size_t line_;
};

}  // namespace

std::string to_native(const Automaton& a) {
  std::ostringstream out;
  auto dead = find_dead(a);
  out << "tracks: " << signature_to_string(a.tracks()) << "\n";
  out << "states: " << a.state_count() << "\n";
  out << "initial: " << a.initial() << "\n";
  out << "accepting:";
  for (StateId s = 0; s < a.state_count(); ++s) {
    if (a.is_accepting(s)) out << ' ' << s;
  }
  out << "\n";
  if (dead) out << "dead: " << *dead << "\n";
  for (StateId s = 0; s < a.state_count(); ++s) {
    for (std::size_t sym = 0; sym < a.symbol_count(); ++sym) {
      StateId t = a.next(s, sym);
      if (dead && t == *dead) continue;
      out << s << ' ' << tuple_text(a.tuple_of(sym)) << " -> " << t << "\n";
    }
  }
  return out.str();
}

Automaton from_native(std::string_view text) {
  std::optional<Signature> tracks;
  std::optional<std::size_t> states;
  std::optional<std::size_t> initial;
  std::optional<std::vector<std::size_t>> accepting;
  std::optional<std::size_t> dead;
  struct Edge {
    std::size_t line, from, to;
    std::vector<Digit> tuple;
  };
  std::vector<Edge> edges;

  std::size_t line_no = 0;
  while (!text.empty()) {
    ++line_no;
    auto nl = text.find('\n');
    std::string_view line = text.substr(0, nl);
    text.remove_prefix(nl == std::string_view::npos ? text.size() : nl + 1);
    if (auto hash = line.find('#'); hash != std::string_view::npos) line = line.substr(0, hash);
    line = trim(line);
    if (line.empty()) continue;

    auto colon = line.find(':');
    auto key = colon == std::string_view::npos ? std::string_view{} : trim(line.substr(0, colon));
    LineParser p(colon == std::string_view::npos ? line : line.substr(colon + 1), line_no);
    if (key == "tracks") {
      if (tracks) p.fail("duplicate 'tracks' header");
      Signature sig;
      while (!p.done()) {
        try {
          sig.emplace_back(p.group('{', '}'));
        } catch (const ParseError&) {
          throw;
        } catch (const InputError& e) {
          p.fail(e.what());
        }
      }
      if (sig.empty()) p.fail("no tracks declared");
      tracks = std::move(sig);
    } else if (key == "states") {
      states = p.number("state count");
      if (*states == 0) p.fail("state count must be positive");
    } else if (key == "initial") {
      initial = p.number("initial state");
    } else if (key == "accepting") {
      std::vector<std::size_t> acc;
      while (!p.done()) acc.push_back(p.number("state index"));
      accepting = std::move(acc);
    } else if (key == "dead") {
      dead = p.number("dead state");
    } else if (!key.empty()) {
      p.fail("unknown header '" + std::string(key) + "'");
    } else {
      Edge e{line_no, 0, 0, {}};
      e.from = p.number("source state");
      e.tuple = p.group('[', ']');
      p.expect("->");
      e.to = p.number("target state");
      if (!p.done()) p.fail("trailing text after transition");
      edges.push_back(std::move(e));
    }
    if (!key.empty() && !p.done()) p.fail("trailing text after header");
  }

  if (!tracks) throw ParseError(line_no, "missing 'tracks' header");
  if (!states) throw ParseError(line_no, "missing 'states' header");
  if (!initial) throw ParseError(line_no, "missing 'initial' header");
  if (!accepting) throw ParseError(line_no, "missing 'accepting' header");

  const std::size_t declared = *states;
  if (*initial >= declared) throw ParseError(line_no, "initial state out of range");
  if (dead && *dead >= declared) throw ParseError(line_no, "dead state out of range");

  Automaton probe = Automaton::universal(*tracks);
  const std::size_t symbols = probe.symbol_count();
  constexpr StateId unset = StateId(-1);
  std::vector<StateId> delta(declared * symbols, unset);
  for (const auto& e : edges) {
    if (e.from >= declared || e.to >= declared) throw ParseError(e.line, "state index out of range");
    if (e.tuple.size() != tracks->size()) throw ParseError(e.line, "tuple arity does not match tracks");
    std::size_t sym = 0;
    for (std::size_t t = 0; t < e.tuple.size(); ++t) {
      if (!(*tracks)[t].contains(e.tuple[t])) {
        throw ParseError(e.line, "digit " + std::to_string(e.tuple[t]) + " outside alphabet " +
                                     (*tracks)[t].to_string() + " of track " + std::to_string(t));
      }
    }
    sym = probe.symbol_of(e.tuple);
    auto& slot = delta[e.from * symbols + sym];
    if (slot != unset) throw ParseError(e.line, "duplicate transition");
    slot = static_cast<StateId>(e.to);
  }

  std::size_t total = declared;
  StateId sink = dead ? static_cast<StateId>(*dead) : unset;
  for (auto& t : delta) {
    if (t != unset) continue;
    if (sink == unset) {
      sink = static_cast<StateId>(total++);
    }
    t = sink;
  }
  if (total > declared) delta.resize(total * symbols, sink);

  std::vector<bool> acc(total, false);
  for (std::size_t s : *accepting) {
    if (s >= declared) throw ParseError(line_no, "accepting state out of range");
    acc[s] = true;
  }
  if (dead && acc[*dead]) throw ParseError(line_no, "dead state is marked accepting");
  return Automaton(std::move(*tracks), static_cast<StateId>(*initial), std::move(acc), std::move(delta));
}

std::string to_dot(const Automaton& a, std::string_view name) {
  auto co = a.coreachable();
  std::ostringstream out;
  out << "digraph \"" << name << "\" {\n";
  out << "  rankdir=LR;\n";
  out << "  node [shape=circle];\n";
  out << "  __start [shape=point];\n";
  for (StateId s = 0; s < a.state_count(); ++s) {
    if (!co[s] && s != a.initial()) continue;
    out << "  " << s << " [shape=" << (a.is_accepting(s) ? "doublecircle" : "circle") << "];\n";
  }
  out << "  __start -> " << a.initial() << ";\n";
  for (StateId s = 0; s < a.state_count(); ++s) {
    if (!co[s]) continue;
    std::map<StateId, std::string> labels;
    for (std::size_t sym = 0; sym < a.symbol_count(); ++sym) {
      StateId t = a.next(s, sym);
      if (!co[t]) continue;
      auto& l = labels[t];
      if (!l.empty()) l += ",";
      l += tuple_text(a.tuple_of(sym));
    }
    for (const auto& [t, label] : labels) out << "  " << s << " -> " << t << " [label=\"" << label << "\"];\n";
  }
  out << "}\n";
  return out.str();
}

std::string export_automaton(const Automaton& a, Format format, std::string_view name) {
  return format == Format::native ? to_native(a) : to_dot(a, name);
}

}  // namespace fibnum
