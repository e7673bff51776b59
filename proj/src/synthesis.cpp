#include "fibnum/synthesis.hpp"

#include <algorithm>
#include <array>
#include <cmath>
#include <map>
#include <memory>
#include <mutex>
#include <string>

#include "fibnum/errors.hpp"
#include "fibnum/numeration.hpp"
#include "fibnum/recognizers.hpp"

namespace fibnum {

Signature ValueRelationSpec::signature() const {
  Signature sig;
  for (const auto& t : tracks) sig.push_back(t.alphabet);
  return sig;
}

namespace {

constexpr long double kPhi = 1.6180339887498948482045868343656381L;
// Slack on every floating comparison; residual components are tiny integers.
constexpr long double kSlack = 1e-9L;

const std::vector<std::int64_t>& small_fibs() {
  static const std::vector<std::int64_t> table = [] {
    std::vector<std::int64_t> f{0, 1};
    while (f.size() < 90) f.push_back(f[f.size() - 1] + f[f.size() - 2]);
    return f;
  }();
  return table;
}

// Component of (a,b) along the expanding eigenvector of the residual map.
// It evolves as p' = -phi*p + (e' - phi*e), so once |p| exceeds
// phi * max|e' - phi*e| it grows without bound and (0,0) is unreachable.
long double expanding_part(std::int64_t a, std::int64_t b) { return a - (kPhi - 1) * b; }

struct ResidualKey {
  std::size_t position;  // == prefix length for position-free states
  std::int64_t a;
  std::int64_t b;

  auto operator<=>(const ResidualKey&) const = default;
};

class ResidualBuilder {
 public:
  ResidualBuilder(const ValueRelationSpec& spec, int bound) : spec_(spec), bound_(bound), sig_(spec.signature()) {
    if (spec.tracks.size() < 2) throw InputError("a value relation needs at least two tracks");
    if (std::abs(spec.constant) > 2) throw InputError("value relation constant must satisfy |c| <= 2");
    if (bound < 4) throw InputError("residual bound must be at least 4");
    for (const auto& t : spec.tracks) {
      if (t.coefficient != 1 && t.coefficient != -1) throw InputError("track coefficients must be +1 or -1");
      if (t.shift != 0 && t.shift != 1) throw InputError("track shifts must be 0 or 1");
    }
    Automaton probe = Automaton::universal(sig_);
    symbols_ = probe.symbol_count();
    long double worst = 0;
    for (std::size_t sym = 0; sym < symbols_; ++sym) {
      auto tuple = probe.tuple_of(sym);
      std::int64_t e = 0, es = 0;
      for (std::size_t j = 0; j < tuple.size(); ++j) {
        auto c = static_cast<std::int64_t>(spec.tracks[j].coefficient) * tuple[j];
        (spec.tracks[j].shift == 0 ? e : es) += c;
      }
      plain_.push_back(e);
      shifted_.push_back(es);
      worst = std::max(worst, std::fabs(static_cast<long double>(es) - kPhi * e));
    }
    escape_ = kPhi * worst;
    // Past the prefix two representatives of one pending value differ by a
    // kernel vector whose expanding part exceeds 2*escape, so the kept
    // representative is unique and a zero value means (0,0).
    const auto& f = small_fibs();
    while (f[prefix_ + 3] + (kPhi - 1) * f[prefix_ + 2] <= 2 * escape_ + kSlack) ++prefix_;
  }

  ResidualSynthesis run() {
    ResidualSynthesis out{Automaton::empty(sig_)};
    out.tagged_prefix = prefix_;

    std::vector<ResidualKey> keys;
    std::map<ResidualKey, StateId> ids;
    std::vector<StateId> delta;
    constexpr StateId dead = StateId(-1);

    auto intern = [&](const ResidualKey& k) {
      auto [it, fresh] = ids.emplace(k, static_cast<StateId>(keys.size()));
      if (fresh) keys.push_back(k);
      return it->second;
    };

    std::optional<ResidualKey> start = admit(0, spec_.constant, 0, true, out);
    if (!start) return out;  // empty relation
    intern(*start);

    for (std::size_t i = 0; i < keys.size(); ++i) {
      const ResidualKey cur = keys[i];
      for (std::size_t sym = 0; sym < symbols_; ++sym) {
        auto nxt = residual_step({cur.a, cur.b}, plain_[sym], shifted_[sym]);
        auto key = admit(std::min(cur.position + 1, prefix_), nxt.a, nxt.b, cur.position < prefix_, out);
        delta.push_back(key ? intern(*key) : dead);
      }
    }

    const auto& f = small_fibs();
    std::vector<bool> accepting;
    for (const auto& k : keys) {
      if (k.position < prefix_) {
        accepting.push_back(k.a * f[k.position + 2] + k.b * f[k.position + 3] == 0);
      } else {
        accepting.push_back(k.a == 0 && k.b == 0);
        ++out.residual_states;
        out.largest_component = std::max({out.largest_component, std::abs(k.a), std::abs(k.b)});
      }
    }
    const auto sink = static_cast<StateId>(keys.size());
    accepting.push_back(false);
    for (auto& t : delta) {
      if (t == dead) t = sink;
    }
    delta.insert(delta.end(), symbols_, sink);
    out.automaton = minimize(Automaton(sig_, 0, std::move(accepting), std::move(delta)));
    return out;
  }

 private:
  // Key for a state at `position` (clamped to the prefix length), or nullopt
  // if it is dead. `entering` marks a move from the prefix (or the start
  // state itself) into the position-free layer.
  std::optional<ResidualKey> admit(std::size_t position, std::int64_t a, std::int64_t b, bool entering,
                                   ResidualSynthesis& out) {
    if (position < prefix_) return ResidualKey{position, a, b};
    if (entering) {
      // Move to the representative with the smallest expanding part.
      const auto& f = small_fibs();
      long double step = f[prefix_ + 3] + (kPhi - 1) * f[prefix_ + 2];
      auto t = static_cast<std::int64_t>(std::llround(expanding_part(a, b) / step));
      a -= t * f[prefix_ + 3];
      b += t * f[prefix_ + 2];
    }
    if (grows(a, b)) return std::nullopt;
    if (std::abs(a) > bound_ || std::abs(b) > bound_) {
      if (!certified_dead(a, b, 2)) {
        throw SynthesisError("residual state (" + std::to_string(a) + "," + std::to_string(b) +
                             ") escapes bound " + std::to_string(bound_) +
                             " and is not provably dead; rerun with a larger bound");
      }
      ++out.certified_pruned;
      return std::nullopt;
    }
    return ResidualKey{prefix_, a, b};
  }

  bool grows(std::int64_t a, std::int64_t b) const { return std::fabs(expanding_part(a, b)) > escape_ + kSlack; }

  bool certified_dead(std::int64_t a, std::int64_t b, int depth) const {
    if (grows(a, b)) return true;
    if (depth == 0 || (a == 0 && b == 0)) return false;
    for (std::size_t sym = 0; sym < symbols_; ++sym) {
      auto n = residual_step({a, b}, plain_[sym], shifted_[sym]);
      if (!certified_dead(n.a, n.b, depth - 1)) return false;
    }
    return true;
  }

  const ValueRelationSpec& spec_;
  int bound_;
  Signature sig_;
  std::size_t symbols_ = 0;
  std::vector<std::int64_t> plain_, shifted_;
  long double escape_ = 0;
  std::size_t prefix_ = 0;
};

Automaton equal_value_relation(int shift_x, int constant, TrackAlphabet alphabet) {
  ValueRelationSpec spec;
  spec.tracks = {{alphabet, +1, shift_x}, {alphabet, -1, 0}};
  spec.constant = constant;
  return build_value_relation(spec);
}

}  // namespace

ResidualSynthesis synthesize_value_relation(const ValueRelationSpec& spec, int bound) {
  return ResidualBuilder(spec, bound).run();
}

Automaton build_value_relation(const ValueRelationSpec& spec, int bound) {
  return synthesize_value_relation(spec, bound).automaton;
}

VariableFrame::VariableFrame(std::vector<Variable> vars) : vars_(std::move(vars)) {
  for (const auto& v : vars_) signature_.push_back(v.alphabet);
}

std::size_t VariableFrame::index(std::string_view name) const {
  for (std::size_t i = 0; i < vars_.size(); ++i) {
    if (vars_[i].name == name) return i;
  }
  throw InputError("unknown variable '" + std::string(name) + "'");
}

Automaton VariableFrame::lift(const Automaton& atom, std::span<const std::string> vars) const {
  std::vector<std::size_t> map;
  for (const auto& v : vars) map.push_back(index(v));
  return embed(atom, signature_, map);
}

Automaton VariableFrame::exists(const Automaton& a, std::initializer_list<std::string> vars, Padding padding) const {
  std::vector<std::size_t> removed;
  for (const auto& v : vars) removed.push_back(index(v));
  return project(a, removed, padding);
}

Automaton build_zeck_add() {
  const auto bin = TrackAlphabet::binary();
  ValueRelationSpec spec;
  spec.tracks = {{bin, +1, 0}, {bin, +1, 0}, {bin, -1, 0}};
  VariableFrame f({{"x", bin}, {"y", bin}, {"z", bin}});
  Automaton zeckval = build_zeckval();
  Automaton r = build_value_relation(spec);
  for (const char* v : {"x", "y", "z"}) r = minimize(intersect(r, f.lift(zeckval, {v})));
  return r;
}

Automaton build_fibcg() {
  // fibcg(u,x) := cgval(x) & Ey,z cgsplit(x,y,z) & u = y + z   (lsd Zeckendorf)
  const auto bin = TrackAlphabet::binary();
  const auto ter = TrackAlphabet::ternary();
  VariableFrame f({{"u", bin}, {"x", ter}, {"y", bin}, {"z", bin}});
  Automaton body = f.lift(build_cgval(), {"x"});
  body = minimize(intersect(body, f.lift(build_cgsplit(), {"x", "y", "z"})));
  body = minimize(intersect(body, f.lift(build_zeck_add(), {"y", "z", "u"})));
  return f.exists(body, {"y", "z"});
}

Automaton build_cg_add() {
  const auto ter = TrackAlphabet::ternary();
  ValueRelationSpec spec;
  spec.tracks = {{ter, +1, 0}, {ter, +1, 0}, {ter, -1, 0}};
  VariableFrame f({{"x", ter}, {"y", ter}, {"z", ter}});
  Automaton cgval = build_cgval();
  Automaton r = build_value_relation(spec);
  for (const char* v : {"x", "y", "z"}) r = minimize(intersect(r, f.lift(cgval, {v})));
  return r;
}

Automaton build_fibrep(DigitOrder order) {
  const auto bin = TrackAlphabet::binary();
  VariableFrame f({{"x", bin}, {"y", bin}});
  Automaton lsd = minimize(intersect(equal_value_relation(0, 0, bin), f.lift(build_zeckval(), {"y"})));
  return order == DigitOrder::lsd ? lsd : reverse(lsd);
}

Automaton build_cgrep() {
  // cgrep(r,z) := Es,t,u,v,w cgsplit(r,s,t) & fibreplsd(s,u) & fibreplsd(t,v)
  //               & w = u + v & fibcg(w,z)
  const auto bin = TrackAlphabet::binary();
  const auto ter = TrackAlphabet::ternary();
  VariableFrame f({{"r", ter}, {"s", bin}, {"t", bin}, {"u", bin}, {"v", bin}, {"w", bin}, {"z", ter}});
  Automaton fibrep = cached_automaton("fibrep-lsd");
  Automaton body = f.lift(build_cgsplit(), {"r", "s", "t"});
  body = minimize(intersect(body, f.lift(fibrep, {"s", "u"})));
  body = minimize(intersect(body, f.lift(fibrep, {"t", "v"})));
  body = minimize(intersect(body, f.lift(cached_automaton("zeckadd"), {"u", "v", "w"})));
  body = minimize(intersect(body, f.lift(cached_automaton("fibcg"), {"w", "z"})));
  return f.exists(body, {"s", "t", "u", "v", "w"});
}

Automaton build_cgrep_direct() {
  const auto ter = TrackAlphabet::ternary();
  VariableFrame f({{"r", ter}, {"z", ter}});
  return minimize(intersect(equal_value_relation(0, 0, ter), f.lift(build_cgval(), {"z"})));
}

namespace {

// One track over {0,1}: 0 = nothing seen, next position even; 1 = nothing
// seen, next odd; 2 = lowest 1 at an even position; 3 = lowest 1 at odd.
Automaton lowest_one_parity(bool even) {
  std::vector<StateId> delta = {1, 2, 0, 3, 2, 2, 3, 3};
  std::vector<bool> acc = even ? std::vector<bool>{false, false, true, false}
                               : std::vector<bool>{true, true, false, true};
  return Automaton({TrackAlphabet::binary()}, 0, std::move(acc), std::move(delta));
}

void self_check_phin(const Automaton& phin) {
  const auto bin = TrackAlphabet::binary();
  // Functional: phin(x,s) & phin(x,s') & s != s' is empty.
  VariableFrame f({{"x", bin}, {"s", bin}, {"t", bin}});
  Automaton differ = complement(minimize(f.lift(equal_value_relation(0, 0, bin), {"s", "t"})));
  Automaton clash = intersect(intersect(f.lift(phin, {"x", "s"}), f.lift(phin, {"x", "t"})), differ);
  if (!is_empty(clash)) throw SynthesisError("phin relation is not functional");
  // Total on valid inputs.
  VariableFrame g({{"x", bin}, {"s", bin}});
  Automaton covered = g.exists(phin, {"s"});
  if (!is_empty(intersect(build_zeckval(), complement(covered)))) {
    throw SynthesisError("phin relation misses some Zeckendorf input");
  }
  for (unsigned n = 0; n <= 2000; ++n) {
    const DigitWord in[] = {zeck_encode(n)};
    auto out = apply_relation(phin, in, 1);
    if (out.size() != 1 || out.front() != zeck_encode(phi_floor(n))) {
      throw SynthesisError("phin disagrees with floor(phi n) at n = " + std::to_string(n));
    }
  }
}

}  // namespace

Automaton build_phin() {
  // floor(phi n) = value(x, shift 1) - delta, delta = 1 iff the lowest 1 of x
  // sits at an even position. Checked against the isqrt oracle below.
  const auto bin = TrackAlphabet::binary();
  VariableFrame f({{"x", bin}, {"s", bin}});
  Automaton r = Automaton::empty(f.signature());
  for (int delta : {0, 1}) {
    Automaton part = intersect(equal_value_relation(1, -delta, bin), f.lift(lowest_one_parity(delta == 1), {"x"}));
    r = minimize(unite(r, part));
  }
  Automaton zeckval = build_zeckval();
  r = minimize(intersect(r, f.lift(zeckval, {"x"})));
  r = minimize(intersect(r, f.lift(zeckval, {"s"})));
  self_check_phin(r);
  return r;
}

Automaton build_cgphin() {
  // cgphin(u,v) := Ex,y phin(x,y) & fibcg(x,u) & fibcg(y,v)
  const auto bin = TrackAlphabet::binary();
  const auto ter = TrackAlphabet::ternary();
  VariableFrame f({{"u", ter}, {"v", ter}, {"x", bin}, {"y", bin}});
  const Automaton& fibcg = cached_automaton("fibcg");
  Automaton body = f.lift(cached_automaton("phin"), {"x", "y"});
  body = minimize(intersect(body, f.lift(fibcg, {"x", "u"})));
  body = minimize(intersect(body, f.lift(fibcg, {"y", "v"})));
  return f.exists(body, {"x", "y"});
}

std::vector<DigitWord> apply_relation(const Automaton& r, std::span<const DigitWord> inputs, std::size_t output_track) {
  const std::size_t tracks = r.track_count();
  if (output_track >= tracks) throw InputError("output track out of range");
  if (inputs.size() + 1 != tracks) {
    throw InputError("expected " + std::to_string(tracks - 1) + " input words, got " + std::to_string(inputs.size()));
  }
  std::size_t n = 0;
  for (std::size_t i = 0; i < inputs.size(); ++i) {
    if (inputs[i].tracks() != 1) throw InputError("input words must be single-track");
    const auto& alpha = r.tracks()[i < output_track ? i : i + 1];
    for (Digit d : inputs[i].flat()) {
      if (!alpha.contains(d)) {
        throw InputError("input digit " + std::to_string(d) + " outside alphabet " + alpha.to_string());
      }
    }
    n = std::max(n, inputs[i].length());
  }
  const std::size_t limit = n + r.state_count();
  const auto out_digits = r.tracks()[output_track].digits();

  // sym[i][j]: symbol at position i (clamped to n) with output digit j.
  std::vector<std::vector<std::size_t>> sym(n + 1, std::vector<std::size_t>(out_digits.size()));
  std::vector<Digit> tuple(tracks);
  for (std::size_t i = 0; i <= n; ++i) {
    for (std::size_t k = 0, in = 0; k < tracks; ++k) {
      if (k == output_track) continue;
      const auto& w = inputs[in++];
      tuple[k] = i < w.length() ? w.flat()[i] : 0;
    }
    for (std::size_t j = 0; j < out_digits.size(); ++j) {
      tuple[output_track] = out_digits[j];
      sym[i][j] = r.symbol_of(tuple);
    }
  }
  auto symbol_at = [&](std::size_t i, std::size_t j) { return sym[std::min(i, n)][j]; };

  // good[i][q]: from state q at position i some completion ends accepted at
  // a position in [n, limit].
  const std::size_t states = r.state_count();
  std::vector<std::vector<bool>> good(limit + 1, std::vector<bool>(states, false));
  for (StateId q = 0; q < states; ++q) good[limit][q] = r.is_accepting(q);
  for (std::size_t i = limit; i-- > 0;) {
    for (StateId q = 0; q < states; ++q) {
      bool ok = i >= n && r.is_accepting(q);
      for (std::size_t j = 0; j < out_digits.size() && !ok; ++j) ok = good[i + 1][r.next(q, symbol_at(i, j))];
      good[i][q] = ok;
    }
  }

  std::vector<DigitWord> found;
  if (!good[0][r.initial()]) return found;
  constexpr std::size_t kMaxVisits = 1u << 22;
  std::size_t visits = 0;
  std::vector<Digit> out;
  // Iterative DFS: frame = (position, state, next digit index to try).
  struct Frame {
    std::size_t pos;
    StateId state;
    std::size_t next;
  };
  std::vector<Frame> stack{{0, r.initial(), 0}};
  if (r.is_accepting(r.initial()) && n == 0) found.push_back(DigitWord(1));
  while (!stack.empty()) {
    auto& top = stack.back();
    if (top.pos == limit || top.next == out_digits.size()) {
      stack.pop_back();
      if (!out.empty()) out.pop_back();
      continue;
    }
    std::size_t j = top.next++;
    StateId q = r.next(top.state, symbol_at(top.pos, j));
    std::size_t pos = top.pos + 1;
    if (!good[pos][q]) continue;
    if (++visits > kMaxVisits) throw RelationError("relation has too many outputs for this input");
    out.push_back(out_digits[j]);
    if (pos >= n && r.is_accepting(q)) found.push_back(DigitWord::from_digits(out).stripped());
    stack.push_back({pos, q, 0});
  }
  std::sort(found.begin(), found.end());
  found.erase(std::unique(found.begin(), found.end()), found.end());
  return found;
}

DigitWord apply_function(const Automaton& r, std::span<const DigitWord> inputs, std::size_t output_track) {
  auto out = apply_relation(r, inputs, output_track);
  if (out.size() != 1) {
    throw RelationError("relation-not-functional: " + std::to_string(out.size()) + " outputs for this input");
  }
  return std::move(out.front());
}

namespace {

constexpr std::array<std::string_view, 13> kNames = {
    "zeckval", "cgval", "cg0", "cgeq", "cgsplit", "zeckadd", "fibcg",
    "cgadd", "fibrep-lsd", "fibrep-msd", "cgrep", "phin", "cgphin",
};

}  // namespace

std::span<const std::string_view> automaton_names() { return kNames; }

Automaton build_named(std::string_view name) {
  if (name == "zeckval") return build_zeckval();
  if (name == "cgval") return build_cgval();
  if (name == "cg0") return build_cg0();
  if (name == "cgeq") return build_cgeq();
  if (name == "cgsplit") return build_cgsplit();
  if (name == "zeckadd") return build_zeck_add();
  if (name == "fibcg") return build_fibcg();
  if (name == "cgadd") return build_cg_add();
  if (name == "fibrep-lsd") return build_fibrep(DigitOrder::lsd);
  if (name == "fibrep-msd") return build_fibrep(DigitOrder::msd);
  if (name == "cgrep") return build_cgrep();
  if (name == "phin") return build_phin();
  if (name == "cgphin") return build_cgphin();
  throw InputError("unknown automaton '" + std::string(name) + "'");
}

const Automaton& cached_automaton(std::string_view name) {
  static std::mutex mutex;
  static std::map<std::string, std::unique_ptr<Automaton>, std::less<>> cache;
  {
    std::lock_guard lock(mutex);
    if (auto it = cache.find(name); it != cache.end()) return *it->second;
  }
  // Built unlocked: builders fetch their own dependencies from the cache.
  auto built = std::make_unique<Automaton>(build_named(name));
  std::lock_guard lock(mutex);
  auto [it, fresh] = cache.emplace(std::string(name), std::move(built));
  return *it->second;
}

}  // namespace fibnum
