#include "fibnum/automaton.hpp"

#include <algorithm>
#include <deque>
#include <map>
#include <string>

#include "fibnum/errors.hpp"

namespace fibnum {
namespace {

std::size_t symbol_space(const Signature& sig) {
  std::size_t n = 1;
  for (const auto& t : sig) n *= t.size();
  return n;
}

void require_same_signature(const Automaton& a, const Automaton& b) {
  if (a.tracks() != b.tracks()) {
    throw SignatureError("track signatures differ: " + signature_to_string(a.tracks()) + " vs " +
                         signature_to_string(b.tracks()));
  }
}

// Subset-construction input. Only ever built inside this file.
struct Nfa {
  Signature tracks;
  std::vector<StateId> initial;
  std::vector<bool> accepting;
  // edges[state][symbol] -> successor list
  std::vector<std::vector<std::vector<StateId>>> edges;
};

Automaton determinize(const Nfa& nfa) {
  const std::size_t symbols = symbol_space(nfa.tracks);
  std::map<std::vector<StateId>, StateId> ids;
  std::vector<std::vector<StateId>> subsets;
  std::vector<bool> accepting;
  std::vector<StateId> delta;

  auto intern = [&](std::vector<StateId> set) {
    std::sort(set.begin(), set.end());
    set.erase(std::unique(set.begin(), set.end()), set.end());
    auto [it, fresh] = ids.emplace(set, static_cast<StateId>(subsets.size()));
    if (fresh) {
      bool acc = std::any_of(set.begin(), set.end(), [&](StateId s) { return nfa.accepting[s]; });
      subsets.push_back(std::move(set));
      accepting.push_back(acc);
    }
    return it->second;
  };

  intern(nfa.initial);
  std::vector<StateId> next;
  for (std::size_t i = 0; i < subsets.size(); ++i) {
    for (std::size_t sym = 0; sym < symbols; ++sym) {
      next.clear();
      for (StateId s : subsets[i]) {
        const auto& out = nfa.edges[s][sym];
        next.insert(next.end(), out.begin(), out.end());
      }
      delta.push_back(intern(next));
    }
  }
  return Automaton(nfa.tracks, 0, std::move(accepting), std::move(delta));
}

}  // namespace

Automaton::Automaton(Signature tracks, StateId initial, std::vector<bool> accepting,
                     std::vector<StateId> transitions)
    : tracks_(std::move(tracks)),
      symbols_(symbol_space(tracks_)),
      initial_(initial),
      accepting_(std::move(accepting)),
      delta_(std::move(transitions)) {
  if (tracks_.empty()) throw InputError("an automaton needs at least one track");
  if (accepting_.empty()) throw InputError("an automaton needs at least one state");
  if (initial_ >= accepting_.size()) throw InputError("initial state out of range");
  if (delta_.size() != accepting_.size() * symbols_) {
    throw InputError("transition table is not total over states x symbols");
  }
  for (StateId t : delta_) {
    if (t >= accepting_.size()) throw InputError("transition target out of range");
  }
}

Automaton Automaton::universal(Signature tracks) {
  std::size_t n = symbol_space(tracks);
  return Automaton(std::move(tracks), 0, {true}, std::vector<StateId>(n, 0));
}

Automaton Automaton::empty(Signature tracks) {
  std::size_t n = symbol_space(tracks);
  return Automaton(std::move(tracks), 0, {false}, std::vector<StateId>(n, 0));
}

std::size_t Automaton::symbol_of(std::span<const Digit> tuple) const {
  if (tuple.size() != tracks_.size()) {
    throw InputError("tuple arity " + std::to_string(tuple.size()) + " does not match " +
                     std::to_string(tracks_.size()) + " tracks");
  }
  std::size_t sym = 0;
  for (std::size_t t = 0; t < tracks_.size(); ++t) sym = sym * tracks_[t].size() + tracks_[t].index_of(tuple[t]);
  return sym;
}

std::vector<Digit> Automaton::tuple_of(std::size_t symbol) const {
  std::vector<Digit> tuple(tracks_.size());
  for (std::size_t t = tracks_.size(); t-- > 0;) {
    tuple[t] = tracks_[t].digits()[symbol % tracks_[t].size()];
    symbol /= tracks_[t].size();
  }
  return tuple;
}

StateId Automaton::run(const DigitWord& w) const {
  if (w.tracks() != tracks_.size()) {
    throw InputError("word has " + std::to_string(w.tracks()) + " tracks, automaton has " +
                     std::to_string(tracks_.size()));
  }
  StateId s = initial_;
  for (std::size_t i = 0; i < w.length(); ++i) s = next(s, symbol_of(w.tuple(i)));
  return s;
}

bool Automaton::accepts(const DigitWord& w) const { return accepting_[run(w)]; }

std::vector<bool> Automaton::coreachable() const {
  const std::size_t n = state_count();
  std::vector<std::vector<StateId>> preds(n);
  for (StateId s = 0; s < n; ++s) {
    for (std::size_t sym = 0; sym < symbols_; ++sym) preds[next(s, sym)].push_back(s);
  }
  std::vector<bool> live(accepting_);
  std::vector<StateId> stack;
  for (StateId s = 0; s < n; ++s) {
    if (live[s]) stack.push_back(s);
  }
  while (!stack.empty()) {
    StateId s = stack.back();
    stack.pop_back();
    for (StateId p : preds[s]) {
      if (!live[p]) {
        live[p] = true;
        stack.push_back(p);
      }
    }
  }
  return live;
}

StateCounts Automaton::counts() const {
  const std::size_t n = state_count();
  std::vector<bool> reached(n, false);
  std::vector<StateId> stack{initial_};
  reached[initial_] = true;
  while (!stack.empty()) {
    StateId s = stack.back();
    stack.pop_back();
    for (std::size_t sym = 0; sym < symbols_; ++sym) {
      StateId t = next(s, sym);
      if (!reached[t]) {
        reached[t] = true;
        stack.push_back(t);
      }
    }
  }
  auto co = coreachable();
  StateCounts c;
  c.total = n;
  for (StateId s = 0; s < n; ++s) c.live += (reached[s] && co[s]) ? 1 : 0;
  return c;
}

Automaton product(const Automaton& a, const Automaton& b, const std::function<bool(bool, bool)>& combine) {
  require_same_signature(a, b);
  const std::size_t symbols = a.symbol_count();
  std::map<std::pair<StateId, StateId>, StateId> ids;
  std::vector<std::pair<StateId, StateId>> pairs;
  std::vector<bool> accepting;
  std::vector<StateId> delta;

  auto intern = [&](StateId p, StateId q) {
    auto [it, fresh] = ids.emplace(std::pair{p, q}, static_cast<StateId>(pairs.size()));
    if (fresh) {
      pairs.emplace_back(p, q);
      accepting.push_back(combine(a.is_accepting(p), b.is_accepting(q)));
    }
    return it->second;
  };

  intern(a.initial(), b.initial());
  for (std::size_t i = 0; i < pairs.size(); ++i) {
    auto [p, q] = pairs[i];
    for (std::size_t sym = 0; sym < symbols; ++sym) delta.push_back(intern(a.next(p, sym), b.next(q, sym)));
  }
  return Automaton(a.tracks(), 0, std::move(accepting), std::move(delta));
}

Automaton intersect(const Automaton& a, const Automaton& b) {
  return product(a, b, [](bool x, bool y) { return x && y; });
}

Automaton unite(const Automaton& a, const Automaton& b) {
  return product(a, b, [](bool x, bool y) { return x || y; });
}

Automaton complement(const Automaton& a) {
  std::vector<bool> acc(a.accepting());
  acc.flip();
  return Automaton(a.tracks(), a.initial(), std::move(acc), a.transitions());
}

Automaton embed(const Automaton& a, const Signature& target, std::span<const std::size_t> track_map) {
  if (track_map.size() != a.track_count()) throw SignatureError("track map arity does not match automaton");
  for (std::size_t i = 0; i < track_map.size(); ++i) {
    if (track_map[i] >= target.size()) throw SignatureError("track map index out of range");
    if (target[track_map[i]] != a.tracks()[i]) {
      throw SignatureError("alphabet mismatch embedding track " + std::to_string(i) + ": " +
                           a.tracks()[i].to_string() + " vs " + target[track_map[i]].to_string());
    }
  }
  // Tracks of the wider signature are read with `probe` to find symbol ids.
  Automaton probe = Automaton::universal(target);
  const std::size_t symbols = probe.symbol_count();
  std::vector<std::size_t> inner(symbols);
  std::vector<Digit> sub(a.track_count());
  for (std::size_t sym = 0; sym < symbols; ++sym) {
    auto tuple = probe.tuple_of(sym);
    for (std::size_t i = 0; i < track_map.size(); ++i) sub[i] = tuple[track_map[i]];
    inner[sym] = a.symbol_of(sub);
  }
  std::vector<StateId> delta;
  delta.reserve(a.state_count() * symbols);
  for (StateId s = 0; s < a.state_count(); ++s) {
    for (std::size_t sym = 0; sym < symbols; ++sym) delta.push_back(a.next(s, inner[sym]));
  }
  return Automaton(target, a.initial(), a.accepting(), std::move(delta));
}

Automaton project(const Automaton& a, std::span<const std::size_t> removed, Padding padding) {
  std::vector<bool> drop(a.track_count(), false);
  for (std::size_t t : removed) {
    if (t >= a.track_count()) throw SignatureError("projected track index out of range");
    drop[t] = true;
  }
  Signature kept;
  std::vector<std::size_t> kept_index;
  for (std::size_t t = 0; t < a.track_count(); ++t) {
    if (!drop[t]) {
      kept.push_back(a.tracks()[t]);
      kept_index.push_back(t);
    }
  }
  if (kept.empty()) throw SignatureError("cannot project away every track");
  if (kept.size() == a.track_count()) return minimize(a);

  Automaton probe = Automaton::universal(kept);
  Nfa nfa;
  nfa.tracks = kept;
  nfa.initial = {a.initial()};
  nfa.accepting = a.accepting();
  nfa.edges.assign(a.state_count(), std::vector<std::vector<StateId>>(probe.symbol_count()));
  std::vector<Digit> sub(kept.size());
  for (std::size_t sym = 0; sym < a.symbol_count(); ++sym) {
    auto tuple = a.tuple_of(sym);
    for (std::size_t i = 0; i < kept_index.size(); ++i) sub[i] = tuple[kept_index[i]];
    std::size_t target_sym = probe.symbol_of(sub);
    for (StateId s = 0; s < a.state_count(); ++s) nfa.edges[s][target_sym].push_back(a.next(s, sym));
  }
  Automaton det = determinize(nfa);
  if (padding == Padding::stabilize) det = zero_stabilize(det);
  return minimize(det);
}

Automaton project(const Automaton& a, std::size_t removed, Padding padding) {
  const std::size_t one[] = {removed};
  return project(a, one, padding);
}

Automaton reverse(const Automaton& a) {
  Nfa nfa;
  nfa.tracks = a.tracks();
  nfa.accepting.assign(a.state_count(), false);
  nfa.accepting[a.initial()] = true;
  nfa.edges.assign(a.state_count(), std::vector<std::vector<StateId>>(a.symbol_count()));
  for (StateId s = 0; s < a.state_count(); ++s) {
    if (a.is_accepting(s)) nfa.initial.push_back(s);
    for (std::size_t sym = 0; sym < a.symbol_count(); ++sym) nfa.edges[a.next(s, sym)][sym].push_back(s);
  }
  return minimize(determinize(nfa));
}

Automaton minimize(const Automaton& a) {
  const std::size_t symbols = a.symbol_count();

  // Restrict to reachable states first.
  std::vector<StateId> order{a.initial()};
  std::vector<StateId> local(a.state_count(), StateId(-1));
  local[a.initial()] = 0;
  for (std::size_t i = 0; i < order.size(); ++i) {
    for (std::size_t sym = 0; sym < symbols; ++sym) {
      StateId t = a.next(order[i], sym);
      if (local[t] == StateId(-1)) {
        local[t] = static_cast<StateId>(order.size());
        order.push_back(t);
      }
    }
  }
  const std::size_t n = order.size();

  // Moore refinement: split blocks by (block, successor blocks) signature
  // until the number of blocks is stable.
  std::vector<std::size_t> block(n);
  for (std::size_t i = 0; i < n; ++i) block[i] = a.is_accepting(order[i]) ? 1 : 0;
  std::size_t blocks = 0;
  {
    bool any_acc = false, any_rej = false;
    for (std::size_t i = 0; i < n; ++i) (block[i] ? any_acc : any_rej) = true;
    blocks = (any_acc ? 1 : 0) + (any_rej ? 1 : 0);
  }
  std::vector<std::size_t> key(symbols + 1);
  while (true) {
    std::map<std::vector<std::size_t>, std::size_t> sigs;
    std::vector<std::size_t> refined(n);
    for (std::size_t i = 0; i < n; ++i) {
      key[0] = block[i];
      for (std::size_t sym = 0; sym < symbols; ++sym) key[sym + 1] = block[local[a.next(order[i], sym)]];
      refined[i] = sigs.emplace(key, sigs.size()).first->second;
    }
    block.swap(refined);
    if (sigs.size() == blocks) break;
    blocks = sigs.size();
  }

  // Canonical numbering: BFS over blocks from the initial block.
  std::vector<std::size_t> representative(blocks, n);
  for (std::size_t i = 0; i < n; ++i) {
    if (representative[block[i]] == n) representative[block[i]] = i;
  }
  std::vector<StateId> canon(blocks, StateId(-1));
  std::vector<std::size_t> queue{block[0]};
  canon[block[0]] = 0;
  std::vector<bool> accepting;
  std::vector<StateId> delta;
  for (std::size_t qi = 0; qi < queue.size(); ++qi) {
    std::size_t rep = representative[queue[qi]];
    accepting.push_back(a.is_accepting(order[rep]));
    for (std::size_t sym = 0; sym < symbols; ++sym) {
      std::size_t b = block[local[a.next(order[rep], sym)]];
      if (canon[b] == StateId(-1)) {
        canon[b] = static_cast<StateId>(queue.size());
        queue.push_back(b);
      }
      delta.push_back(canon[b]);
    }
  }
  return Automaton(a.tracks(), 0, std::move(accepting), std::move(delta));
}

Automaton zero_stabilize(const Automaton& a) {
  // Zero edges form a functional graph; walk it from every state.
  std::vector<bool> acc(a.state_count(), false);
  std::vector<bool> seen(a.state_count());
  for (StateId s = 0; s < a.state_count(); ++s) {
    std::fill(seen.begin(), seen.end(), false);
    for (StateId q = s; !seen[q]; q = a.next(q, 0)) {
      seen[q] = true;
      if (a.is_accepting(q)) {
        acc[s] = true;
        break;
      }
    }
  }
  return Automaton(a.tracks(), a.initial(), std::move(acc), a.transitions());
}

bool is_empty(const Automaton& a) { return !shortest_accepted(a).has_value(); }

bool equivalent(const Automaton& a, const Automaton& b) {
  return is_empty(product(a, b, [](bool x, bool y) { return x != y; }));
}

std::optional<DigitWord> shortest_accepted(const Automaton& a) {
  const std::size_t n = a.state_count();
  std::vector<StateId> parent(n, StateId(-1));
  std::vector<std::size_t> via(n, 0);
  std::vector<bool> seen(n, false);
  std::deque<StateId> queue{a.initial()};
  seen[a.initial()] = true;
  while (!queue.empty()) {
    StateId s = queue.front();
    queue.pop_front();
    if (a.is_accepting(s)) {
      std::vector<std::size_t> syms;
      for (StateId q = s; q != a.initial(); q = parent[q]) syms.push_back(via[q]);
      DigitWord w(a.track_count());
      for (auto it = syms.rbegin(); it != syms.rend(); ++it) w.push_back(a.tuple_of(*it));
      return w;
    }
    for (std::size_t sym = 0; sym < a.symbol_count(); ++sym) {
      StateId t = a.next(s, sym);
      if (!seen[t]) {
        seen[t] = true;
        parent[t] = s;
        via[t] = sym;
        queue.push_back(t);
      }
    }
  }
  return std::nullopt;
}

}  // namespace fibnum
