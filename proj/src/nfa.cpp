#include "rpqdet/nfa.hpp"

#include <algorithm>
#include <deque>
#include <map>

#include "rpqdet/error.hpp"

namespace rpqdet {
namespace {

struct Thompson {
  struct State {
    std::vector<std::uint32_t> eps;
    std::vector<Nfa::Transition> moves;
  };
  std::vector<State> states;
  const Alphabet& alphabet;

  explicit Thompson(const Alphabet& a) : alphabet(a) {}

  std::uint32_t fresh() {
    states.emplace_back();
    return static_cast<std::uint32_t>(states.size() - 1);
  }

  std::uint32_t index(Symbol s) const {
    auto i = alphabet.index_of(s);
    if (!i) {
      throw Error(ErrorCode::ForeignSymbol,
                  "symbol '" + s.name() + "' is not in the automaton alphabet");
    }
    return static_cast<std::uint32_t>(*i);
  }

  std::pair<std::uint32_t, std::uint32_t> build(const Regex& r) {
    switch (r.kind()) {
      case Regex::Kind::Empty: {
        auto s = fresh(), e = fresh();
        return {s, e};
      }
      case Regex::Kind::Epsilon: {
        auto s = fresh(), e = fresh();
        states[s].eps.push_back(e);
        return {s, e};
      }
      case Regex::Kind::Literal: {
        auto s = fresh(), e = fresh();
        states[s].moves.push_back({index(r.symbol()), e});
        return {s, e};
      }
      case Regex::Kind::Class: {
        auto s = fresh(), e = fresh();
        for (Symbol sym : r.symbols()) states[s].moves.push_back({index(sym), e});
        return {s, e};
      }
      case Regex::Kind::Union: {
        auto [s1, e1] = build(r.left());
        auto [s2, e2] = build(r.right());
        auto s = fresh(), e = fresh();
        states[s].eps = {s1, s2};
        states[e1].eps.push_back(e);
        states[e2].eps.push_back(e);
        return {s, e};
      }
      case Regex::Kind::Concat: {
        auto [s1, e1] = build(r.left());
        auto [s2, e2] = build(r.right());
        states[e1].eps.push_back(s2);
        return {s1, e2};
      }
      case Regex::Kind::Star: {
        auto [s1, e1] = build(r.inner());
        auto s = fresh(), e = fresh();
        states[s].eps = {s1, e};
        states[e1].eps.push_back(s1);
        states[e1].eps.push_back(e);
        return {s, e};
      }
      case Regex::Kind::Plus: {
        auto [s1, e1] = build(r.inner());
        auto s = fresh(), e = fresh();
        states[s].eps.push_back(s1);
        states[e1].eps.push_back(s1);
        states[e1].eps.push_back(e);
        return {s, e};
      }
    }
    throw Error(ErrorCode::InvalidArgument, "unknown regex node");
  }
};

using StateSet = std::vector<Nfa::State>;

// post(set, symbol), restricted to `allowed` when given.
StateSet post(const Nfa& n, const StateSet& from, std::uint32_t symbol,
              const std::vector<char>* allowed) {
  StateSet out;
  for (Nfa::State s : from) {
    for (const auto& t : n.transitions(s, symbol)) {
      if (allowed && !(*allowed)[t.target]) continue;
      out.push_back(t.target);
    }
  }
  std::sort(out.begin(), out.end());
  out.erase(std::unique(out.begin(), out.end()), out.end());
  return out;
}

// finish[k][s] != 0 iff some word of length exactly k leads from s to acceptance.
std::vector<std::vector<char>> finish_table(const Nfa& n, std::size_t max_len) {
  std::vector<std::vector<char>> finish(max_len + 1, std::vector<char>(n.state_count(), 0));
  for (Nfa::State s = 0; s < n.state_count(); ++s) finish[0][s] = n.accepting(s) ? 1 : 0;
  for (std::size_t k = 1; k <= max_len; ++k) {
    for (Nfa::State s = 0; s < n.state_count(); ++s) {
      for (const auto& t : n.transitions(s)) {
        if (finish[k - 1][t.target]) {
          finish[k][s] = 1;
          break;
        }
      }
    }
  }
  return finish;
}

}  // namespace

Nfa::Nfa() : alphabet_(std::make_shared<Alphabet>()), transitions_(1), accepting_(1, 0) {}

std::span<const Nfa::Transition> Nfa::transitions(State s, std::uint32_t symbol) const {
  const auto& ts = transitions_[s];
  auto lo = std::lower_bound(ts.begin(), ts.end(), Transition{symbol, 0});
  auto hi = lo;
  while (hi != ts.end() && hi->symbol == symbol) ++hi;
  return {lo, hi};
}

Nfa compile_nfa(const Regex& r, const Alphabet& alphabet) {
  return compile_nfa(r, std::make_shared<const Alphabet>(alphabet));
}

Nfa compile_nfa(const Regex& r, std::shared_ptr<const Alphabet> alphabet) {
  Thompson th(*alphabet);
  auto [start, end] = th.build(r);
  const std::size_t count = th.states.size();

  // epsilon closures
  std::vector<std::vector<std::uint32_t>> closure(count);
  for (std::uint32_t s = 0; s < count; ++s) {
    std::vector<char> seen(count, 0);
    std::vector<std::uint32_t> stack{s};
    seen[s] = 1;
    while (!stack.empty()) {
      auto q = stack.back();
      stack.pop_back();
      closure[s].push_back(q);
      for (auto t : th.states[q].eps) {
        if (!seen[t]) {
          seen[t] = 1;
          stack.push_back(t);
        }
      }
    }
  }
  std::vector<std::vector<Nfa::Transition>> moves(count);
  std::vector<char> accepting(count, 0);
  for (std::uint32_t s = 0; s < count; ++s) {
    for (auto q : closure[s]) {
      if (q == end) accepting[s] = 1;
      for (const auto& t : th.states[q].moves) moves[s].push_back(t);
    }
    std::sort(moves[s].begin(), moves[s].end());
    moves[s].erase(std::unique(moves[s].begin(), moves[s].end()), moves[s].end());
  }

  // trim: forward reachable from start, backward co-reachable to acceptance
  std::vector<char> fwd(count, 0);
  std::deque<std::uint32_t> queue{start};
  fwd[start] = 1;
  std::vector<std::uint32_t> order;
  while (!queue.empty()) {
    auto s = queue.front();
    queue.pop_front();
    order.push_back(s);
    for (const auto& t : moves[s]) {
      if (!fwd[t.target]) {
        fwd[t.target] = 1;
        queue.push_back(t.target);
      }
    }
  }
  std::vector<std::vector<std::uint32_t>> rev(count);
  for (auto s : order) {
    for (const auto& t : moves[s]) rev[t.target].push_back(s);
  }
  std::vector<char> bwd(count, 0);
  for (auto s : order) {
    if (accepting[s]) {
      bwd[s] = 1;
      queue.push_back(s);
    }
  }
  while (!queue.empty()) {
    auto s = queue.front();
    queue.pop_front();
    for (auto p : rev[s]) {
      if (!bwd[p]) {
        bwd[p] = 1;
        queue.push_back(p);
      }
    }
  }

  Nfa out;
  out.alphabet_ = std::move(alphabet);
  out.construction_states_ = count;
  if (!bwd[start]) return out;  // empty language

  std::vector<std::int64_t> renum(count, -1);
  std::uint32_t next = 0;
  for (auto s : order) {
    if (bwd[s]) renum[s] = next++;
  }
  out.empty_ = false;
  out.transitions_.assign(next, {});
  out.accepting_.assign(next, 0);
  for (auto s : order) {
    if (renum[s] < 0) continue;
    auto ns = static_cast<std::uint32_t>(renum[s]);
    out.accepting_[ns] = accepting[s];
    for (const auto& t : moves[s]) {
      if (renum[t.target] >= 0) {
        out.transitions_[ns].push_back({t.symbol, static_cast<std::uint32_t>(renum[t.target])});
      }
    }
    std::sort(out.transitions_[ns].begin(), out.transitions_[ns].end());
  }
  for (const auto& t : out.transitions_[0]) {
    if (out.initial_symbols_.empty() || out.initial_symbols_.back() != t.symbol) {
      out.initial_symbols_.push_back(t.symbol);
    }
  }
  return out;
}

bool accepts(const Nfa& n, const Word& w) {
  StateSet cur{n.start()};
  for (Symbol s : w) {
    auto idx = n.alphabet().index_of(s);
    if (!idx) {
      throw Error(ErrorCode::ForeignSymbol,
                  "symbol '" + s.name() + "' is not in the automaton alphabet");
    }
    cur = post(n, cur, static_cast<std::uint32_t>(*idx), nullptr);
    if (cur.empty()) return false;
  }
  return std::any_of(cur.begin(), cur.end(), [&](Nfa::State s) { return n.accepting(s); });
}

void for_each_word(const Nfa& n, std::size_t max_len,
                   const std::function<bool(const Word&)>& visit) {
  if (n.empty_language()) return;
  const auto finish = finish_table(n, max_len);
  const auto sigma = static_cast<std::uint32_t>(n.alphabet().size());
  Word word;
  bool stop = false;

  // depth-first in alphabet order produces lexicographic order for one length
  std::function<void(const StateSet&, std::size_t)> dfs = [&](const StateSet& cur,
                                                              std::size_t remaining) {
    if (remaining == 0) {
      if (!visit(word)) stop = true;
      return;
    }
    for (std::uint32_t a = 0; a < sigma && !stop; ++a) {
      StateSet nxt = post(n, cur, a, &finish[remaining - 1]);
      if (nxt.empty()) continue;
      word.push_back(n.alphabet()[a]);
      dfs(nxt, remaining - 1);
      word.pop_back();
    }
  };
  for (std::size_t len = 0; len <= max_len && !stop; ++len) {
    if (finish[len][n.start()]) dfs(StateSet{n.start()}, len);
  }
}

std::vector<Word> enumerate_words(const Nfa& n, std::size_t max_len) {
  std::vector<Word> out;
  for_each_word(n, max_len, [&](const Word& w) {
    out.push_back(w);
    return true;
  });
  return out;
}

std::vector<Word> first_words(const Nfa& n, std::size_t max_len, std::size_t limit) {
  std::vector<Word> out;
  if (limit == 0) return out;
  for_each_word(n, max_len, [&](const Word& w) {
    out.push_back(w);
    return out.size() < limit;
  });
  return out;
}

std::optional<Word> shortest_word(const Nfa& n) {
  if (n.empty_language()) return std::nullopt;
  // a shortest word never revisits a state, so its length is below state_count
  const auto finish = finish_table(n, n.state_count());
  std::size_t len = 0;
  while (!finish[len][n.start()]) ++len;
  Word word;
  StateSet cur{n.start()};
  const auto sigma = static_cast<std::uint32_t>(n.alphabet().size());
  for (std::size_t remaining = len; remaining > 0; --remaining) {
    for (std::uint32_t a = 0; a < sigma; ++a) {
      StateSet nxt = post(n, cur, a, &finish[remaining - 1]);
      if (nxt.empty()) continue;
      word.push_back(n.alphabet()[a]);
      cur = std::move(nxt);
      break;
    }
  }
  return word;
}

bool included(const Nfa& sub, const Nfa& super) {
  if (sub.empty_language()) return true;
  std::vector<std::optional<std::uint32_t>> to_super(sub.alphabet().size());
  for (std::size_t i = 0; i < sub.alphabet().size(); ++i) {
    if (auto k = super.alphabet().index_of(sub.alphabet()[i])) {
      to_super[i] = static_cast<std::uint32_t>(*k);
    }
  }
  using Subset = std::vector<Nfa::State>;
  std::map<std::pair<Nfa::State, Subset>, char> seen;
  std::deque<std::pair<Nfa::State, Subset>> queue;
  Subset start;
  if (!super.empty_language()) start.push_back(super.start());
  seen[{sub.start(), start}] = 1;
  queue.push_back({sub.start(), std::move(start)});
  while (!queue.empty()) {
    auto [q, set] = std::move(queue.front());
    queue.pop_front();
    if (sub.accepting(q) &&
        std::none_of(set.begin(), set.end(), [&](Nfa::State s) { return super.accepting(s); })) {
      return false;
    }
    for (const auto& t : sub.transitions(q)) {
      Subset next;
      if (to_super[t.symbol]) {
        for (auto s : set) {
          for (const auto& u : super.transitions(s, *to_super[t.symbol])) next.push_back(u.target);
        }
        std::sort(next.begin(), next.end());
        next.erase(std::unique(next.begin(), next.end()), next.end());
      }
      if (seen.emplace(std::pair{t.target, next}, 1).second) queue.push_back({t.target, next});
    }
  }
  return true;
}

}  // namespace rpqdet
