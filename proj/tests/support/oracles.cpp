#include "oracles.hpp"

#include <algorithm>
#include <functional>
#include <map>
#include <memory>

#include "rpqdet/nfa.hpp"

namespace oracle {

using rpqdet::Color;
using Kind = Regex::Kind;

namespace {

std::set<std::size_t> ends(const Regex& r, const Word& w, std::size_t i) {
  switch (r.kind()) {
    case Kind::Empty:
      return {};
    case Kind::Epsilon:
      return {i};
    case Kind::Literal:
      if (i < w.size() && w[i] == r.symbol()) return {i + 1};
      return {};
    case Kind::Class: {
      const auto& s = r.symbols();
      if (i < w.size() && std::find(s.begin(), s.end(), w[i]) != s.end()) return {i + 1};
      return {};
    }
    case Kind::Union: {
      auto a = ends(r.left(), w, i);
      auto b = ends(r.right(), w, i);
      a.insert(b.begin(), b.end());
      return a;
    }
    case Kind::Concat: {
      std::set<std::size_t> out;
      for (auto j : ends(r.left(), w, i)) {
        auto k = ends(r.right(), w, j);
        out.insert(k.begin(), k.end());
      }
      return out;
    }
    case Kind::Star:
    case Kind::Plus: {
      std::set<std::size_t> out;
      if (r.kind() == Kind::Star) out.insert(i);
      std::vector<std::size_t> todo{i};
      std::set<std::size_t> seen{i};
      while (!todo.empty()) {
        auto j = todo.back();
        todo.pop_back();
        for (auto k : ends(r.inner(), w, j)) {
          out.insert(k);
          if (seen.insert(k).second) todo.push_back(k);
        }
      }
      return out;
    }
  }
  return {};
}

// Derivatives on a small private AST so the oracle shares nothing with the
// automaton code.
struct D;
using DP = std::shared_ptr<const D>;
struct D {
  enum K { Zero, One, Sym, Or, Cat, Star } k;
  std::set<std::uint32_t> syms;
  DP a, b;
  std::vector<DP> kids;  // Or: flattened, sorted by key, no duplicates
  std::string key;
};

DP mk(D::K k, std::set<std::uint32_t> syms, DP a, DP b, std::vector<DP> kids = {}) {
  auto d = std::make_shared<D>(D{k, std::move(syms), std::move(a), std::move(b), std::move(kids), {}});
  switch (k) {
    case D::Zero: d->key = "0"; break;
    case D::One: d->key = "1"; break;
    case D::Sym: {
      d->key = "{";
      for (auto s : d->syms) d->key += std::to_string(s) + ",";
      d->key += "}";
      break;
    }
    case D::Or: {
      d->key = "(";
      for (const auto& c : d->kids) d->key += c->key + "|";
      d->key += ")";
      break;
    }
    case D::Cat: d->key = "(" + d->a->key + "." + d->b->key + ")"; break;
    case D::Star: d->key = "(" + d->a->key + ")*"; break;
  }
  return d;
}

DP zero() { static DP z = mk(D::Zero, {}, nullptr, nullptr); return z; }
DP one() { static DP o = mk(D::One, {}, nullptr, nullptr); return o; }

DP alt(DP a, DP b) {
  std::map<std::string, DP> kids;
  for (const auto& d : {a, b}) {
    if (d->k == D::Or) {
      for (const auto& c : d->kids) kids.emplace(c->key, c);
    } else if (d->k != D::Zero) {
      kids.emplace(d->key, d);
    }
  }
  if (kids.empty()) return zero();
  if (kids.size() == 1) return kids.begin()->second;
  std::vector<DP> v;
  for (auto& [k, d] : kids) v.push_back(d);
  return mk(D::Or, {}, nullptr, nullptr, std::move(v));
}

DP cat(DP a, DP b) {
  if (a->k == D::Zero || b->k == D::Zero) return zero();
  if (a->k == D::One) return b;
  if (b->k == D::One) return a;
  if (a->k == D::Cat) return cat(a->a, cat(a->b, b));
  return mk(D::Cat, {}, a, b);
}

bool nullable(const DP& d) {
  switch (d->k) {
    case D::Zero: case D::Sym: return false;
    case D::One: case D::Star: return true;
    case D::Or:
      return std::any_of(d->kids.begin(), d->kids.end(), [](const DP& c) { return nullable(c); });
    case D::Cat: return nullable(d->a) && nullable(d->b);
  }
  return false;
}

DP derive(const DP& d, std::uint32_t s) {
  switch (d->k) {
    case D::Zero: case D::One: return zero();
    case D::Sym: return d->syms.count(s) ? one() : zero();
    case D::Or: {
      DP out = zero();
      for (const auto& c : d->kids) out = alt(out, derive(c, s));
      return out;
    }
    case D::Cat: {
      auto left = cat(derive(d->a, s), d->b);
      return nullable(d->a) ? alt(left, derive(d->b, s)) : left;
    }
    case D::Star: return cat(derive(d->a, s), d);
  }
  return zero();
}

DP convert(const Regex& r) {
  switch (r.kind()) {
    case Kind::Empty: return zero();
    case Kind::Epsilon: return one();
    case Kind::Literal: return mk(D::Sym, {r.symbol().id()}, nullptr, nullptr);
    case Kind::Class: {
      std::set<std::uint32_t> s;
      for (auto x : r.symbols()) s.insert(x.id());
      return mk(D::Sym, std::move(s), nullptr, nullptr);
    }
    case Kind::Union: return alt(convert(r.left()), convert(r.right()));
    case Kind::Concat: return cat(convert(r.left()), convert(r.right()));
    case Kind::Star: return mk(D::Star, {}, convert(r.inner()), nullptr);
    case Kind::Plus: {
      auto inner = convert(r.inner());
      return cat(inner, mk(D::Star, {}, inner, nullptr));
    }
  }
  return zero();
}

}  // namespace

bool matches(const Regex& r, const Word& w) { return ends(r, w, 0).count(w.size()) > 0; }

std::set<std::pair<std::string, std::string>> eval_paths(const Regex& r, const LabeledGraph& g,
                                                         std::size_t bound) {
  if (bound == 0) bound = g.vertex_count() * (r.size() + 1);
  std::set<std::pair<std::string, std::string>> out;
  const DP start = convert(r);
  for (rpqdet::VertexIndex x = 0; x < g.vertex_count(); ++x) {
    std::map<std::pair<rpqdet::VertexIndex, std::string>, DP> layer{{{x, start->key}, start}};
    std::set<std::pair<rpqdet::VertexIndex, std::string>> seen{{x, start->key}};
    for (std::size_t len = 0; !layer.empty(); ++len) {
      std::map<std::pair<rpqdet::VertexIndex, std::string>, DP> next;
      for (const auto& [state, d] : layer) {
        if (nullable(d)) out.emplace(g.name(x), g.name(state.first));
        if (len == bound) continue;
        for (const auto& e : g.out_edges(state.first)) {
          auto d2 = derive(d, e.label.id());
          if (d2->k == D::Zero) continue;
          std::pair<rpqdet::VertexIndex, std::string> key{e.dst, d2->key};
          if (seen.insert(key).second) next.emplace(key, d2);
        }
      }
      layer = std::move(next);
    }
  }
  return out;
}

bool satisfies(const rpqdet::ConstraintSet& t, const LabeledGraph& g) {
  for (const auto& rc : t.constraints()) {
    auto lhs = eval_paths(rc.lhs, g);
    auto rhs = eval_paths(rc.rhs, g);
    if (!std::includes(rhs.begin(), rhs.end(), lhs.begin(), lhs.end())) return false;
  }
  return true;
}

bool tiling_ok(const rpqdet::OgtpInstance& inst, const rpqdet::GridTiling& t) {
  struct E {
    std::size_t si, sj, ti, tj;
    char dir;
    std::string shade;
  };
  const auto n = t.n;
  std::vector<E> edges;
  for (std::size_t i = 0; i <= n; ++i) {
    for (std::size_t j = 0; j <= n; ++j) {
      if (i < n) edges.push_back({i, j, i + 1, j, 'H', t.h.at({i, j})});
      if (j < n) edges.push_back({i, j, i, j + 1, 'V', t.v.at({i, j})});
    }
  }
  for (const auto& e : edges) {
    if (std::find(inst.shades.begin(), inst.shades.end(), e.shade) == inst.shades.end()) return false;
    if (e.dir == 'V' && e.si == 0 && e.sj == 0 && e.shade != "black") return false;
    if (e.dir == 'H' && e.ti == n && e.tj == n && e.shade != "black") return false;
  }
  for (const auto& e1 : edges) {
    for (const auto& e2 : edges) {
      if (e1.ti != e2.si || e1.tj != e2.sj) continue;
      for (const auto& f : inst.forbidden) {
        if (f.first.direction == e1.dir && f.first.shade == e1.shade &&
            f.second.direction == e2.dir && f.second.shade == e2.shade) {
          return false;
        }
      }
    }
  }
  return true;
}

rpqdet::GridTiling red_tiling(const LabeledGraph& g, std::size_t n) {
  rpqdet::GridTiling t;
  t.n = n;
  auto coords = [](const std::string& name) {
    auto p = name.find('_', 2);
    return std::pair<std::size_t, std::size_t>{std::stoul(name.substr(2, p - 2)),
                                               std::stoul(name.substr(p + 1))};
  };
  for (const auto& e : g.edges()) {
    const auto& info = e.label.info();
    if (!info.is_tile() || info.color != Color::Red) continue;
    auto c = coords(g.name(e.src));
    (info.direction == 'H' ? t.h : t.v)[c] = info.shade;
  }
  return t;
}

bool parity_ok(const rpqdet::RoundRecord& record) {
  const Color want = record.round % 2 == 1 ? Color::Red : Color::Green;
  for (const auto& e : record.added_edges) {
    if (e.label.color() != want) return false;
  }
  return true;
}

namespace {

void naive(const rpqdet::Game& game, const rpqdet::Position& pos, std::size_t max_witness_len,
           std::size_t max_rounds, const rpqdet::StepObserver& observer, NaiveOutcome& out) {
  const auto& g = pos.graph();
  if (eval_paths(rpqdet::recolor(game.q0, Color::Red), g).count({pos.state.a, pos.state.b}) > 0) {
    ++out.plays;
    out.latest_loss = std::max(out.latest_loss, pos.round);
    return;
  }
  auto reqs = rpqdet::requests(game.constraints, g);
  if (reqs.empty() || pos.round >= max_rounds) {
    ++out.plays;
    out.all_lose = false;
    return;
  }
  std::vector<std::vector<Word>> options;
  for (const auto& r : reqs) {
    options.push_back(rpqdet::enumerate_words(game.constraints[r.constraint].rhs_nfa, max_witness_len));
    if (options.back().empty()) {
      ++out.plays;
      out.all_lose = false;
      return;
    }
  }
  std::vector<Word> choice(reqs.size());
  std::function<void(std::size_t)> rec = [&](std::size_t i) {
    if (!out.all_lose) return;
    if (i == reqs.size()) {
      auto next = rpqdet::apply_round(pos, game.constraints, reqs, choice);
      if (observer) observer(pos, next.record, next.next);
      naive(game, next.next, max_witness_len, max_rounds, observer, out);
      return;
    }
    for (const auto& w : options[i]) {
      choice[i] = w;
      rec(i + 1);
    }
  };
  rec(0);
}

}  // namespace

NaiveOutcome naive_explore(const rpqdet::Game& game, const rpqdet::Position& start,
                           std::size_t max_witness_len, std::size_t max_rounds,
                           const rpqdet::StepObserver& observer) {
  NaiveOutcome out;
  naive(game, start, max_witness_len, max_rounds, observer, out);
  return out;
}

Regex random_regex(std::mt19937& rng, const std::vector<Symbol>& symbols, int depth) {
  std::uniform_int_distribution<int> pick(0, depth <= 1 ? 1 : 7);
  std::uniform_int_distribution<std::size_t> sym(0, symbols.size() - 1);
  switch (pick(rng)) {
    case 0:
      return Regex::literal(symbols[sym(rng)]);
    case 1: {
      std::vector<Symbol> s{symbols[sym(rng)], symbols[sym(rng)]};
      if (s[0] == s[1]) return Regex::literal(s[0]);
      return Regex::symbol_class(s);
    }
    case 2:
    case 3:
      return Regex::alt(random_regex(rng, symbols, depth - 1), random_regex(rng, symbols, depth - 1));
    case 4:
    case 5:
      return Regex::concat(random_regex(rng, symbols, depth - 1),
                           random_regex(rng, symbols, depth - 1));
    case 6:
      return Regex::star(random_regex(rng, symbols, depth - 1));
    default:
      return Regex::plus(random_regex(rng, symbols, depth - 1));
  }
}

LabeledGraph random_graph(std::mt19937& rng, const std::vector<Symbol>& labels,
                          std::size_t max_vertices, std::size_t max_edges) {
  std::uniform_int_distribution<std::size_t> nv(1, max_vertices);
  const auto n = nv(rng);
  std::uniform_int_distribution<std::size_t> ne(0, max_edges);
  std::uniform_int_distribution<std::size_t> v(0, n - 1);
  std::uniform_int_distribution<std::size_t> l(0, labels.size() - 1);
  LabeledGraph g;
  for (std::size_t i = 0; i < n; ++i) g.add_vertex("u" + std::to_string(i));
  const auto m = ne(rng);
  for (std::size_t i = 0; i < m; ++i) {
    g.add_edge(static_cast<rpqdet::VertexIndex>(v(rng)), labels[l(rng)],
               static_cast<rpqdet::VertexIndex>(v(rng)));
  }
  return g;
}

}  // namespace oracle
