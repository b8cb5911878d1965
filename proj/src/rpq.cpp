#include "rpqdet/rpq.hpp"

#include <algorithm>
#include <limits>

#include "rpqdet/error.hpp"

namespace rpqdet {
namespace {

struct ProductSearch {
  const Nfa& q;
  const LabeledGraph& g;
  std::size_t states;
  std::vector<char> visited;
  std::vector<std::uint32_t> queue;

  ProductSearch(const Nfa& nfa, const LabeledGraph& graph)
      : q(nfa), g(graph), states(nfa.state_count()) {
    visited.assign(g.vertex_count() * states, 0);
    queue.reserve(64);
  }

  // Breadth-first product walk from (x, start). `on_accept(y)` returns true to stop.
  template <typename F>
  void run(VertexIndex x, F on_accept) {
    std::fill(visited.begin(), visited.end(), 0);
    queue.clear();
    if (q.empty_language()) return;
    const auto start = static_cast<std::uint32_t>(x * states + q.start());
    visited[start] = 1;
    queue.push_back(start);
    if (q.accepting(q.start()) && on_accept(x)) return;
    for (std::size_t head = 0; head < queue.size(); ++head) {
      const auto node = queue[head];
      const auto v = static_cast<VertexIndex>(node / states);
      const auto s = static_cast<Nfa::State>(node % states);
      for (const auto& e : g.out_edges(v)) {
        auto idx = q.alphabet().index_of(e.label);
        if (!idx) continue;
        for (const auto& t : q.transitions(s, static_cast<std::uint32_t>(*idx))) {
          const auto nxt = static_cast<std::uint32_t>(e.dst * states + t.target);
          if (visited[nxt]) continue;
          visited[nxt] = 1;
          queue.push_back(nxt);
          if (q.accepting(t.target) && on_accept(e.dst)) return;
        }
      }
    }
  }
};

}  // namespace

std::vector<char> reachable_from(const Nfa& q, const LabeledGraph& g, VertexIndex x) {
  std::vector<char> out(g.vertex_count(), 0);
  ProductSearch search(q, g);
  search.run(x, [&](VertexIndex y) {
    out[y] = 1;
    return false;
  });
  return out;
}

PairSet eval(const Nfa& q, const LabeledGraph& g) {
  PairSet out;
  ProductSearch search(q, g);
  std::vector<char> hit(g.vertex_count(), 0);
  for (VertexIndex x = 0; x < g.vertex_count(); ++x) {
    std::fill(hit.begin(), hit.end(), 0);
    search.run(x, [&](VertexIndex y) {
      hit[y] = 1;
      return false;
    });
    for (VertexIndex y = 0; y < g.vertex_count(); ++y) {
      if (hit[y]) out.push_back({x, y});
    }
  }
  return out;
}

bool holds(const Nfa& q, const LabeledGraph& g, VertexIndex x, VertexIndex y) {
  bool found = false;
  ProductSearch search(q, g);
  search.run(x, [&](VertexIndex v) {
    found = v == y;
    return found;
  });
  return found;
}

bool holds(const Nfa& q, const LabeledGraph& g, std::string_view x, std::string_view y) {
  return holds(q, g, g.index(x), g.index(y));
}

std::optional<PathWitness> find_path_witness(const Nfa& q, const LabeledGraph& g, VertexIndex x,
                                             VertexIndex y) {
  if (q.empty_language()) return std::nullopt;
  const std::size_t states = q.state_count();
  const std::size_t nodes = g.vertex_count() * states;
  constexpr auto kInf = std::numeric_limits<std::uint32_t>::max();

  // backward distances to (y, accepting)
  std::vector<std::vector<std::pair<std::uint32_t, VertexIndex>>> in(g.vertex_count());
  for (const auto& e : g.edges()) {
    if (auto idx = q.alphabet().index_of(e.label)) {
      in[e.dst].push_back({static_cast<std::uint32_t>(*idx), e.src});
    }
  }
  std::vector<std::vector<Nfa::Transition>> rev(states);
  for (Nfa::State s = 0; s < states; ++s) {
    for (const auto& t : q.transitions(s)) rev[t.target].push_back({t.symbol, s});
  }
  std::vector<std::uint32_t> dist(nodes, kInf);
  std::vector<std::uint32_t> queue;
  for (Nfa::State s = 0; s < states; ++s) {
    if (q.accepting(s)) {
      dist[y * states + s] = 0;
      queue.push_back(static_cast<std::uint32_t>(y * states + s));
    }
  }
  for (std::size_t head = 0; head < queue.size(); ++head) {
    const auto node = queue[head];
    const auto v = node / states;
    const auto s = node % states;
    for (const auto& [sym, u] : in[v]) {
      for (const auto& t : rev[s]) {
        if (t.symbol != sym) continue;
        const auto prev = static_cast<std::uint32_t>(u * states + t.target);
        if (dist[prev] != kInf) continue;
        dist[prev] = dist[node] + 1;
        queue.push_back(prev);
      }
    }
  }
  const auto origin = static_cast<std::uint32_t>(x * states + q.start());
  if (dist[origin] == kInf) return std::nullopt;
  const std::uint32_t length = dist[origin];

  // greedy shortlex descent over layers of product nodes
  std::vector<std::vector<std::uint32_t>> layers{{origin}};
  Word word;
  const auto sigma = static_cast<std::uint32_t>(q.alphabet().size());
  for (std::uint32_t step = 0; step < length; ++step) {
    const std::uint32_t want = length - step - 1;
    for (std::uint32_t a = 0; a < sigma; ++a) {
      std::vector<std::uint32_t> next;
      for (auto node : layers.back()) {
        const auto v = static_cast<VertexIndex>(node / states);
        const auto s = static_cast<Nfa::State>(node % states);
        for (const auto& e : g.out_edges(v)) {
          auto idx = q.alphabet().index_of(e.label);
          if (!idx || *idx != a) continue;
          for (const auto& t : q.transitions(s, a)) {
            const auto n = static_cast<std::uint32_t>(e.dst * states + t.target);
            if (dist[n] == want) next.push_back(n);
          }
        }
      }
      if (next.empty()) continue;
      std::sort(next.begin(), next.end());
      next.erase(std::unique(next.begin(), next.end()), next.end());
      word.push_back(q.alphabet()[a]);
      layers.push_back(std::move(next));
      break;
    }
  }

  // walk back through the layers to one concrete vertex sequence
  PathWitness witness;
  witness.word = word;
  witness.vertices.assign(length + 1, x);
  std::uint32_t cur = 0;
  for (auto node : layers.back()) {
    if (node / states == y && q.accepting(static_cast<Nfa::State>(node % states))) {
      cur = node;
      break;
    }
  }
  witness.vertices[length] = static_cast<VertexIndex>(cur / states);
  for (std::uint32_t i = length; i > 0; --i) {
    const auto a = static_cast<std::uint32_t>(*q.alphabet().index_of(word[i - 1]));
    bool found = false;
    for (auto node : layers[i - 1]) {
      const auto v = static_cast<VertexIndex>(node / states);
      const auto s = static_cast<Nfa::State>(node % states);
      if (!g.has_edge(v, word[i - 1], static_cast<VertexIndex>(cur / states))) continue;
      for (const auto& t : q.transitions(s, a)) {
        if (t.target == cur % states) {
          found = true;
          break;
        }
      }
      if (found) {
        cur = node;
        break;
      }
    }
    witness.vertices[i - 1] = static_cast<VertexIndex>(cur / states);
  }
  return witness;
}

std::optional<Word> find_path(const Nfa& q, const LabeledGraph& g, std::string_view x,
                              std::string_view y) {
  auto w = find_path_witness(q, g, g.index(x), g.index(y));
  if (!w) return std::nullopt;
  return std::move(w->word);
}

}  // namespace rpqdet
