#include "rpqdet/graph.hpp"

#include <algorithm>
#include <set>
#include <tuple>

#include "rpqdet/error.hpp"

namespace rpqdet {

VertexIndex LabeledGraph::add_vertex(std::string_view name) {
  std::string key(name);
  if (auto it = index_.find(key); it != index_.end()) return it->second;
  auto v = static_cast<VertexIndex>(names_.size());
  names_.push_back(key);
  index_.emplace(std::move(key), v);
  out_.emplace_back();
  return v;
}

bool LabeledGraph::add_edge(std::string_view src, Symbol label, std::string_view dst) {
  auto s = add_vertex(src);
  auto d = add_vertex(dst);
  return add_edge(s, label, d);
}

bool LabeledGraph::add_edge(VertexIndex src, Symbol label, VertexIndex dst) {
  if (has_edge(src, label, dst)) return false;
  edges_.push_back({src, label, dst});
  out_[src].push_back({label, dst});
  return true;
}

std::optional<VertexIndex> LabeledGraph::find(std::string_view name) const {
  if (auto it = index_.find(std::string(name)); it != index_.end()) return it->second;
  return std::nullopt;
}

VertexIndex LabeledGraph::index(std::string_view name) const {
  if (auto v = find(name)) return *v;
  throw Error(ErrorCode::UnknownVertex, "unknown vertex '" + std::string(name) + "'");
}

bool LabeledGraph::has_edge(VertexIndex src, Symbol label, VertexIndex dst) const {
  const auto& out = out_[src];
  return std::any_of(out.begin(), out.end(),
                     [&](const OutEdge& e) { return e.label == label && e.dst == dst; });
}

bool LabeledGraph::has_edge(std::string_view src, Symbol label, std::string_view dst) const {
  auto s = find(src);
  auto d = find(dst);
  return s && d && has_edge(*s, label, *d);
}

std::vector<Symbol> LabeledGraph::labels() const {
  std::vector<Symbol> out;
  for (const auto& e : edges_) {
    if (std::find(out.begin(), out.end(), e.label) == out.end()) out.push_back(e.label);
  }
  return out;
}

namespace {

using NamedEdge = std::tuple<std::string, std::uint32_t, std::string>;

std::set<NamedEdge> named_edges(const LabeledGraph& g) {
  std::set<NamedEdge> out;
  for (const auto& e : g.edges()) out.emplace(g.name(e.src), e.label.id(), g.name(e.dst));
  return out;
}

}  // namespace

bool operator==(const LabeledGraph& a, const LabeledGraph& b) {
  if (a.vertex_count() != b.vertex_count() || a.edge_count() != b.edge_count()) return false;
  for (const auto& n : a.names_) {
    if (!b.contains(n)) return false;
  }
  return named_edges(a) == named_edges(b);
}

LabeledGraph chain_graph(const Word& w, std::string_view x, std::string_view y,
                         std::string_view prefix) {
  if (w.empty()) throw Error(ErrorCode::EmptyWord, "chain graph needs a non-empty word");
  if (x == y) throw Error(ErrorCode::InvalidArgument, "chain endpoints must differ");
  LabeledGraph g;
  VertexIndex prev = g.add_vertex(x);
  std::vector<VertexIndex> inner;
  for (std::size_t i = 1; i < w.size(); ++i) {
    std::string name = std::string(prefix) + std::to_string(i);
    if (name == x || name == y) {
      throw Error(ErrorCode::InvalidArgument, "chain vertex name '" + name + "' clashes");
    }
    inner.push_back(g.add_vertex(name));
  }
  VertexIndex last = g.add_vertex(y);
  for (std::size_t i = 0; i < w.size(); ++i) {
    VertexIndex next = i + 1 < w.size() ? inner[i] : last;
    g.add_edge(prev, w[i], next);
    prev = next;
  }
  return g;
}

namespace {

template <typename F>
LabeledGraph relabel(const LabeledGraph& g, F f) {
  LabeledGraph out;
  for (const auto& n : g.vertex_names()) out.add_vertex(n);
  for (const auto& e : g.edges()) out.add_edge(e.src, f(e.label), e.dst);
  return out;
}

}  // namespace

LabeledGraph recolor(const LabeledGraph& g, Color color) {
  return relabel(g, [color](Symbol s) { return s.with_color(color); });
}

LabeledGraph strip_shades(const LabeledGraph& g) {
  return relabel(g, [](Symbol s) { return s.without_shade(); });
}

LabeledGraph graph_union(std::span<const LabeledGraph> graphs) {
  LabeledGraph out;
  for (const auto& g : graphs) {
    for (const auto& n : g.vertex_names()) out.add_vertex(n);
    for (const auto& e : g.edges()) out.add_edge(g.name(e.src), e.label, g.name(e.dst));
  }
  return out;
}

bool is_subgraph(const LabeledGraph& sub, const LabeledGraph& super) {
  for (const auto& n : sub.vertex_names()) {
    if (!super.contains(n)) return false;
  }
  for (const auto& e : sub.edges()) {
    if (!super.has_edge(sub.name(e.src), e.label, sub.name(e.dst))) return false;
  }
  return true;
}

}  // namespace rpqdet
