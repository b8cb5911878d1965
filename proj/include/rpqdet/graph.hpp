#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <unordered_map>
#include <vector>

#include "rpqdet/symbol.hpp"

namespace rpqdet {

using VertexIndex = std::uint32_t;

struct Edge {
  VertexIndex src;
  Symbol label;
  VertexIndex dst;
};

struct OutEdge {
  Symbol label;
  VertexIndex dst;
};

// Directed graph with symbol-labelled edges and named vertices. Edges form a
// set; parallel edges with distinct labels are allowed. Vertex and edge
// iteration follow insertion order, which keeps serialisation deterministic.
class LabeledGraph {
 public:
  // Returns the index of `name`, adding the vertex if needed.
  VertexIndex add_vertex(std::string_view name);
  // Returns false if the edge was already present. Endpoints are added as needed.
  bool add_edge(std::string_view src, Symbol label, std::string_view dst);
  bool add_edge(VertexIndex src, Symbol label, VertexIndex dst);

  std::optional<VertexIndex> find(std::string_view name) const;
  // Throws Error(UnknownVertex).
  VertexIndex index(std::string_view name) const;
  bool contains(std::string_view name) const { return find(name).has_value(); }
  const std::string& name(VertexIndex v) const { return names_[v]; }

  std::size_t vertex_count() const { return names_.size(); }
  std::size_t edge_count() const { return edges_.size(); }
  std::span<const std::string> vertex_names() const { return names_; }
  std::span<const Edge> edges() const { return edges_; }
  std::span<const OutEdge> out_edges(VertexIndex v) const { return out_[v]; }

  bool has_edge(VertexIndex src, Symbol label, VertexIndex dst) const;
  bool has_edge(std::string_view src, Symbol label, std::string_view dst) const;

  // Distinct labels in first-use order.
  std::vector<Symbol> labels() const;

  // Literal equality: same vertex names and same (src, label, dst) triples.
  friend bool operator==(const LabeledGraph& a, const LabeledGraph& b);

 private:
  std::vector<std::string> names_;
  std::unordered_map<std::string, VertexIndex> index_;
  std::vector<Edge> edges_;
  std::vector<std::vector<OutEdge>> out_;
};

// Vertex-name map, used for homomorphisms between graphs.
using VertexMap = std::map<std::string, std::string>;

struct EndpointedGraph {
  LabeledGraph graph;
  std::string a;
  std::string b;
};

// Frozen body w[x,y]: x, prefix1, ..., prefix{n-1}, y. Throws Error(EmptyWord)
// for an empty word and Error(InvalidArgument) when x == y or a generated name
// collides with an endpoint.
LabeledGraph chain_graph(const Word& w, std::string_view x, std::string_view y,
                         std::string_view prefix = "x");

LabeledGraph recolor(const LabeledGraph& g, Color color);
LabeledGraph graph_union(std::span<const LabeledGraph> graphs);
// Drops the shade field of every tile label; other labels are unchanged.
LabeledGraph strip_shades(const LabeledGraph& g);

// Is `sub` contained in `super` (vertex names and edge triples)?
bool is_subgraph(const LabeledGraph& sub, const LabeledGraph& super);

}  // namespace rpqdet
