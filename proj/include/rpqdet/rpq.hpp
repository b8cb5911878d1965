#pragma once

#include <compare>
#include <optional>
#include <string_view>
#include <vector>

#include "rpqdet/graph.hpp"
#include "rpqdet/nfa.hpp"

namespace rpqdet {

struct VertexPair {
  VertexIndex x;
  VertexIndex y;
  friend auto operator<=>(const VertexPair&, const VertexPair&) = default;
};

// Sorted, duplicate-free.
using PairSet = std::vector<VertexPair>;

// All (x, y) joined by a path whose label word is accepted by `q`
// (arbitrary-path semantics, product reachability).
PairSet eval(const Nfa& q, const LabeledGraph& g);

// Vertices y with (x, y) in eval(q, g); indexed by VertexIndex.
std::vector<char> reachable_from(const Nfa& q, const LabeledGraph& g, VertexIndex x);

bool holds(const Nfa& q, const LabeledGraph& g, VertexIndex x, VertexIndex y);
// Throws Error(UnknownVertex).
bool holds(const Nfa& q, const LabeledGraph& g, std::string_view x, std::string_view y);

struct PathWitness {
  Word word;
  std::vector<VertexIndex> vertices;  // word.size() + 1 vertices from x to y
};

// Shortest witness, shortlex-least among ties.
std::optional<PathWitness> find_path_witness(const Nfa& q, const LabeledGraph& g, VertexIndex x,
                                             VertexIndex y);
std::optional<Word> find_path(const Nfa& q, const LabeledGraph& g, std::string_view x,
                              std::string_view y);

}  // namespace rpqdet
