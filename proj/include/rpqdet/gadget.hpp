#pragma once

#include <cstddef>
#include <optional>
#include <string>
#include <vector>

#include "rpqdet/escape.hpp"
#include "rpqdet/graph.hpp"
#include "rpqdet/ogtp.hpp"

namespace rpqdet {

// Grid vertex name v_i_j.
std::string grid_vertex(std::size_t i, std::size_t j);

// The shade-less doubled grid on a, v_i_j (0 <= i, j <= m) and b.
EndpointedGraph build_grid(std::size_t m);

// Gives every tile edge of build_grid(t.n) the shade of its grid edge in t.
// Throws Error(SizeMismatch) when g is not a grid of size t.n.
EndpointedGraph decorate(const EndpointedGraph& g, const GridTiling& t);

struct CounterexampleReport {
  std::vector<std::string> unsatisfied;  // constraint names
  bool green_q0 = false;
  bool red_q0 = false;

  bool ok() const { return unsatisfied.empty() && green_q0 && !red_q0; }
  // One line per failed condition, empty when ok().
  std::vector<std::string> failures() const;
};

// Throws Error(UnknownVertex) when a or b is missing.
CounterexampleReport check_counterexample(const LabeledGraph& m, const Game& game,
                                          const std::string& a, const std::string& b);

struct HomomorphismOptions {
  VertexMap pinned;
  bool injective = false;
};

std::optional<VertexMap> find_homomorphism(const LabeledGraph& d, const LabeledGraph& m,
                                           const HomomorphismOptions& options = {});
bool is_homomorphism(const VertexMap& h, const LabeledGraph& d, const LabeledGraph& m);
bool iso_shadeless(const LabeledGraph& d, const LabeledGraph& e);

}  // namespace rpqdet
