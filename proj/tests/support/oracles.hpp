#pragma once

#include <cstddef>
#include <optional>
#include <random>
#include <set>
#include <string>
#include <utility>
#include <vector>

#include "rpqdet/constraints.hpp"
#include "rpqdet/escape.hpp"
#include "rpqdet/graph.hpp"
#include "rpqdet/ogtp.hpp"
#include "rpqdet/regex.hpp"

namespace oracle {

using rpqdet::LabeledGraph;
using rpqdet::Regex;
using rpqdet::Symbol;
using rpqdet::Word;

// Direct matcher over the regex AST (end-position sets, no automaton).
bool matches(const Regex& r, const Word& w);

// Pairs (x, y) joined by a walk of length <= bound whose label is in r, found
// by breadth-first expansion of (vertex, derivative of r) states. bound = 0
// uses |V| * (r.size() + 1).
std::set<std::pair<std::string, std::string>> eval_paths(const Regex& r, const LabeledGraph& g,
                                                         std::size_t bound = 0);

bool satisfies(const rpqdet::ConstraintSet& t, const LabeledGraph& g);

// Tiling check by listing grid edges and every pair of consecutive edges.
bool tiling_ok(const rpqdet::OgtpInstance& inst, const rpqdet::GridTiling& t);

// Shades of the red edges of a decorated grid of size n, read back as a tiling.
rpqdet::GridTiling red_tiling(const LabeledGraph& g, std::size_t n);

// Colour of every edge a move adds: red on odd moves, green on even ones.
bool parity_ok(const rpqdet::RoundRecord& record);

struct NaiveOutcome {
  bool all_lose = true;
  std::size_t latest_loss = 0;
  std::size_t plays = 0;
};

// Every combination of witness words (every word of length <= max_witness_len
// per request) down to max_rounds; a branch that reaches a fixpoint or the
// round limit without loss clears all_lose.
NaiveOutcome naive_explore(const rpqdet::Game& game, const rpqdet::Position& start,
                           std::size_t max_witness_len, std::size_t max_rounds,
                           const rpqdet::StepObserver& observer = {});

// Random regex over `symbols` with AST depth <= depth.
Regex random_regex(std::mt19937& rng, const std::vector<Symbol>& symbols, int depth);
LabeledGraph random_graph(std::mt19937& rng, const std::vector<Symbol>& labels,
                          std::size_t max_vertices, std::size_t max_edges);

}  // namespace oracle
