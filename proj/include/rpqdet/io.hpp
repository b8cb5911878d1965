#pragma once

#include <optional>
#include <string>
#include <string_view>

#include "rpqdet/constraints.hpp"
#include "rpqdet/escape.hpp"
#include "rpqdet/graph.hpp"
#include "rpqdet/ogtp.hpp"

namespace rpqdet {

// Every parse_* function throws Error(Syntax) on malformed JSON or missing
// fields and lets symbol/regex errors through.

std::string dump_graph(const LabeledGraph& g);
LabeledGraph parse_graph(std::string_view text);

std::string dump_ogtp(const OgtpInstance& inst);
OgtpInstance parse_ogtp(std::string_view text);

std::string dump_tiling(const GridTiling& t);
GridTiling parse_tiling(std::string_view text);

// Colored constraint set; regexes are read against alphabet.red_green().
std::string dump_constraints(const ConstraintSet& t);
ConstraintSet parse_constraints(std::string_view text, const Alphabet& alphabet);

// A reduction output or a hand-written instance. The optional "constraints"
// key replaces the arrows of the views as the game's constraint set.
struct Instance {
  ReductionOutput reduction;
  std::optional<ConstraintSet> constraints;
};

std::string dump_reduction(const ReductionOutput& r);
std::string dump_instance(const Instance& inst);
Instance parse_instance(std::string_view text);
Game make_game(const Instance& inst);

// One JSON object per line: a round 0 line holding the initial word, then one
// line per move.
std::string dump_trace(const PlayTrace& trace);
PlayTrace parse_trace(std::string_view text);

std::string read_file(const std::string& path);
void write_file(const std::string& path, std::string_view text);

}  // namespace rpqdet
