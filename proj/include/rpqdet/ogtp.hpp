#pragma once

#include <cstddef>
#include <map>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "rpqdet/constraints.hpp"
#include "rpqdet/escape.hpp"
#include "rpqdet/regex.hpp"
#include "rpqdet/symbol.hpp"

namespace rpqdet {

inline constexpr const char* kBlack = "black";

struct TileStep {
  char direction = 'H';  // 'H' or 'V'
  std::string shade;
  friend auto operator<=>(const TileStep&, const TileStep&) = default;
};

struct ForbiddenPair {
  TileStep first;
  TileStep second;
  friend auto operator<=>(const ForbiddenPair&, const ForbiddenPair&) = default;
};

struct OgtpInstance {
  std::vector<std::string> shades;
  std::vector<ForbiddenPair> forbidden;
};

// Checks the invariants (black present, shade names well formed and distinct,
// forbidden pairs over known shades) and drops repeated forbidden pairs.
// Throws Error(InvalidArgument).
OgtpInstance normalized(OgtpInstance inst);

using Cell = std::pair<std::size_t, std::size_t>;

// h[(i, j)] shades u(i,j) -> u(i+1,j); v[(i, j)] shades u(i,j) -> u(i,j+1).
// u(0,0) is the bottom-left corner.
struct GridTiling {
  std::size_t n = 0;
  std::map<Cell, std::string> h;
  std::map<Cell, std::string> v;
  friend bool operator==(const GridTiling&, const GridTiling&) = default;
};

// A tiling with every edge shaded `shade`.
GridTiling uniform_tiling(std::size_t n, const std::string& shade = kBlack);

// Throws Error(MalformedTiling) on missing or out-of-range cells.
void validate_shape(const GridTiling& t);

// First failed condition ("a", "b1", "b2" or "b3" with details), if any.
std::optional<std::string> tiling_violation(const OgtpInstance& inst, const GridTiling& t);
bool check_tiling(const OgtpInstance& inst, const GridTiling& t);

inline constexpr double kMaxBruteforceCandidates = 1e7;

// Smallest-n solution, first in enumeration order. Throws
// Error(SearchSpaceTooLarge) before enumerating a grid size with more than
// kMaxBruteforceCandidates tilings.
std::optional<GridTiling> solve_bruteforce(const OgtpInstance& inst, std::size_t max_n);

struct NamedLanguage {
  std::string name;
  Regex regex;
};

struct ViewGroups {
  std::vector<NamedLanguage> good;
  std::vector<NamedLanguage> bad;
  std::vector<NamedLanguage> ugly;

  // good, bad, ugly in that order.
  std::vector<NamedLanguage> all() const;
};

struct ReductionOutput {
  Alphabet alphabet;
  ViewGroups views;
  Regex q_start = Regex::empty();
  Regex q0 = Regex::empty();
};

// Σ = {alpha, beta, omega} ∪ {A,B}×{H,V}×{W,C}×shades.
Alphabet reduction_alphabet(const std::vector<std::string>& shades);

ReductionOutput compile_reduction(const OgtpInstance& inst);

// Constraints L->, L<- for every view, in the order of ViewGroups::all().
ConstraintSet view_constraints(const Alphabet& alphabet, const ViewGroups& views);
Game make_game(const ReductionOutput& reduction);

}  // namespace rpqdet
