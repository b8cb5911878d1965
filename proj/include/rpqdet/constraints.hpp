#pragma once

#include <cstddef>
#include <memory>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "rpqdet/graph.hpp"
#include "rpqdet/nfa.hpp"
#include "rpqdet/regex.hpp"

namespace rpqdet {

// lhs(x, y) => rhs(x, y) over the red-green alphabet.
struct RegularConstraint {
  std::size_t id = 0;
  std::string name;
  Regex lhs;
  Regex rhs;
  Nfa lhs_nfa;
  Nfa rhs_nfa;
};

// Ordered constraints; a constraint's id is its position. The right-hand side
// of every constraint is epsilon-free, and non-empty unless the left-hand side
// is empty too (such constraints can never be violated).
class ConstraintSet {
 public:
  ConstraintSet() = default;
  explicit ConstraintSet(Alphabet colored_alphabet);

  // Throws Error(EpsilonLanguage) / Error(InvalidArgument) on the rules above.
  const RegularConstraint& add(Regex lhs, Regex rhs, std::string name = {});
  // Adds L-> and L<- for `language` (over the base alphabet).
  void add_arrows(const Regex& language, const std::string& name = {});

  std::size_t size() const { return constraints_.size(); }
  bool empty() const { return constraints_.empty(); }
  const RegularConstraint& operator[](std::size_t i) const { return constraints_[i]; }
  std::span<const RegularConstraint> constraints() const { return constraints_; }
  const Alphabet& alphabet() const { return *alphabet_; }
  std::shared_ptr<const Alphabet> shared_alphabet() const { return alphabet_; }

 private:
  std::shared_ptr<const Alphabet> alphabet_ = std::make_shared<const Alphabet>();
  std::vector<RegularConstraint> constraints_;
};

// (G(l) -> R(l), R(l) -> G(l)). Throws Error(EpsilonLanguage) if l is nullable.
std::pair<std::pair<Regex, Regex>, std::pair<Regex, Regex>> make_arrows(const Regex& l);

// The set version: 2 * |languages| constraints, L1->, L1<-, L2->, ...
ConstraintSet arrows_of(std::span<const Regex> languages, const Alphabet& base,
                        std::span<const std::string> names = {});

struct Request {
  std::string x;
  std::string y;
  std::size_t constraint = 0;
  friend auto operator<=>(const Request&, const Request&) = default;
};

bool satisfied(const RegularConstraint& rc, const LabeledGraph& g);
bool satisfied(const ConstraintSet& t, const LabeledGraph& g);

// rq(T, g), ordered by (x name, y name, constraint id).
std::vector<Request> requests(const ConstraintSet& t, const LabeledGraph& g);

// Name of the k-th fresh vertex (1-based) created for request `request_index`
// in move `round`.
std::string fresh_vertex_name(std::size_t round, std::size_t request_index, std::size_t k);

// Adds w[x, y] in place and returns the edges that were new. Throws
// Error(WitnessRejected) unless w is in the request's right-hand side.
std::vector<Edge> add_witness_path(LabeledGraph& g, const ConstraintSet& t, const Request& r,
                                   const Word& w, std::size_t round, std::size_t request_index);

LabeledGraph apply_add(const LabeledGraph& g, const ConstraintSet& t, const Request& r,
                       const Word& w, std::size_t round, std::size_t request_index);

}  // namespace rpqdet
