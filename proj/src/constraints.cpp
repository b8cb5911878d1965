#include "rpqdet/constraints.hpp"

#include <algorithm>

#include "rpqdet/error.hpp"
#include "rpqdet/rpq.hpp"

namespace rpqdet {

ConstraintSet::ConstraintSet(Alphabet colored_alphabet)
    : alphabet_(std::make_shared<const Alphabet>(std::move(colored_alphabet))) {}

const RegularConstraint& ConstraintSet::add(Regex lhs, Regex rhs, std::string name) {
  if (rhs.nullable()) {
    throw Error(ErrorCode::EpsilonLanguage,
                "right-hand side of a constraint must not contain the empty word");
  }
  RegularConstraint rc;
  rc.id = constraints_.size();
  rc.name = name.empty() ? "c" + std::to_string(rc.id) : std::move(name);
  rc.lhs_nfa = compile_nfa(lhs, alphabet_);
  rc.rhs_nfa = compile_nfa(rhs, alphabet_);
  if (rc.rhs_nfa.empty_language() && !rc.lhs_nfa.empty_language()) {
    throw Error(ErrorCode::InvalidArgument,
                "constraint '" + rc.name + "' has an empty right-hand side");
  }
  rc.lhs = std::move(lhs);
  rc.rhs = std::move(rhs);
  constraints_.push_back(std::move(rc));
  return constraints_.back();
}

std::pair<std::pair<Regex, Regex>, std::pair<Regex, Regex>> make_arrows(const Regex& l) {
  if (l.nullable()) {
    throw Error(ErrorCode::EpsilonLanguage, "language " + to_string(l) + " contains the empty word");
  }
  Regex green = recolor(l, Color::Green);
  Regex red = recolor(l, Color::Red);
  return {{green, red}, {red, green}};
}

void ConstraintSet::add_arrows(const Regex& language, const std::string& name) {
  auto [forward, backward] = make_arrows(language);
  std::string base = name.empty() ? to_string(language) : name;
  add(forward.first, forward.second, base + "->");
  add(backward.first, backward.second, base + "<-");
}

ConstraintSet arrows_of(std::span<const Regex> languages, const Alphabet& base,
                        std::span<const std::string> names) {
  ConstraintSet out(base.red_green());
  for (std::size_t i = 0; i < languages.size(); ++i) {
    out.add_arrows(languages[i], i < names.size() ? names[i] : std::string());
  }
  return out;
}

namespace {

// Cheap rejection: a non-nullable lhs needs one of its first letters in the graph.
bool may_match(const Nfa& n, const std::vector<char>& present) {
  if (n.empty_language()) return false;
  if (n.accepts_epsilon()) return true;
  for (auto a : n.initial_symbols()) {
    if (present[a]) return true;
  }
  return false;
}

std::vector<char> present_symbols(const Nfa& n, const LabeledGraph& g) {
  std::vector<char> present(n.alphabet().size(), 0);
  for (const auto& e : g.edges()) {
    if (auto idx = n.alphabet().index_of(e.label)) present[*idx] = 1;
  }
  return present;
}

}  // namespace

bool satisfied(const RegularConstraint& rc, const LabeledGraph& g) {
  if (!may_match(rc.lhs_nfa, present_symbols(rc.lhs_nfa, g))) return true;
  for (VertexIndex x = 0; x < g.vertex_count(); ++x) {
    auto lhs = reachable_from(rc.lhs_nfa, g, x);
    if (std::none_of(lhs.begin(), lhs.end(), [](char c) { return c != 0; })) continue;
    auto rhs = reachable_from(rc.rhs_nfa, g, x);
    for (VertexIndex y = 0; y < g.vertex_count(); ++y) {
      if (lhs[y] && !rhs[y]) return false;
    }
  }
  return true;
}

bool satisfied(const ConstraintSet& t, const LabeledGraph& g) {
  return std::all_of(t.constraints().begin(), t.constraints().end(),
                     [&](const RegularConstraint& rc) { return satisfied(rc, g); });
}

std::vector<Request> requests(const ConstraintSet& t, const LabeledGraph& g) {
  std::vector<Request> out;
  if (t.empty()) return out;
  // all constraints share one alphabet
  const auto present = present_symbols(t[0].lhs_nfa, g);
  for (const auto& rc : t.constraints()) {
    if (!may_match(rc.lhs_nfa, present)) continue;
    for (VertexIndex x = 0; x < g.vertex_count(); ++x) {
      auto lhs = reachable_from(rc.lhs_nfa, g, x);
      if (std::none_of(lhs.begin(), lhs.end(), [](char c) { return c != 0; })) continue;
      auto rhs = reachable_from(rc.rhs_nfa, g, x);
      for (VertexIndex y = 0; y < g.vertex_count(); ++y) {
        if (lhs[y] && !rhs[y]) out.push_back({g.name(x), g.name(y), rc.id});
      }
    }
  }
  std::sort(out.begin(), out.end());
  return out;
}

std::string fresh_vertex_name(std::size_t round, std::size_t request_index, std::size_t k) {
  return "n" + std::to_string(round) + "_" + std::to_string(request_index) + "_" +
         std::to_string(k);
}

std::vector<Edge> add_witness_path(LabeledGraph& g, const ConstraintSet& t, const Request& r,
                                   const Word& w, std::size_t round, std::size_t request_index) {
  const auto& rc = t[r.constraint];
  if (w.empty() || !accepts(rc.rhs_nfa, w)) {
    throw Error(ErrorCode::WitnessRejected, "word '" + to_string(w) +
                                                "' is not in the right-hand side of " + rc.name);
  }
  std::vector<Edge> added;
  VertexIndex prev = g.index(r.x);
  const VertexIndex last = g.index(r.y);
  for (std::size_t k = 0; k < w.size(); ++k) {
    VertexIndex next = last;
    if (k + 1 < w.size()) {
      std::string name = fresh_vertex_name(round, request_index, k + 1);
      if (g.contains(name)) {
        throw Error(ErrorCode::InvalidArgument, "fresh vertex name '" + name + "' already used");
      }
      next = g.add_vertex(name);
    }
    if (g.add_edge(prev, w[k], next)) added.push_back({prev, w[k], next});
    prev = next;
  }
  return added;
}

LabeledGraph apply_add(const LabeledGraph& g, const ConstraintSet& t, const Request& r,
                       const Word& w, std::size_t round, std::size_t request_index) {
  LabeledGraph out = g;
  add_witness_path(out, t, r, w, round, request_index);
  return out;
}

}  // namespace rpqdet
