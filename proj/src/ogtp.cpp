#include "rpqdet/ogtp.hpp"

#include <algorithm>
#include <cmath>
#include <regex>

#include "rpqdet/error.hpp"

namespace rpqdet {

namespace {

std::string cell_name(const Cell& c) {
  return "(" + std::to_string(c.first) + "," + std::to_string(c.second) + ")";
}

std::string step_name(const TileStep& s) { return std::string(1, s.direction) + ":" + s.shade; }

void check_step(const TileStep& s, const std::vector<std::string>& shades) {
  if (s.direction != 'H' && s.direction != 'V') {
    throw Error(ErrorCode::InvalidArgument,
                std::string("forbidden pair direction must be H or V, got '") + s.direction + "'");
  }
  if (std::find(shades.begin(), shades.end(), s.shade) == shades.end()) {
    throw Error(ErrorCode::InvalidArgument, "forbidden pair uses unknown shade '" + s.shade + "'");
  }
}

// Horizontal cells first, then vertical, each in (j, i) order.
struct EdgeSlot {
  bool horizontal;
  Cell cell;
};

std::vector<EdgeSlot> edge_slots(std::size_t n) {
  std::vector<EdgeSlot> out;
  for (std::size_t j = 0; j <= n; ++j) {
    for (std::size_t i = 0; i < n; ++i) out.push_back({true, {i, j}});
  }
  for (std::size_t j = 0; j < n; ++j) {
    for (std::size_t i = 0; i <= n; ++i) out.push_back({false, {i, j}});
  }
  return out;
}

}  // namespace

OgtpInstance normalized(OgtpInstance inst) {
  static const std::regex shade_re("[a-z0-9_]+");
  for (std::size_t i = 0; i < inst.shades.size(); ++i) {
    const auto& s = inst.shades[i];
    if (!std::regex_match(s, shade_re)) {
      throw Error(ErrorCode::InvalidArgument, "malformed shade name '" + s + "'");
    }
    if (std::find(inst.shades.begin(), inst.shades.begin() + i, s) != inst.shades.begin() + i) {
      throw Error(ErrorCode::InvalidArgument, "duplicate shade '" + s + "'");
    }
  }
  if (std::find(inst.shades.begin(), inst.shades.end(), kBlack) == inst.shades.end()) {
    throw Error(ErrorCode::InvalidArgument, "the shade set must contain black");
  }
  std::vector<ForbiddenPair> unique;
  for (const auto& f : inst.forbidden) {
    check_step(f.first, inst.shades);
    check_step(f.second, inst.shades);
    if (std::find(unique.begin(), unique.end(), f) == unique.end()) unique.push_back(f);
  }
  inst.forbidden = std::move(unique);
  return inst;
}

GridTiling uniform_tiling(std::size_t n, const std::string& shade) {
  GridTiling t;
  t.n = n;
  for (const auto& e : edge_slots(n)) (e.horizontal ? t.h : t.v)[e.cell] = shade;
  return t;
}

void validate_shape(const GridTiling& t) {
  if (t.n == 0) throw Error(ErrorCode::MalformedTiling, "tiling size must be at least 1");
  auto check = [&](const std::map<Cell, std::string>& m, std::size_t imax, std::size_t jmax,
                   const char* kind) {
    for (const auto& [c, s] : m) {
      if (c.first > imax || c.second > jmax) {
        throw Error(ErrorCode::MalformedTiling,
                    std::string(kind) + " cell " + cell_name(c) + " is outside the grid");
      }
    }
    for (std::size_t i = 0; i <= imax; ++i) {
      for (std::size_t j = 0; j <= jmax; ++j) {
        if (!m.count({i, j})) {
          throw Error(ErrorCode::MalformedTiling,
                      std::string("missing ") + kind + " cell " + cell_name({i, j}));
        }
      }
    }
  };
  check(t.h, t.n - 1, t.n, "horizontal");
  check(t.v, t.n, t.n - 1, "vertical");
}

std::optional<std::string> tiling_violation(const OgtpInstance& inst, const GridTiling& t) {
  validate_shape(t);
  const auto n = t.n;
  auto known = [&](const std::string& s) {
    return std::find(inst.shades.begin(), inst.shades.end(), s) != inst.shades.end();
  };
  for (const auto& e : edge_slots(n)) {
    const auto& s = (e.horizontal ? t.h : t.v).at(e.cell);
    if (!known(s)) {
      return std::string("a: ") + (e.horizontal ? "horizontal" : "vertical") + " edge at " +
             cell_name(e.cell) + " has unknown shade '" + s + "'";
    }
  }
  if (t.v.at({0, 0}) != kBlack) return std::string("b1: bottom-left vertical edge is not black");
  if (t.h.at({n - 1, n}) != kBlack) {
    return std::string("b2: upper-right horizontal edge is not black");
  }
  for (std::size_t i = 0; i <= n; ++i) {
    for (std::size_t j = 0; j <= n; ++j) {
      std::vector<TileStep> in;
      std::vector<TileStep> out;
      if (i > 0) in.push_back({'H', t.h.at({i - 1, j})});
      if (j > 0) in.push_back({'V', t.v.at({i, j - 1})});
      if (i < n) out.push_back({'H', t.h.at({i, j})});
      if (j < n) out.push_back({'V', t.v.at({i, j})});
      for (const auto& x : in) {
        for (const auto& y : out) {
          if (std::find(inst.forbidden.begin(), inst.forbidden.end(), ForbiddenPair{x, y}) !=
              inst.forbidden.end()) {
            return "b3: forbidden path " + step_name(x) + " " + step_name(y) + " through " +
                   cell_name({i, j});
          }
        }
      }
    }
  }
  return std::nullopt;
}

bool check_tiling(const OgtpInstance& inst, const GridTiling& t) {
  return !tiling_violation(inst, t).has_value();
}

std::optional<GridTiling> solve_bruteforce(const OgtpInstance& inst, std::size_t max_n) {
  const auto k = inst.shades.size();
  if (k == 0) return std::nullopt;
  for (std::size_t n = 1; n <= max_n; ++n) {
    const auto slots = edge_slots(n);
    if (std::pow(static_cast<double>(k), static_cast<double>(slots.size())) >
        kMaxBruteforceCandidates) {
      throw Error(ErrorCode::SearchSpaceTooLarge,
                  "grid size " + std::to_string(n) + " has " + std::to_string(k) + "^" +
                      std::to_string(slots.size()) + " candidate tilings");
    }
    std::vector<std::size_t> pick(slots.size(), 0);
    GridTiling t = uniform_tiling(n, inst.shades.front());
    for (;;) {
      for (std::size_t e = 0; e < slots.size(); ++e) {
        (slots[e].horizontal ? t.h : t.v)[slots[e].cell] = inst.shades[pick[e]];
      }
      if (check_tiling(inst, t)) return t;
      std::size_t e = slots.size();
      while (e > 0 && ++pick[e - 1] == k) pick[--e] = 0;
      if (e == 0) break;
    }
  }
  return std::nullopt;
}

std::vector<NamedLanguage> ViewGroups::all() const {
  std::vector<NamedLanguage> out(good);
  out.insert(out.end(), bad.begin(), bad.end());
  out.insert(out.end(), ugly.begin(), ugly.end());
  return out;
}

Alphabet reduction_alphabet(const std::vector<std::string>& shades) {
  std::vector<Symbol> symbols{Symbol::parse("alpha"), Symbol::parse("beta"),
                              Symbol::parse("omega")};
  for (char type : {'A', 'B'}) {
    for (char dir : {'H', 'V'}) {
      for (char temp : {'W', 'C'}) {
        for (const auto& s : shades) symbols.push_back(Symbol::tile(type, dir, temp, s));
      }
    }
  }
  return Alphabet(std::move(symbols));
}

ReductionOutput compile_reduction(const OgtpInstance& raw) {
  const auto inst = normalized(raw);
  ReductionOutput out;
  out.alphabet = reduction_alphabet(inst.shades);
  auto parse = [&](const std::string& text) { return parse_regex(text, out.alphabet); };
  auto add = [&](std::vector<NamedLanguage>& group, const std::string& prefix,
                 const std::string& text) {
    group.push_back({prefix + std::to_string(group.size() + 1), parse(text)});
  };

  for (const char* text : {
           "omega",
           "alpha + beta",
           "[B,H,W,*][A,V,W,*] + [B,V,C,*][A,H,C,*]",
           "[A,H,C,*][B,V,C,*] + [A,V,W,*][B,H,W,*]",
           "[B,V,C,*] + [B,V,W,*]",
           "[B,H,W,*] + [B,H,C,*]",
           "[A,V,W,*] + [A,V,C,*]",
           "[A,H,C,*] + [A,H,W,*]",
       }) {
    add(out.views.good, "good", text);
  }

  auto non_black = [&](const char* type_dir) {
    std::string u;
    for (const auto& s : inst.shades) {
      if (s == kBlack) continue;
      if (!u.empty()) u += " + ";
      u += std::string("[") + type_dir + ",W," + s + "]";
    }
    return u;
  };
  const auto first = non_black("A,V");
  const auto last = non_black("B,H");
  add(out.views.bad, "bad", first.empty() ? "{}" : "beta (" + first + ") S0* omega");
  add(out.views.bad, "bad", last.empty() ? "{}" : "beta S0* (" + last + ") omega");
  for (const auto& f : inst.forbidden) {
    add(out.views.bad, "bad",
        std::string("beta S0* [*,") + f.first.direction + ",W," + f.first.shade + "][*," +
            f.second.direction + ",W," + f.second.shade + "] S0* omega");
  }

  add(out.views.ugly, "ugly", "alpha S0* [*,*,W,*] S0* omega");
  add(out.views.ugly, "ugly", "beta S0* [*,*,C,*] S0* omega");

  out.q_start = parse("alpha ([A,H,C,*][B,V,C,*])^+ omega");
  out.q0 = out.q_start;
  for (const auto* group : {&out.views.ugly, &out.views.bad}) {
    for (const auto& l : *group) out.q0 = Regex::alt(out.q0, l.regex);
  }
  return out;
}

ConstraintSet view_constraints(const Alphabet& alphabet, const ViewGroups& views) {
  std::vector<Regex> languages;
  std::vector<std::string> names;
  for (const auto& l : views.all()) {
    languages.push_back(l.regex);
    names.push_back(l.name);
  }
  return arrows_of(languages, alphabet, names);
}

Game make_game(const ReductionOutput& reduction) {
  return make_game(reduction.alphabet, reduction.q0,
                   view_constraints(reduction.alphabet, reduction.views));
}

}  // namespace rpqdet
