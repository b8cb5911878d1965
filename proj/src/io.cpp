#include "rpqdet/io.hpp"

#include <fstream>
#include <sstream>

#include <json.hpp>

#include "rpqdet/error.hpp"

namespace rpqdet {

using Json = nlohmann::ordered_json;

namespace {

Json parse_json(std::string_view text, const char* what) {
  try {
    return Json::parse(text);
  } catch (const Json::parse_error& e) {
    throw Error(ErrorCode::Syntax, std::string("malformed ") + what + " JSON: " + e.what());
  }
}

[[noreturn]] void bad_field(const char* what, const std::string& detail) {
  throw Error(ErrorCode::Syntax, std::string("malformed ") + what + ": " + detail);
}

template <typename F>
auto guarded(const char* what, F&& f) {
  try {
    return f();
  } catch (const Json::exception& e) {
    bad_field(what, e.what());
  }
}

std::string dump(const Json& j) { return j.dump(2) + "\n"; }

Json edge_json(const std::string& src, Symbol label, const std::string& dst) {
  return Json{{"src", src}, {"label", label.name()}, {"dst", dst}};
}

Json alphabet_json(const Alphabet& a) {
  Json out = Json::array();
  for (Symbol s : a.symbols()) out.push_back(s.name());
  return out;
}

Alphabet alphabet_from(const Json& j) {
  std::vector<std::string> tokens = j.get<std::vector<std::string>>();
  return Alphabet::from_tokens(tokens);
}

Word word_from(const Json& j) { return parse_word(j.get<std::string>()); }

}  // namespace

std::string dump_graph(const LabeledGraph& g) {
  Json edges = Json::array();
  for (const auto& e : g.edges()) edges.push_back(edge_json(g.name(e.src), e.label, g.name(e.dst)));
  Json vertices(std::vector<std::string>(g.vertex_names().begin(), g.vertex_names().end()));
  return dump(Json{{"vertices", vertices}, {"edges", edges}});
}

LabeledGraph parse_graph(std::string_view text) {
  const Json j = parse_json(text, "graph");
  return guarded("graph", [&] {
    LabeledGraph g;
    if (j.contains("vertices")) {
      for (const auto& v : j.at("vertices")) g.add_vertex(v.get<std::string>());
    }
    for (const auto& e : j.at("edges")) {
      g.add_edge(e.at("src").get<std::string>(), Symbol::parse(e.at("label").get<std::string>()),
                 e.at("dst").get<std::string>());
    }
    return g;
  });
}

std::string dump_ogtp(const OgtpInstance& inst) {
  Json forbidden = Json::array();
  for (const auto& f : inst.forbidden) {
    forbidden.push_back(Json::array({Json::array({std::string(1, f.first.direction), f.first.shade}),
                                     Json::array({std::string(1, f.second.direction), f.second.shade})}));
  }
  return dump(Json{{"shades", inst.shades}, {"forbidden", forbidden}});
}

OgtpInstance parse_ogtp(std::string_view text) {
  const Json j = parse_json(text, "OGTP");
  auto inst = guarded("OGTP instance", [&] {
    OgtpInstance out;
    out.shades = j.at("shades").get<std::vector<std::string>>();
    if (j.contains("forbidden")) {
      for (const auto& f : j.at("forbidden")) {
        auto step = [](const Json& s) {
          const auto dir = s.at(0).get<std::string>();
          if (dir != "H" && dir != "V") bad_field("OGTP instance", "direction must be H or V");
          return TileStep{dir[0], s.at(1).get<std::string>()};
        };
        if (f.size() != 2) bad_field("OGTP instance", "a forbidden pair has two steps");
        out.forbidden.push_back({step(f.at(0)), step(f.at(1))});
      }
    }
    return out;
  });
  return normalized(std::move(inst));
}

std::string dump_tiling(const GridTiling& t) {
  auto side = [](const std::map<Cell, std::string>& m) {
    Json out = Json::object();
    for (const auto& [c, s] : m) out[std::to_string(c.first) + "," + std::to_string(c.second)] = s;
    return out;
  };
  return dump(Json{{"n", t.n}, {"h", side(t.h)}, {"v", side(t.v)}});
}

GridTiling parse_tiling(std::string_view text) {
  const Json j = parse_json(text, "tiling");
  auto t = guarded("tiling", [&] {
    GridTiling out;
    out.n = j.at("n").get<std::size_t>();
    auto side = [](const Json& m, std::map<Cell, std::string>& into) {
      for (const auto& [key, shade] : m.items()) {
        std::size_t i = 0;
        std::size_t j = 0;
        char comma = 0;
        std::istringstream in(key);
        if (!(in >> i >> comma >> j) || comma != ',' || !in.eof()) {
          bad_field("tiling", "cell key '" + key + "' is not of the form i,j");
        }
        into[{i, j}] = shade.get<std::string>();
      }
    };
    side(j.at("h"), out.h);
    side(j.at("v"), out.v);
    return out;
  });
  validate_shape(t);
  return t;
}

std::string dump_constraints(const ConstraintSet& t) {
  Json list = Json::array();
  for (const auto& rc : t.constraints()) {
    list.push_back(Json{{"name", rc.name}, {"lhs", to_string(rc.lhs)}, {"rhs", to_string(rc.rhs)}});
  }
  return dump(Json{{"constraints", list}});
}

namespace {

ConstraintSet constraints_from(const Json& list, const Alphabet& alphabet) {
  ConstraintSet out(alphabet.red_green());
  for (const auto& c : list) {
    auto lhs = parse_regex(c.at("lhs").get<std::string>(), out.alphabet());
    auto rhs = parse_regex(c.at("rhs").get<std::string>(), out.alphabet());
    out.add(lhs, rhs, c.value("name", std::string{}));
  }
  return out;
}

Json group_json(const std::vector<NamedLanguage>& group) {
  Json out = Json::array();
  for (const auto& l : group) out.push_back(to_string(l.regex));
  return out;
}

Json reduction_json(const ReductionOutput& r) {
  return Json{{"alphabet", alphabet_json(r.alphabet)},
              {"q_start", to_string(r.q_start)},
              {"q0", to_string(r.q0)},
              {"views",
               {{"good", group_json(r.views.good)},
                {"bad", group_json(r.views.bad)},
                {"ugly", group_json(r.views.ugly)}}}};
}

}  // namespace

ConstraintSet parse_constraints(std::string_view text, const Alphabet& alphabet) {
  const Json j = parse_json(text, "constraint set");
  return guarded("constraint set", [&] { return constraints_from(j.at("constraints"), alphabet); });
}

std::string dump_reduction(const ReductionOutput& r) { return dump(reduction_json(r)); }

std::string dump_instance(const Instance& inst) {
  Json j = reduction_json(inst.reduction);
  if (inst.constraints) {
    Json list = Json::array();
    for (const auto& rc : inst.constraints->constraints()) {
      list.push_back(Json{{"name", rc.name}, {"lhs", to_string(rc.lhs)}, {"rhs", to_string(rc.rhs)}});
    }
    j["constraints"] = list;
  }
  return dump(j);
}

Instance parse_instance(std::string_view text) {
  const Json j = parse_json(text, "instance");
  return guarded("instance", [&] {
    Instance out;
    auto& r = out.reduction;
    r.alphabet = alphabet_from(j.at("alphabet"));
    r.q0 = parse_regex(j.at("q0").get<std::string>(), r.alphabet);
    if (j.contains("q_start")) r.q_start = parse_regex(j.at("q_start").get<std::string>(), r.alphabet);
    if (j.contains("views")) {
      for (const auto& [group, list] : j.at("views").items()) {
        std::vector<NamedLanguage>* into = group == "good"   ? &r.views.good
                                           : group == "bad"  ? &r.views.bad
                                           : group == "ugly" ? &r.views.ugly
                                                             : nullptr;
        if (!into) bad_field("instance", "unknown view group '" + group + "'");
        for (const auto& text : list) {
          into->push_back({group + std::to_string(into->size() + 1),
                           parse_regex(text.get<std::string>(), r.alphabet)});
        }
      }
    }
    if (j.contains("constraints")) out.constraints = constraints_from(j.at("constraints"), r.alphabet);
    return out;
  });
}

Game make_game(const Instance& inst) {
  if (inst.constraints) {
    return make_game(inst.reduction.alphabet, inst.reduction.q0, *inst.constraints);
  }
  return make_game(inst.reduction);
}

std::string dump_trace(const PlayTrace& trace) {
  std::string out = Json{{"round", 0}, {"initial_word", to_string(trace.initial_word)}}.dump() + "\n";
  for (const auto& r : trace.rounds) {
    Json requests = Json::array();
    for (const auto& q : r.requests) requests.push_back(Json::array({q.x, q.y, q.constraint}));
    Json choices = Json::array();
    for (const auto& w : r.choices) choices.push_back(to_string(w));
    Json added = Json::array();
    for (const auto& e : r.added_edges) added.push_back(edge_json(e.src, e.label, e.dst));
    out += Json{{"round", r.round}, {"requests", requests}, {"choices", choices}, {"added_edges", added}}
               .dump() +
           "\n";
  }
  return out;
}

PlayTrace parse_trace(std::string_view text) {
  PlayTrace trace;
  std::istringstream in{std::string(text)};
  std::string line;
  bool seen_start = false;
  while (std::getline(in, line)) {
    if (line.find_first_not_of(" \t\r") == std::string::npos) continue;
    const Json j = parse_json(line, "trace");
    guarded("trace", [&] {
      if (j.at("round").get<std::size_t>() == 0) {
        trace.initial_word = word_from(j.at("initial_word"));
        seen_start = true;
        return 0;
      }
      RoundRecord r;
      r.round = j.at("round").get<std::size_t>();
      for (const auto& q : j.at("requests")) {
        r.requests.push_back({q.at(0).get<std::string>(), q.at(1).get<std::string>(),
                              q.at(2).get<std::size_t>()});
      }
      for (const auto& w : j.at("choices")) r.choices.push_back(word_from(w));
      for (const auto& e : j.at("added_edges")) {
        r.added_edges.push_back({e.at("src").get<std::string>(),
                                 Symbol::parse(e.at("label").get<std::string>()),
                                 e.at("dst").get<std::string>()});
      }
      trace.rounds.push_back(std::move(r));
      return 0;
    });
  }
  if (!seen_start) throw Error(ErrorCode::Syntax, "malformed trace: no round 0 line");
  return trace;
}

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw Error(ErrorCode::Io, "cannot read " + path);
  std::ostringstream buf;
  buf << in.rdbuf();
  return buf.str();
}

void write_file(const std::string& path, std::string_view text) {
  std::ofstream out(path, std::ios::binary);
  if (!out || !out.write(text.data(), static_cast<std::streamsize>(text.size()))) {
    throw Error(ErrorCode::Io, "cannot write " + path);
  }
}

}  // namespace rpqdet
