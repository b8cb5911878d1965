#include "rpqdet/gadget.hpp"

#include <algorithm>
#include <deque>
#include <map>

#include "rpqdet/error.hpp"
#include "rpqdet/rpq.hpp"

namespace rpqdet {

std::string grid_vertex(std::size_t i, std::size_t j) {
  return "v_" + std::to_string(i) + "_" + std::to_string(j);
}

EndpointedGraph build_grid(std::size_t m) {
  if (m == 0) throw Error(ErrorCode::InvalidArgument, "grid size must be at least 1");
  EndpointedGraph out{{}, "a", "b"};
  auto& g = out.graph;
  g.add_vertex("a");
  for (std::size_t i = 0; i <= m; ++i) {
    for (std::size_t j = 0; j <= m; ++j) g.add_vertex(grid_vertex(i, j));
  }
  g.add_vertex("b");
  g.add_edge("a", Symbol::parse("G:alpha"), grid_vertex(0, 0));
  g.add_edge("a", Symbol::parse("R:beta"), grid_vertex(0, 0));
  for (std::size_t i = 0; i <= m; ++i) {
    for (std::size_t j = 0; j <= m; ++j) {
      const char type = (i + j) % 2 == 0 ? 'A' : 'B';
      auto link = [&](char dir, std::size_t i2, std::size_t j2) {
        g.add_edge(grid_vertex(i, j), Symbol::tile(type, dir, 'C', "", Color::Green),
                   grid_vertex(i2, j2));
        g.add_edge(grid_vertex(i, j), Symbol::tile(type, dir, 'W', "", Color::Red),
                   grid_vertex(i2, j2));
      };
      if (i < m) link('H', i + 1, j);
      if (j < m) link('V', i, j + 1);
    }
  }
  g.add_edge(grid_vertex(m, m), Symbol::parse("G:omega"), "b");
  g.add_edge(grid_vertex(m, m), Symbol::parse("R:omega"), "b");
  return out;
}

EndpointedGraph decorate(const EndpointedGraph& g, const GridTiling& t) {
  validate_shape(t);
  const auto n = t.n;
  if (g.graph.vertex_count() != (n + 1) * (n + 1) + 2 || !g.graph.contains(grid_vertex(n, n))) {
    throw Error(ErrorCode::SizeMismatch,
                "graph is not a grid of size " + std::to_string(n));
  }
  std::map<std::string, Cell> cells;
  for (std::size_t i = 0; i <= n; ++i) {
    for (std::size_t j = 0; j <= n; ++j) cells[grid_vertex(i, j)] = {i, j};
  }
  EndpointedGraph out{{}, g.a, g.b};
  for (const auto& name : g.graph.vertex_names()) out.graph.add_vertex(name);
  for (const auto& e : g.graph.edges()) {
    Symbol label = e.label;
    const auto& info = e.label.info();
    if (info.is_tile()) {
      auto it = cells.find(g.graph.name(e.src));
      if (it == cells.end()) {
        throw Error(ErrorCode::SizeMismatch,
                    "tile edge leaves non-grid vertex " + g.graph.name(e.src));
      }
      const auto& shades = info.direction == 'H' ? t.h : t.v;
      auto shade = shades.find(it->second);
      if (shade == shades.end()) {
        throw Error(ErrorCode::SizeMismatch,
                    "no grid edge for " + g.graph.name(e.src) + " " + e.label.name());
      }
      label = Symbol::tile(info.type, info.direction, info.temperature, shade->second,
                           info.color);
    }
    out.graph.add_edge(e.src, label, e.dst);
  }
  return out;
}

std::vector<std::string> CounterexampleReport::failures() const {
  std::vector<std::string> out;
  if (!unsatisfied.empty()) {
    std::string line = "constraints fail:";
    for (const auto& n : unsatisfied) line += " " + n;
    out.push_back(line);
  }
  if (!green_q0) out.push_back("G(Q0) fails");
  if (red_q0) out.push_back("R(Q0) holds");
  return out;
}

CounterexampleReport check_counterexample(const LabeledGraph& m, const Game& game,
                                          const std::string& a, const std::string& b) {
  const auto x = m.index(a);
  const auto y = m.index(b);
  CounterexampleReport report;
  for (const auto& rc : game.constraints.constraints()) {
    if (!satisfied(rc, m)) report.unsatisfied.push_back(rc.name);
  }
  report.green_q0 = holds(game.green_q0, m, x, y);
  report.red_q0 = holds(game.red_q0, m, x, y);
  return report;
}

namespace {

struct Incidence {
  VertexIndex other;
  Symbol label;
  bool outgoing;
};

using LabelCounts = std::map<std::pair<std::uint32_t, bool>, std::size_t>;

struct Profile {
  std::vector<std::vector<Incidence>> incident;
  std::vector<LabelCounts> counts;
};

Profile profile(const LabeledGraph& g) {
  Profile p;
  p.incident.resize(g.vertex_count());
  p.counts.resize(g.vertex_count());
  for (const auto& e : g.edges()) {
    p.incident[e.src].push_back({e.dst, e.label, true});
    ++p.counts[e.src][{e.label.id(), true}];
    if (e.src != e.dst) {
      p.incident[e.dst].push_back({e.src, e.label, false});
    }
    ++p.counts[e.dst][{e.label.id(), false}];
  }
  return p;
}

bool covers(const LabelCounts& need, const LabelCounts& have, bool counted) {
  for (const auto& [key, k] : need) {
    auto it = have.find(key);
    if (it == have.end() || (counted && it->second < k)) return false;
  }
  return true;
}

class Matcher {
 public:
  Matcher(const LabeledGraph& d, const LabeledGraph& m, bool injective)
      : d_(d), m_(m), injective_(injective), pd_(profile(d)), pm_(profile(m)) {
    image_.assign(d.vertex_count(), kUnset);
    used_.assign(m.vertex_count(), 0);
  }

  bool pin(VertexIndex v, VertexIndex w) {
    if (image_[v] != kUnset) return image_[v] == w;
    if (!fits(v, w)) return false;
    assign(v, w);
    return true;
  }

  bool run() {
    order();
    return extend(0);
  }

  VertexMap result() const {
    VertexMap out;
    for (VertexIndex v = 0; v < image_.size(); ++v) out[d_.name(v)] = m_.name(image_[v]);
    return out;
  }

 private:
  static constexpr VertexIndex kUnset = static_cast<VertexIndex>(-1);

  void order() {
    std::vector<char> seen(d_.vertex_count(), 0);
    std::deque<VertexIndex> queue;
    for (VertexIndex v = 0; v < image_.size(); ++v) {
      if (image_[v] != kUnset) {
        seen[v] = 1;
        queue.push_back(v);
      }
    }
    auto drain = [&] {
      while (!queue.empty()) {
        auto v = queue.front();
        queue.pop_front();
        if (image_[v] == kUnset) order_.push_back(v);
        for (const auto& inc : pd_.incident[v]) {
          if (!seen[inc.other]) {
            seen[inc.other] = 1;
            queue.push_back(inc.other);
          }
        }
      }
    };
    drain();
    for (VertexIndex v = 0; v < image_.size(); ++v) {
      if (!seen[v]) {
        seen[v] = 1;
        queue.push_back(v);
        drain();
      }
    }
  }

  bool fits(VertexIndex v, VertexIndex w) const {
    if (injective_ && used_[w]) return false;
    if (!covers(pd_.counts[v], pm_.counts[w], injective_)) return false;
    for (const auto& inc : pd_.incident[v]) {
      VertexIndex u = inc.other == v ? w : image_[inc.other];
      if (u == kUnset) continue;
      bool ok = inc.outgoing ? m_.has_edge(w, inc.label, u) : m_.has_edge(u, inc.label, w);
      if (!ok) return false;
    }
    return true;
  }

  void assign(VertexIndex v, VertexIndex w) {
    image_[v] = w;
    used_[w] = 1;
  }

  void unassign(VertexIndex v) {
    used_[image_[v]] = 0;
    image_[v] = kUnset;
  }

  bool extend(std::size_t k) {
    if (k == order_.size()) return true;
    const auto v = order_[k];
    for (VertexIndex w = 0; w < m_.vertex_count(); ++w) {
      if (!fits(v, w)) continue;
      const bool was_used = used_[w];
      assign(v, w);
      if (extend(k + 1)) return true;
      image_[v] = kUnset;
      used_[w] = was_used;
    }
    return false;
  }

  const LabeledGraph& d_;
  const LabeledGraph& m_;
  bool injective_;
  Profile pd_;
  Profile pm_;
  std::vector<VertexIndex> image_;
  std::vector<char> used_;
  std::vector<VertexIndex> order_;
};

}  // namespace

std::optional<VertexMap> find_homomorphism(const LabeledGraph& d, const LabeledGraph& m,
                                           const HomomorphismOptions& options) {
  Matcher matcher(d, m, options.injective);
  for (const auto& [from, to] : options.pinned) {
    auto v = d.find(from);
    auto w = m.find(to);
    if (!v || !w) return std::nullopt;
    if (!matcher.pin(*v, *w)) return std::nullopt;
  }
  if (!matcher.run()) return std::nullopt;
  return matcher.result();
}

bool is_homomorphism(const VertexMap& h, const LabeledGraph& d, const LabeledGraph& m) {
  auto image = [&](VertexIndex v) -> std::optional<VertexIndex> {
    auto it = h.find(d.name(v));
    if (it == h.end()) return std::nullopt;
    return m.find(it->second);
  };
  for (VertexIndex v = 0; v < d.vertex_count(); ++v) {
    if (!image(v)) return false;
  }
  for (const auto& e : d.edges()) {
    if (!m.has_edge(*image(e.src), e.label, *image(e.dst))) return false;
  }
  return true;
}

bool iso_shadeless(const LabeledGraph& d, const LabeledGraph& e) {
  const auto sd = strip_shades(d);
  const auto se = strip_shades(e);
  if (sd.vertex_count() != se.vertex_count() || sd.edge_count() != se.edge_count()) return false;
  return find_homomorphism(sd, se, {{}, true}).has_value();
}

}  // namespace rpqdet
