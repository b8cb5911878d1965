#include <doctest.h>

#include <vector>

#include "rpqdet/error.hpp"
#include "rpqdet/graph.hpp"

using namespace rpqdet;

TEST_CASE("chain graphs") {
  auto g = chain_graph(parse_word("G:alpha"), "a", "b");
  CHECK(g.vertex_count() == 2);
  CHECK(g.edge_count() == 1);
  auto g2 = chain_graph(parse_word("G:alpha G:A-H-C-black G:B-V-C-black G:omega"), "a", "b");
  CHECK(g2.vertex_count() == 5);
  CHECK(g2.edge_count() == 4);
  CHECK(g2.has_edge("x1", Symbol::parse("G:A-H-C-black"), "x2"));
  CHECK(g2.has_edge("x3", Symbol::parse("G:omega"), "b"));
  CHECK_THROWS_AS(chain_graph({}, "a", "b"), Error);
  CHECK_THROWS_AS(chain_graph(parse_word("alpha"), "a", "a"), Error);
  CHECK_THROWS_AS(chain_graph(parse_word("alpha beta"), "a", "x1"), Error);
}

TEST_CASE("edge sets and equality") {
  LabeledGraph g;
  CHECK(g.add_edge("a", Symbol::parse("G:alpha"), "b"));
  CHECK_FALSE(g.add_edge("a", Symbol::parse("G:alpha"), "b"));
  CHECK(g.add_edge("a", Symbol::parse("R:beta"), "b"));
  CHECK(g.edge_count() == 2);
  CHECK_THROWS_AS(g.index("zz"), Error);
  LabeledGraph h;
  h.add_edge("a", Symbol::parse("R:beta"), "b");
  h.add_edge("a", Symbol::parse("G:alpha"), "b");
  CHECK(g == h);
  CHECK(is_subgraph(h, g));
}

TEST_CASE("recolour, strip and union") {
  LabeledGraph g;
  g.add_edge("u", Symbol::parse("R:omega"), "v");
  g.add_edge("v", Symbol::parse("R:A-H-W-black"), "w");
  auto green = recolor(g, Color::Green);
  CHECK(green.has_edge("u", Symbol::parse("G:omega"), "v"));
  CHECK(recolor(recolor(g, Color::Red), Color::Red) == recolor(g, Color::Red));
  CHECK(green.edge_count() == g.edge_count());
  auto s = strip_shades(g);
  CHECK(s.has_edge("v", Symbol::parse("R:A-H-W"), "w"));
  CHECK(s.has_edge("u", Symbol::parse("R:omega"), "v"));
  CHECK(strip_shades(s) == s);

  LabeledGraph grey;
  grey.add_edge("u", Symbol::parse("R:omega"), "v");
  grey.add_edge("v", Symbol::parse("R:A-H-W-grey"), "w");
  CHECK(strip_shades(grey) == s);

  std::vector<LabeledGraph> same{g, g};
  CHECK(graph_union(same) == g);
  LabeledGraph other;
  other.add_edge("p", Symbol::parse("G:beta"), "q");
  std::vector<LabeledGraph> two{g, other};
  auto u = graph_union(two);
  CHECK(u.vertex_count() == 5);
  CHECK(u.edge_count() == 3);
}
