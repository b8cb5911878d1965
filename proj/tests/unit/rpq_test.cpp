#include <doctest.h>

#include <random>

#include "oracles.hpp"
#include "rpqdet/error.hpp"
#include "rpqdet/gadget.hpp"
#include "rpqdet/rpq.hpp"

using namespace rpqdet;

namespace {

Nfa query(const char* text, const LabeledGraph& g) {
  Alphabet a(g.labels());
  return compile_nfa(parse_regex(text, a), a);
}

}  // namespace

TEST_CASE("evaluation on the grid") {
  auto g = build_grid(2).graph;
  auto pairs = eval(query("G:omega", g), g);
  REQUIRE(pairs.size() == 1);
  CHECK(g.name(pairs[0].x) == "v_2_2");
  CHECK(g.name(pairs[0].y) == "b");
  CHECK(to_string(*find_path(query("G:omega", g), g, "v_2_2", "b")) == "G:omega");
  CHECK_FALSE(find_path(query("G:omega", g), g, "a", "b").has_value());
  CHECK_THROWS_AS(holds(query("G:omega", g), g, "a", "nowhere"), Error);
}

TEST_CASE("start chain holds green Q_start and not red Q0") {
  auto r = compile_reduction({{"black"}, {}});
  auto chain = chain_graph(parse_word("G:alpha G:A-H-C-black G:B-V-C-black G:omega"), "a", "b");
  auto rg = r.alphabet.red_green();
  CHECK(holds(compile_nfa(recolor(r.q_start, Color::Green), rg), chain, "a", "b"));
  CHECK_FALSE(holds(compile_nfa(recolor(r.q0, Color::Red), rg), chain, "a", "b"));
}

TEST_CASE("epsilon queries relate every vertex to itself") {
  LabeledGraph g;
  g.add_edge("u", Symbol::parse("alpha"), "v");
  auto pairs = eval(query("() + alpha", g), g);
  CHECK(pairs.size() == 3);
  CHECK(holds(query("alpha*", g), g, "v", "v"));
  CHECK_FALSE(holds(query("alpha", g), g, "u", "u"));
}

TEST_CASE("eval, holds and find_path agree on random inputs") {
  std::mt19937 rng(11);
  std::vector<Symbol> labels{Symbol::parse("alpha"), Symbol::parse("beta"), Symbol::parse("omega"),
                             Symbol::parse("A-H-W-black")};
  Alphabet a(labels);
  for (int i = 0; i < 60; ++i) {
    auto g = oracle::random_graph(rng, labels, 6, 12);
    auto r = oracle::random_regex(rng, labels, 3);
    auto n = compile_nfa(r, a);
    auto pairs = eval(n, g);
    auto expected = oracle::eval_paths(r, g, g.vertex_count() * (n.state_count() + 1));
    CHECK(pairs.size() == expected.size());
    for (VertexIndex x = 0; x < g.vertex_count(); ++x) {
      for (VertexIndex y = 0; y < g.vertex_count(); ++y) {
        const bool in = expected.count({g.name(x), g.name(y)}) > 0;
        CHECK(holds(n, g, x, y) == in);
        auto p = find_path_witness(n, g, x, y);
        CHECK(p.has_value() == in);
        if (p) {
          CHECK(accepts(n, p->word));
          REQUIRE(p->vertices.size() == p->word.size() + 1);
          CHECK(p->vertices.front() == x);
          CHECK(p->vertices.back() == y);
          for (std::size_t k = 0; k < p->word.size(); ++k) {
            CHECK(g.has_edge(p->vertices[k], p->word[k], p->vertices[k + 1]));
          }
        }
      }
    }
  }
}

TEST_CASE("evaluation is monotone under edge addition") {
  std::mt19937 rng(5);
  std::vector<Symbol> labels{Symbol::parse("alpha"), Symbol::parse("beta")};
  Alphabet a(labels);
  for (int i = 0; i < 40; ++i) {
    auto g = oracle::random_graph(rng, labels, 5, 6);
    auto n = compile_nfa(oracle::random_regex(rng, labels, 3), a);
    auto before = eval(n, g);
    auto bigger = g;
    bigger.add_edge(0, labels[i % 2], static_cast<VertexIndex>(g.vertex_count() - 1));
    auto after = eval(n, bigger);
    CHECK(std::includes(after.begin(), after.end(), before.begin(), before.end()));
  }
}
