#include <algorithm>
#include <chrono>
#include <cstdio>
#include <functional>
#include <limits>
#include <map>
#include <random>
#include <set>
#include <string>
#include <tuple>
#include <vector>

#include "oracles.hpp"
#include "rpqdet/error.hpp"
#include "rpqdet/gadget.hpp"
#include "rpqdet/io.hpp"
#include "rpqdet/nfa.hpp"
#include "rpqdet/ogtp.hpp"
#include "rpqdet/rpq.hpp"

using namespace rpqdet;

namespace {

constexpr double kLimit1 = 10, kLimit2 = 30, kLimit4 = 10, kLimit5 = 10, kLimit6 = 60,
                 kLimit7 = 300, kLimit8 = 60, kLimit9 = 30;

using Clock = std::chrono::steady_clock;

struct Line {
  bool pass = false;
  std::string detail;
  double seconds = 0;
  double limit = 0;
};

std::map<int, Line> results;

void record(int id, bool pass, std::string detail, Clock::time_point t0, double limit) {
  Line l;
  l.seconds = std::chrono::duration<double>(Clock::now() - t0).count();
  l.limit = limit;
  l.pass = pass && (limit == 0 || l.seconds < limit);
  l.detail = std::move(detail);
  if (pass && !l.pass) l.detail += "; over time limit";
  results[id] = l;
}

// Parity bookkeeping shared by every play of criteria 2 and 5-7.
struct Parity {
  std::size_t moves = 0;
  std::size_t bad = 0;
  std::map<int, std::size_t> sources;
  void check(int source, const RoundRecord& r) {
    ++moves;
    ++sources[source];
    if (!oracle::parity_ok(r)) ++bad;
  }
  StepObserver observer(int source) {
    return [this, source](const Position&, const RoundRecord& r, const Position&) { check(source, r); };
  }
} parity;

OgtpInstance solvable() { return {{"black"}, {}}; }

OgtpInstance unsolvable() {
  std::vector<ForbiddenPair> all;
  for (char d : {'H', 'V'}) {
    for (char e : {'H', 'V'}) all.push_back({{d, "black"}, {e, "black"}});
  }
  return {{"black"}, all};
}

OgtpInstance two_shades() {
  return {{"black", "white"}, {{{'H', "white"}, {'V', "black"}}, {{'V', "white"}, {'V', "white"}}}};
}

const char* kDiagonal2 = "alpha A-H-C-black B-V-C-black A-H-C-black B-V-C-black omega";

std::set<std::pair<std::string, std::string>> named(const PairSet& pairs, const LabeledGraph& g) {
  std::set<std::pair<std::string, std::string>> out;
  for (const auto& p : pairs) out.insert({g.name(p.x), g.name(p.y)});
  return out;
}

bool oracle_counterexample(const Game& game, const EndpointedGraph& m) {
  const auto ab = std::make_pair(m.a, m.b);
  return oracle::satisfies(game.constraints, m.graph) &&
         oracle::eval_paths(recolor(game.q0, Color::Green), m.graph).count(ab) == 1 &&
         oracle::eval_paths(recolor(game.q0, Color::Red), m.graph).count(ab) == 0;
}

// Edge-by-edge homomorphism check, independent of the library's matcher.
bool maps_into(const VertexMap& h, const LabeledGraph& d, const LabeledGraph& m) {
  for (const auto& e : d.edges()) {
    auto s = h.find(d.name(e.src));
    auto t = h.find(d.name(e.dst));
    if (s == h.end() || t == h.end()) return false;
    if (!m.contains(s->second) || !m.contains(t->second)) return false;
    if (!m.has_edge(s->second, e.label, t->second)) return false;
  }
  return true;
}

std::string fmt(const char* f, auto... args) {
  char buf[256];
  std::snprintf(buf, sizeof buf, f, args...);
  return buf;
}

void criterion1() {
  auto t0 = Clock::now();
  std::mt19937 rng(20261018);
  std::vector<Symbol> pool{Symbol::parse("alpha"), Symbol::parse("beta"), Symbol::parse("omega"),
                           Symbol::parse("A-H-W-black"), Symbol::parse("B-V-C-black")};
  std::size_t mismatches = 0, pairs = 0;
  const int cases = 200;
  for (int i = 0; i < cases; ++i) {
    std::shuffle(pool.begin(), pool.end(), rng);
    std::vector<Symbol> labels(pool.begin(), pool.begin() + 1 + rng() % 4);
    Alphabet alphabet(labels);
    auto g = oracle::random_graph(rng, labels, 8, 16);
    auto r = oracle::random_regex(rng, labels, 4);
    auto n = compile_nfa(r, alphabet);
    auto got = named(eval(n, g), g);
    auto expected = oracle::eval_paths(r, g, g.vertex_count() * n.state_count());
    pairs += expected.size();
    if (got != expected) ++mismatches;
  }
  record(1, mismatches == 0, fmt("%d cases, %zu pairs, %zu mismatches", cases, pairs, mismatches), t0,
         kLimit1);
}

struct SavedPlay {
  Game game;
  PlayTrace trace;
};

std::vector<SavedPlay> fuzz_plays;

constexpr std::size_t kMaxChaseEdges = 400;
struct TooLarge {};

void criterion2() {
  auto t0 = Clock::now();
  std::mt19937 rng(7);
  Alphabet base({Symbol::parse("alpha"), Symbol::parse("beta"), Symbol::parse("omega")});
  std::vector<Symbol> base_syms(base.symbols().begin(), base.symbols().end());
  std::vector<Symbol> green, red;
  for (auto s : base_syms) {
    green.push_back(s.with_color(Color::Green));
    red.push_back(s.with_color(Color::Red));
  }
  const std::size_t target = 50;
  std::size_t fixpoints = 0, failures = 0, attempts = 0, oversized = 0;
  while (fixpoints < target && attempts < 5000) {
    ++attempts;
    ConstraintSet t(base.red_green());
    try {
      const int languages = 1 + rng() % 3;
      for (int k = 0; k < languages; ++k) {
        auto l = oracle::random_regex(rng, base_syms, 1 + rng() % 3);
        if (compile_nfa(l, base).accepts_epsilon()) continue;
        t.add_arrows(l, "L" + std::to_string(k));
      }
      if (rng() % 2) {
        auto lhs = oracle::random_regex(rng, green, 2);
        if (!compile_nfa(lhs, t.alphabet()).accepts_epsilon()) {
          t.add(lhs, oracle::random_regex(rng, red, 2), "raw");
        }
      }
    } catch (const Error&) {
      continue;
    }
    if (t.empty()) continue;
    Word w;
    for (std::size_t k = 0, len = 1 + rng() % 4; k < len; ++k) w.push_back(base_syms[rng() % 3]);
    auto game = make_game(base, Regex::empty(), t);
    ShortestStrategy s;
    auto check = parity.observer(2);
    auto guard = [&](const Position& before, const RoundRecord& r, const Position& after) {
      check(before, r, after);
      if (after.graph().edge_count() > kMaxChaseEdges) throw TooLarge{};
    };
    PlayOutcome out;
    try {
      out = run_play(game, s, w, 8, guard);
    } catch (const TooLarge&) {
      ++oversized;
      continue;
    }
    if (out.result.kind != PlayResultKind::WonFixpoint) continue;
    ++fixpoints;
    if (!oracle::satisfies(game.constraints, out.final_position.graph())) ++failures;
    if (fuzz_plays.size() < 10 && !out.trace.rounds.empty()) fuzz_plays.push_back({game, out.trace});
  }
  record(2, fixpoints == target && failures == 0,
         fmt("%zu fixpoints from %zu attempts (%zu abandoned over %zu edges), %zu violate a constraint",
             fixpoints, attempts, oversized, kMaxChaseEdges, failures),
         t0, kLimit2);
}

EndpointedGraph black_model(std::size_t m) { return decorate(build_grid(m), uniform_tiling(m)); }

PlayOutcome guided_outcome;
bool guided_ran = false;

void criteria4and5() {
  auto t0 = Clock::now();
  auto game = make_game(compile_reduction(solvable()));
  auto model = black_model(2);
  auto start = initial_position(parse_word(kDiagonal2));
  auto map = find_homomorphism(start.graph(), model.graph, {{{"a", model.a}, {"b", model.b}}, false});
  std::size_t rounds_checked = 0, broken = 0;
  bool played = false;
  if (map && maps_into(*map, start.graph(), model.graph)) {
    GuidedStrategy s(model.graph, *map);
    auto observer = [&](const Position& before, const RoundRecord& r, const Position& after) {
      parity.check(5, r);
      ++rounds_checked;
      if (!maps_into(s.map(), after.graph(), model.graph) || s.map().at("a") != model.a ||
          s.map().at("b") != model.b) {
        ++broken;
      }
      (void)before;
    };
    guided_outcome = run_play(game, s, parse_word(kDiagonal2), 10, observer);
    played = guided_ran = true;
  }
  const bool won = played && guided_outcome.result.kind == PlayResultKind::WonFixpoint;
  record(4, won && broken == 0 && rounds_checked > 0,
         fmt("%s after %zu moves, homomorphism broken in %zu", played ? to_string(guided_outcome.result.kind).c_str() : "no initial map",
             rounds_checked, broken),
         t0, kLimit4);

  t0 = Clock::now();
  if (!played) {
    record(5, false, "criterion 4 play did not run", t0, kLimit5);
    return;
  }
  const auto& fin = guided_outcome.final_position.graph();
  auto grid = build_grid(2);
  auto stripped = strip_shades(fin);
  const auto labels = stripped.labels().size();
  const bool iso = iso_shadeless(fin, grid.graph);
  // Independent direction: the grid maps onto the final position one to one.
  auto back = find_homomorphism(grid.graph, stripped, {{{"a", "a"}, {"b", "b"}}, true});
  const bool ok = won && guided_outcome.result.round == 3 && iso && back &&
                  maps_into(*back, grid.graph, stripped) && fin.vertex_count() == 11 &&
                  fin.edge_count() == 28 && labels == 12;
  record(5, ok,
         fmt("fixpoint at round %zu, %zu vertices, %zu edges, %zu labels, iso %s", guided_outcome.result.round,
             fin.vertex_count(), fin.edge_count(), labels, iso ? "yes" : "no"),
         t0, kLimit5);
}

Nfa union_nfa(const std::vector<NamedLanguage>& langs, const Alphabet& alphabet) {
  Regex r = Regex::empty();
  for (const auto& l : langs) r = Regex::alt(r, l.regex);
  return compile_nfa(r, alphabet);
}

void criterion6() {
  auto t0 = Clock::now();
  auto red = compile_reduction(solvable());
  auto game = make_game(red);
  std::vector<NamedLanguage> langs = red.views.bad;
  langs.insert(langs.end(), red.views.ugly.begin(), red.views.ugly.end());
  auto words = enumerate_words(union_nfa(langs, red.alphabet), 8);
  const Caps caps{8, 3, 2, std::numeric_limits<std::size_t>::max()};
  std::size_t not_lost = 0, late = 0, naive_checked = 0, naive_bad = 0;
  std::vector<Position> starts;
  starts.reserve(words.size());
  for (const auto& w : words) starts.push_back(initial_position(w));
  auto outcomes = explore_positions(game, starts, caps, parity.observer(6));
  for (std::size_t i = 0; i < words.size(); ++i) {
    if (outcomes[i].kind != BranchKind::Lost) ++not_lost;
    if (outcomes[i].deepest_loss > 2) ++late;
    if (words[i].size() <= 3) {
      ++naive_checked;
      auto naive = oracle::naive_explore(game, starts[i], 3, 2, parity.observer(6));
      if (!naive.all_lose || naive.latest_loss > 2) ++naive_bad;
    }
  }
  record(6, !words.empty() && not_lost == 0 && late == 0 && naive_checked > 0 && naive_bad == 0,
         fmt("%zu words, %zu not lost, %zu lost after round 2, naive cross-check %zu/%zu", words.size(),
             not_lost, late, naive_checked - naive_bad, naive_checked),
         t0, kLimit6);
}

void criterion7() {
  auto t0 = Clock::now();
  auto inst = unsolvable();
  bool none = !solve_bruteforce(inst, 3).has_value();
  bool oracle_none = true;
  for (std::size_t n = 1; n <= 3; ++n) oracle_none &= !oracle::tiling_ok(inst, uniform_tiling(n));
  auto game = make_game(compile_reduction(inst));
  ExploreOptions options;
  options.observer = parity.observer(7);
  auto v = explore(game, Caps{8, 3, 6, 4}, options);
  record(7, none && oracle_none && v.kind == VerdictKind::AllPlaysLose,
         fmt("solver %s up to n=3, %s over %zu initial words", none && oracle_none ? "NONE" : "found a tiling",
             to_string(v.kind).c_str(), v.initial_words),
         t0, kLimit7);
}

void criterion8() {
  auto t0 = Clock::now();
  auto inst = solvable();
  auto game = make_game(compile_reduction(inst));
  auto v = explore(game, Caps{});
  bool cert_ok = false;
  std::size_t cert_vertices = 0;
  if (v.kind == VerdictKind::Nondeterminate && v.certificate) {
    const auto& c = v.certificate->state;
    cert_vertices = c.graph.vertex_count();
    cert_ok = check_counterexample(c.graph, game, c.a, c.b).ok() && oracle_counterexample(game, c);
  }
  auto solution = solve_bruteforce(inst, 3);
  bool direct_ok = solution && oracle::tiling_ok(inst, *solution);
  if (direct_ok) {
    auto m = decorate(build_grid(solution->n), *solution);
    direct_ok = check_counterexample(m.graph, game, m.a, m.b).ok() && oracle_counterexample(game, m);
  }
  auto grid2 = black_model(2);
  const bool grid_ok = check_counterexample(grid2.graph, game, grid2.a, grid2.b).ok() &&
                       oracle_counterexample(game, grid2);
  record(8, cert_ok && direct_ok && grid_ok,
         fmt("%s, certificate with %zu vertices %s, decorated grids %s", to_string(v.kind).c_str(),
             cert_vertices, cert_ok ? "verified" : "rejected", direct_ok && grid_ok ? "verified" : "rejected"),
         t0, kLimit8);
}

// Subset of NFA states, kept sorted.
using Subset = std::vector<Nfa::State>;

Subset advance(const Nfa& n, const Subset& s, Symbol sym) {
  Subset out;
  auto idx = n.alphabet().index_of(sym);
  if (!idx) return out;
  for (auto q : s) {
    for (const auto& t : n.transitions(q, static_cast<std::uint32_t>(*idx))) out.push_back(t.target);
  }
  std::sort(out.begin(), out.end());
  out.erase(std::unique(out.begin(), out.end()), out.end());
  return out;
}

bool any_accepting(const Nfa& n, const Subset& s) {
  for (auto q : s) {
    if (n.accepting(q)) return true;
  }
  return false;
}

// Exhaustive walk over all words of length <= depth of `lang`, sharing
// prefixes and memoising on (remaining length, both subsets). Returns the
// number of words of `lang` that `q0` rejects; `words` counts all of them.
struct Inclusion {
  const Nfa& lang;
  const Nfa& q0;
  std::map<std::tuple<std::size_t, Subset, Subset>, std::pair<std::uint64_t, std::uint64_t>> memo;

  std::pair<std::uint64_t, std::uint64_t> walk(const Subset& l, const Subset& q, std::size_t left) {
    auto key = std::make_tuple(left, l, q);
    if (auto it = memo.find(key); it != memo.end()) return it->second;
    std::uint64_t words = 0, rejected = 0;
    if (any_accepting(lang, l)) {
      ++words;
      if (!any_accepting(q0, q)) ++rejected;
    }
    if (left > 0) {
      for (auto sym : lang.alphabet().symbols()) {
        auto nl = advance(lang, l, sym);
        if (nl.empty()) continue;
        auto [w, r] = walk(nl, advance(q0, q, sym), left - 1);
        words += w;
        rejected += r;
      }
    }
    return memo[key] = {words, rejected};
  }
};

void criterion9() {
  auto t0 = Clock::now();
  std::string detail;
  bool ok = true;
  for (const auto& inst : {solvable(), unsolvable(), two_shades()}) {
    auto red = compile_reduction(inst);
    const auto f = normalized(inst).forbidden.size();
    const bool counts = red.views.good.size() == 8 && red.views.bad.size() == 2 + f &&
                        red.views.ugly.size() == 2 && red.alphabet.size() == 3 + 8 * inst.shades.size();
    auto q0 = compile_nfa(red.q0, red.alphabet);
    std::uint64_t words = 0, rejected = 0;
    std::vector<NamedLanguage> langs = red.views.bad;
    langs.insert(langs.end(), red.views.ugly.begin(), red.views.ugly.end());
    for (const auto& l : langs) {
      auto n = compile_nfa(l.regex, red.alphabet);
      Inclusion inc{n, q0, {}};
      auto [w, r] = inc.walk({n.start()}, {q0.start()}, 8);
      words += w;
      rejected += r;
    }
    ok &= counts && rejected == 0;
    if (!detail.empty()) detail += "; ";
    detail += fmt("%zu shade(s) |F|=%zu: counts %s, %llu words, %llu rejected", inst.shades.size(), f,
                  counts ? "ok" : "wrong", static_cast<unsigned long long>(words),
                  static_cast<unsigned long long>(rejected));
  }
  record(9, ok, detail, t0, kLimit9);
}

// Replays `trace` from its text form and compares every position.
bool replay_identical(const Game& game, const PlayTrace& trace, std::size_t max_rounds) {
  std::vector<std::string> original, replayed;
  auto collect = [](std::vector<std::string>& out) {
    return [&out](const Position& before, const RoundRecord&, const Position& after) {
      if (out.empty()) out.push_back(dump_graph(before.graph()));
      out.push_back(dump_graph(after.graph()));
    };
  };
  auto first = ScriptedStrategy::from_trace(trace);
  auto a = run_play(game, first, trace.initial_word, max_rounds, collect(original));
  auto text = dump_trace(trace);
  auto parsed = parse_trace(text);
  auto second = ScriptedStrategy::from_trace(parsed);
  auto b = run_play(game, second, parsed.initial_word, max_rounds, collect(replayed));
  return dump_trace(parsed) == text && dump_trace(a.trace) == text && dump_trace(b.trace) == text &&
         original == replayed && !original.empty() &&
         dump_graph(a.final_position.graph()) == dump_graph(b.final_position.graph());
}

void criterion10() {
  auto t0 = Clock::now();
  std::size_t traces = 0, identical = 0;
  auto solv = make_game(compile_reduction(solvable()));
  if (guided_ran) {
    ++traces;
    identical += replay_identical(solv, guided_outcome.trace, 10);
  }
  {
    ShortestStrategy s;
    auto out = run_play(solv, s, parse_word("alpha A-H-C-black B-V-C-black omega"), 2);
    ++traces;
    identical += replay_identical(solv, out.trace, 2);
  }
  for (const auto& p : fuzz_plays) {
    ++traces;
    identical += replay_identical(p.game, p.trace, 8);
  }
  record(10, traces > 2 && identical == traces,
         fmt("%zu of %zu traces replay byte-identically", identical, traces), t0, 0);
}

}  // namespace

int main() {
  criterion1();
  criterion2();
  criteria4and5();
  criterion6();
  criterion7();
  criterion8();
  criterion9();
  criterion10();
  {
    auto t0 = Clock::now();
    auto& n = parity.sources;
    const bool all_sources = n.size() == 4 && n[2] && n[5] && n[6] && n[7];
    record(3, parity.bad == 0 && all_sources,
           fmt("%zu moves (criterion 2: %zu, 5: %zu, 6: %zu, 7: %zu), %zu with a wrong colour", parity.moves,
               n[2], n[5], n[6], n[7], parity.bad),
           t0, 0);
  }
  int failed = 0;
  for (const auto& [id, l] : results) {
    std::printf("%s criterion %d: %s (%.2fs", l.pass ? "PASS" : "FAIL", id, l.detail.c_str(), l.seconds);
    if (l.limit > 0) std::printf(" < %.0fs", l.limit);
    std::printf(")\n");
    failed += !l.pass;
  }
  return failed == 0 ? 0 : 1;
}
