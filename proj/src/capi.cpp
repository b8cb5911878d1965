#include "rpqdet/rpqdet.h"

#include <algorithm>
#include <cstdlib>
#include <cstring>
#include <iostream>
#include <memory>
#include <string>

#include "rpqdet/error.hpp"
#include "rpqdet/gadget.hpp"
#include "rpqdet/io.hpp"
#include "rpqdet/rpq.hpp"

struct rpqdet_graph {
  rpqdet::LabeledGraph g;
};
struct rpqdet_instance {
  rpqdet::Instance inst;
  rpqdet::Game game;
};
struct rpqdet_ogtp {
  rpqdet::OgtpInstance o;
};
struct rpqdet_tiling {
  rpqdet::GridTiling t;
};

namespace {

thread_local std::string last_error;

rpqdet_status status_of(rpqdet::ErrorCode code) {
  using rpqdet::ErrorCode;
  switch (code) {
    case ErrorCode::Syntax: return RPQDET_E_SYNTAX;
    case ErrorCode::UnknownSymbol: return RPQDET_E_UNKNOWN_SYMBOL;
    case ErrorCode::UnknownVertex: return RPQDET_E_UNKNOWN_VERTEX;
    case ErrorCode::InvalidArgument: return RPQDET_E_INVALID_ARGUMENT;
    case ErrorCode::EmptyWord: return RPQDET_E_EMPTY_WORD;
    case ErrorCode::EpsilonLanguage: return RPQDET_E_EPSILON_LANGUAGE;
    case ErrorCode::ForeignSymbol: return RPQDET_E_FOREIGN_SYMBOL;
    case ErrorCode::WitnessRejected: return RPQDET_E_WITNESS_REJECTED;
    case ErrorCode::ScriptExhausted: return RPQDET_E_SCRIPT_EXHAUSTED;
    case ErrorCode::GuidanceFailure: return RPQDET_E_GUIDANCE_FAILURE;
    case ErrorCode::SearchSpaceTooLarge: return RPQDET_E_SEARCH_SPACE_TOO_LARGE;
    case ErrorCode::SizeMismatch: return RPQDET_E_SIZE_MISMATCH;
    case ErrorCode::MalformedTiling: return RPQDET_E_MALFORMED_TILING;
    case ErrorCode::Io: return RPQDET_E_IO;
  }
  return RPQDET_E_INTERNAL;
}

template <typename F>
rpqdet_status guard(F&& f) {
  try {
    f();
    last_error.clear();
    return RPQDET_OK;
  } catch (const rpqdet::Error& e) {
    last_error = e.what();
    return status_of(e.code());
  } catch (const std::exception& e) {
    last_error = e.what();
    return RPQDET_E_INTERNAL;
  }
}

void require(bool cond, const char* what) {
  if (!cond) throw rpqdet::Error(rpqdet::ErrorCode::InvalidArgument, std::string(what) + " is null");
}

char* copy(const std::string& s) {
  auto* out = static_cast<char*>(std::malloc(s.size() + 1));
  if (!out) throw std::bad_alloc();
  std::memcpy(out, s.c_str(), s.size() + 1);
  return out;
}

bool name_less(const std::string& x, const std::string& y) {
  return x.size() != y.size() ? x.size() < y.size() : x < y;
}

rpqdet_instance* new_instance(rpqdet::Instance inst) {
  auto game = rpqdet::make_game(inst);
  return new rpqdet_instance{std::move(inst), std::move(game)};
}

}  // namespace

extern "C" {

const char* rpqdet_last_error(void) { return last_error.c_str(); }

const char* rpqdet_status_name(rpqdet_status status) {
  switch (status) {
    case RPQDET_OK: return "ok";
    case RPQDET_E_SYNTAX: return "syntax error";
    case RPQDET_E_UNKNOWN_SYMBOL: return "unknown symbol";
    case RPQDET_E_UNKNOWN_VERTEX: return "unknown vertex";
    case RPQDET_E_INVALID_ARGUMENT: return "invalid argument";
    case RPQDET_E_EMPTY_WORD: return "empty word";
    case RPQDET_E_EPSILON_LANGUAGE: return "epsilon language";
    case RPQDET_E_FOREIGN_SYMBOL: return "foreign symbol";
    case RPQDET_E_WITNESS_REJECTED: return "witness rejected";
    case RPQDET_E_SCRIPT_EXHAUSTED: return "script exhausted";
    case RPQDET_E_GUIDANCE_FAILURE: return "guidance failure";
    case RPQDET_E_SEARCH_SPACE_TOO_LARGE: return "search space too large";
    case RPQDET_E_SIZE_MISMATCH: return "size mismatch";
    case RPQDET_E_MALFORMED_TILING: return "malformed tiling";
    case RPQDET_E_IO: return "i/o error";
    case RPQDET_E_INTERNAL: return "internal error";
  }
  return "unknown status";
}

void rpqdet_string_free(char* s) { std::free(s); }

rpqdet_status rpqdet_graph_parse(const char* json, rpqdet_graph** out) {
  return guard([&] {
    require(json && out, "argument");
    *out = new rpqdet_graph{rpqdet::parse_graph(json)};
  });
}

rpqdet_status rpqdet_graph_load(const char* path, rpqdet_graph** out) {
  return guard([&] {
    require(path && out, "argument");
    *out = new rpqdet_graph{rpqdet::parse_graph(rpqdet::read_file(path))};
  });
}

rpqdet_status rpqdet_graph_to_json(const rpqdet_graph* g, char** out) {
  return guard([&] {
    require(g && out, "argument");
    *out = copy(rpqdet::dump_graph(g->g));
  });
}

size_t rpqdet_graph_vertex_count(const rpqdet_graph* g) { return g ? g->g.vertex_count() : 0; }
size_t rpqdet_graph_edge_count(const rpqdet_graph* g) { return g ? g->g.edge_count() : 0; }
void rpqdet_graph_free(rpqdet_graph* g) { delete g; }

rpqdet_status rpqdet_eval(const rpqdet_graph* g, const char* query, char** out) {
  return guard([&] {
    require(g && query && out, "argument");
    rpqdet::Alphabet labels(g->g.labels());
    auto q = rpqdet::parse_regex(query, labels, {true});
    auto alphabet = labels.merged(rpqdet::Alphabet([&] {
      auto m = rpqdet::mentioned_symbols(q);
      std::vector<rpqdet::Symbol> extra;
      for (auto s : m) {
        if (!labels.contains(s)) extra.push_back(s);
      }
      return extra;
    }()));
    auto pairs = rpqdet::eval(rpqdet::compile_nfa(q, alphabet), g->g);
    std::vector<std::pair<std::string, std::string>> named;
    for (const auto& p : pairs) named.emplace_back(g->g.name(p.x), g->g.name(p.y));
    std::sort(named.begin(), named.end(), [](const auto& l, const auto& r) {
      if (l.first != r.first) return name_less(l.first, r.first);
      return name_less(l.second, r.second);
    });
    std::string text;
    for (const auto& [x, y] : named) text += x + " " + y + "\n";
    *out = copy(text);
  });
}

rpqdet_status rpqdet_ogtp_parse(const char* json, rpqdet_ogtp** out) {
  return guard([&] {
    require(json && out, "argument");
    *out = new rpqdet_ogtp{rpqdet::parse_ogtp(json)};
  });
}

rpqdet_status rpqdet_ogtp_load(const char* path, rpqdet_ogtp** out) {
  return guard([&] {
    require(path && out, "argument");
    *out = new rpqdet_ogtp{rpqdet::parse_ogtp(rpqdet::read_file(path))};
  });
}

void rpqdet_ogtp_free(rpqdet_ogtp* o) { delete o; }

rpqdet_status rpqdet_tiling_parse(const char* json, rpqdet_tiling** out) {
  return guard([&] {
    require(json && out, "argument");
    *out = new rpqdet_tiling{rpqdet::parse_tiling(json)};
  });
}

rpqdet_status rpqdet_tiling_load(const char* path, rpqdet_tiling** out) {
  return guard([&] {
    require(path && out, "argument");
    *out = new rpqdet_tiling{rpqdet::parse_tiling(rpqdet::read_file(path))};
  });
}

rpqdet_status rpqdet_tiling_to_json(const rpqdet_tiling* t, char** out) {
  return guard([&] {
    require(t && out, "argument");
    *out = copy(rpqdet::dump_tiling(t->t));
  });
}

void rpqdet_tiling_free(rpqdet_tiling* t) { delete t; }

rpqdet_status rpqdet_check_tiling(const rpqdet_ogtp* o, const rpqdet_tiling* t, int* ok,
                                  char** violation) {
  return guard([&] {
    require(o && t && ok, "argument");
    auto v = rpqdet::tiling_violation(o->o, t->t);
    *ok = v ? 0 : 1;
    if (violation) *violation = v ? copy(*v) : nullptr;
  });
}

rpqdet_status rpqdet_solve_ogtp(const rpqdet_ogtp* o, size_t max_n, rpqdet_tiling** out) {
  return guard([&] {
    require(o && out, "argument");
    auto t = rpqdet::solve_bruteforce(o->o, max_n);
    *out = t ? new rpqdet_tiling{std::move(*t)} : nullptr;
  });
}

rpqdet_status rpqdet_reduce(const rpqdet_ogtp* o, rpqdet_instance** out) {
  return guard([&] {
    require(o && out, "argument");
    *out = new_instance({rpqdet::compile_reduction(o->o), std::nullopt});
  });
}

rpqdet_status rpqdet_instance_parse(const char* json, rpqdet_instance** out) {
  return guard([&] {
    require(json && out, "argument");
    *out = new_instance(rpqdet::parse_instance(json));
  });
}

rpqdet_status rpqdet_instance_load(const char* path, rpqdet_instance** out) {
  return guard([&] {
    require(path && out, "argument");
    *out = new_instance(rpqdet::parse_instance(rpqdet::read_file(path)));
  });
}

rpqdet_status rpqdet_instance_to_json(const rpqdet_instance* inst, char** out) {
  return guard([&] {
    require(inst && out, "argument");
    *out = copy(rpqdet::dump_instance(inst->inst));
  });
}

size_t rpqdet_instance_constraint_count(const rpqdet_instance* inst) {
  return inst ? inst->game.constraints.size() : 0;
}

void rpqdet_instance_free(rpqdet_instance* inst) { delete inst; }

rpqdet_status rpqdet_initial_words(const rpqdet_instance* inst, size_t cap, char** out) {
  return guard([&] {
    require(inst && out, "argument");
    std::string text;
    rpqdet::for_each_word(inst->game.q0_nfa, cap, [&](const rpqdet::Word& w) {
      if (!w.empty()) text += rpqdet::to_string(w) + "\n";
      return true;
    });
    *out = copy(text);
  });
}

void rpqdet_play_options_init(rpqdet_play_options* options) {
  if (!options) return;
  *options = rpqdet_play_options{};
  options->strategy = RPQDET_STRATEGY_SHORTEST;
  options->max_rounds = 10;
}

rpqdet_status rpqdet_play(const rpqdet_instance* inst, const rpqdet_play_options* options,
                          rpqdet_play_result* result) {
  return guard([&] {
    require(inst && options && result, "argument");
    *result = rpqdet_play_result{};
    const auto& game = inst->game;

    std::optional<rpqdet::PlayTrace> script;
    if (options->strategy == RPQDET_STRATEGY_SCRIPTED) {
      require(options->script, "script");
      script = rpqdet::parse_trace(options->script);
    }

    rpqdet::Word initial;
    if (options->initial_word) {
      initial = rpqdet::parse_word(options->initial_word, &game.base);
      if (initial.empty()) throw rpqdet::Error(rpqdet::ErrorCode::EmptyWord, "initial word is empty");
      if (!rpqdet::accepts(game.q0_nfa, initial)) {
        throw rpqdet::Error(rpqdet::ErrorCode::InvalidArgument,
                            "initial word '" + std::string(options->initial_word) + "' is not in Q0");
      }
    } else if (script) {
      initial = script->initial_word;
    } else {
      auto start = rpqdet::compile_nfa(inst->inst.reduction.q_start, game.base);
      auto w = rpqdet::shortest_word(start.empty_language() ? game.q0_nfa : start);
      if (!w) throw rpqdet::Error(rpqdet::ErrorCode::InvalidArgument, "Q0 has no words");
      initial = *w;
    }

    std::unique_ptr<rpqdet::Strategy> strategy;
    switch (options->strategy) {
      case RPQDET_STRATEGY_SHORTEST:
        strategy = std::make_unique<rpqdet::ShortestStrategy>();
        break;
      case RPQDET_STRATEGY_GUIDED: {
        require(options->model, "model");
        const std::string ma = options->model_a ? options->model_a : "a";
        const std::string mb = options->model_b ? options->model_b : "b";
        auto start = rpqdet::initial_position(initial);
        auto h = rpqdet::find_homomorphism(start.graph(), options->model->g,
                                           {{{"a", ma}, {"b", mb}}, false});
        if (!h) {
          throw rpqdet::Error(rpqdet::ErrorCode::GuidanceFailure,
                              "the initial chain does not map into the model");
        }
        strategy = std::make_unique<rpqdet::GuidedStrategy>(options->model->g, *h);
        break;
      }
      case RPQDET_STRATEGY_SCRIPTED:
        strategy = std::make_unique<rpqdet::ScriptedStrategy>(
            rpqdet::ScriptedStrategy::from_trace(*script));
        break;
      case RPQDET_STRATEGY_INTERACTIVE:
        strategy = std::make_unique<rpqdet::InteractiveStrategy>(std::cin, std::cerr);
        break;
      default:
        throw rpqdet::Error(rpqdet::ErrorCode::InvalidArgument, "unknown strategy");
    }

    auto outcome = rpqdet::run_play(game, *strategy, initial, options->max_rounds);
    switch (outcome.result.kind) {
      case rpqdet::PlayResultKind::Lost: result->kind = RPQDET_PLAY_LOST; break;
      case rpqdet::PlayResultKind::WonFixpoint: result->kind = RPQDET_PLAY_WON_FIXPOINT; break;
      case rpqdet::PlayResultKind::Exhausted: result->kind = RPQDET_PLAY_EXHAUSTED; break;
    }
    result->round = outcome.result.round;
    auto trace = copy(rpqdet::dump_trace(outcome.trace));
    result->trace = trace;
    result->final_graph = new rpqdet_graph{outcome.final_position.graph()};
  });
}

void rpqdet_play_result_clear(rpqdet_play_result* result) {
  if (!result) return;
  std::free(result->trace);
  delete result->final_graph;
  *result = rpqdet_play_result{};
}

rpqdet_caps rpqdet_default_caps(void) {
  rpqdet::Caps c;
  return {c.max_initial_len, c.max_witness_len, c.max_rounds, c.max_branches};
}

rpqdet_status rpqdet_search(const rpqdet_instance* inst, const rpqdet_caps* caps, size_t jobs,
                            rpqdet_verdict* verdict) {
  return guard([&] {
    require(inst && caps && verdict, "argument");
    *verdict = rpqdet_verdict{};
    rpqdet::Caps c{caps->max_initial_len, caps->max_witness_len, caps->max_rounds,
                   caps->max_branches};
    rpqdet::ExploreOptions options;
    options.jobs = std::max<size_t>(jobs, 1);
    auto v = rpqdet::explore(inst->game, c, options);
    switch (v.kind) {
      case rpqdet::VerdictKind::Nondeterminate: verdict->kind = RPQDET_VERDICT_NONDETERMINATE; break;
      case rpqdet::VerdictKind::AllPlaysLose: verdict->kind = RPQDET_VERDICT_ALL_PLAYS_LOSE; break;
      case rpqdet::VerdictKind::Inconclusive: verdict->kind = RPQDET_VERDICT_INCONCLUSIVE; break;
    }
    verdict->initial_words = v.initial_words;
    if (v.certificate) {
      verdict->initial_word = copy(rpqdet::to_string(v.initial_word));
      verdict->certificate = new rpqdet_graph{v.certificate->graph()};
    }
  });
}

void rpqdet_verdict_clear(rpqdet_verdict* verdict) {
  if (!verdict) return;
  std::free(verdict->initial_word);
  delete verdict->certificate;
  *verdict = rpqdet_verdict{};
}

rpqdet_status rpqdet_verify(const rpqdet_graph* g, const rpqdet_instance* inst, const char* a,
                            const char* b, int* ok, char** report) {
  return guard([&] {
    require(g && inst && a && b && ok, "argument");
    auto r = rpqdet::check_counterexample(g->g, inst->game, a, b);
    *ok = r.ok() ? 1 : 0;
    if (report) {
      std::string text;
      for (const auto& line : r.failures()) text += line + "\n";
      *report = copy(text);
    }
  });
}

rpqdet_status rpqdet_grid(size_t m, const rpqdet_tiling* t, rpqdet_graph** out) {
  return guard([&] {
    require(out, "argument");
    auto g = rpqdet::build_grid(m);
    if (t) g = rpqdet::decorate(g, t->t);
    *out = new rpqdet_graph{std::move(g.graph)};
  });
}

}  // extern "C"
