#include <cstdio>
#include <fstream>
#include <iostream>
#include <string>

#include <CLI11.hpp>

#include "rpqdet/rpqdet.h"

namespace {

constexpr int kInputError = 2;
constexpr int kRuntimeError = 4;

struct Failure {
  int code;
};

int exit_code_for(rpqdet_status s) {
  switch (s) {
    case RPQDET_E_SYNTAX:
    case RPQDET_E_UNKNOWN_SYMBOL:
    case RPQDET_E_UNKNOWN_VERTEX:
    case RPQDET_E_INVALID_ARGUMENT:
    case RPQDET_E_EMPTY_WORD:
    case RPQDET_E_EPSILON_LANGUAGE:
    case RPQDET_E_FOREIGN_SYMBOL:
    case RPQDET_E_MALFORMED_TILING:
    case RPQDET_E_SIZE_MISMATCH:
    case RPQDET_E_IO:
      return kInputError;
    default:
      return kRuntimeError;
  }
}

void check(rpqdet_status s) {
  if (s == RPQDET_OK) return;
  std::cerr << "error: " << rpqdet_last_error() << "\n";
  throw Failure{exit_code_for(s)};
}

std::string take(char* s) {
  std::string out = s ? s : "";
  rpqdet_string_free(s);
  return out;
}

void emit(const std::string& text, const std::string& out_path) {
  if (out_path.empty()) {
    std::cout << text;
    return;
  }
  std::ofstream out(out_path, std::ios::binary);
  if (!out || !(out << text)) {
    std::cerr << "error: cannot write " << out_path << "\n";
    throw Failure{kInputError};
  }
}

std::string slurp(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) {
    std::cerr << "error: cannot read " << path << "\n";
    throw Failure{kInputError};
  }
  return {std::istreambuf_iterator<char>(in), std::istreambuf_iterator<char>()};
}

template <typename T, void (*Free)(T*)>
struct Handle {
  T* p = nullptr;
  Handle() = default;
  Handle(const Handle&) = delete;
  Handle& operator=(const Handle&) = delete;
  ~Handle() { Free(p); }
};

using Graph = Handle<rpqdet_graph, rpqdet_graph_free>;
using Inst = Handle<rpqdet_instance, rpqdet_instance_free>;
using Ogtp = Handle<rpqdet_ogtp, rpqdet_ogtp_free>;
using Tiling = Handle<rpqdet_tiling, rpqdet_tiling_free>;

const char* play_name(rpqdet_play_kind k) {
  switch (k) {
    case RPQDET_PLAY_LOST: return "LOST";
    case RPQDET_PLAY_WON_FIXPOINT: return "WON_FIXPOINT";
    case RPQDET_PLAY_EXHAUSTED: return "EXHAUSTED";
  }
  return "?";
}

const char* verdict_name(rpqdet_verdict_kind k) {
  switch (k) {
    case RPQDET_VERDICT_NONDETERMINATE: return "NONDETERMINATE";
    case RPQDET_VERDICT_ALL_PLAYS_LOSE: return "ALL_PLAYS_LOSE";
    case RPQDET_VERDICT_INCONCLUSIVE: return "INCONCLUSIVE";
  }
  return "?";
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Query determinacy workbench for regular path queries"};
  app.require_subcommand(1);
  app.fallthrough();
  std::string out_path;
  std::size_t jobs = 1;
  unsigned long seed = 0;
  app.add_option("--out", out_path, "Write the main output to this file");
  app.add_option("--jobs", jobs, "Worker threads for search")->check(CLI::PositiveNumber);
  app.add_option("--seed", seed, "Seed for generated corpora (core commands are deterministic)");

  std::string graph_path, query;
  auto* eval = app.add_subcommand("eval", "Evaluate a regular path query on a graph");
  eval->add_option("--graph", graph_path, "Graph JSON")->required();
  eval->add_option("--query", query, "Query regex")->required();

  std::string ogtp_path;
  auto* reduce = app.add_subcommand("reduce", "Compile a tiling instance into a determinacy instance");
  reduce->add_option("ogtp", ogtp_path, "OGTP JSON")->required();

  std::string instance_path, strategy = "shortest", word, model_path, trace_in, trace_out;
  std::string model_a = "a", model_b = "b";
  std::size_t max_rounds = 10;
  auto* play = app.add_subcommand("play", "Play Escape from one initial word");
  play->add_option("instance", instance_path, "Instance JSON")->required();
  play->add_option("--strategy", strategy, "shortest, guided, scripted or interactive")
      ->check(CLI::IsMember({"shortest", "guided", "scripted", "interactive"}));
  play->add_option("--word", word, "Initial word over the base alphabet");
  play->add_option("--max-rounds", max_rounds, "Round limit");
  play->add_option("--model", model_path, "Model graph for the guided strategy");
  play->add_option("--model-a", model_a, "Image of a in the model");
  play->add_option("--model-b", model_b, "Image of b in the model");
  play->add_option("--trace", trace_in, "Trace to replay with the scripted strategy");
  play->add_option("--trace-out", trace_out, "Write the play trace (JSON lines)");

  rpqdet_caps caps = rpqdet_default_caps();
  auto* search = app.add_subcommand("search", "Bounded search for a winning play");
  search->add_option("instance", instance_path, "Instance JSON")->required();
  search->add_option("--max-initial-len", caps.max_initial_len, "Longest initial word");
  search->add_option("--max-witness-len", caps.max_witness_len, "Longest witness word");
  search->add_option("--max-rounds", caps.max_rounds, "Round limit per branch");
  search->add_option("--max-branches", caps.max_branches, "Witness candidates per request");

  std::string a = "a", b = "b";
  auto* verify = app.add_subcommand("verify", "Check a counterexample structure");
  verify->add_option("graph", graph_path, "Graph JSON")->required();
  verify->add_option("instance", instance_path, "Instance JSON")->required();
  verify->add_option("--a", a, "Source endpoint");
  verify->add_option("--b", b, "Target endpoint");

  std::size_t m = 1;
  std::string tiling_path;
  auto* grid = app.add_subcommand("grid", "Build the grid gadget");
  grid->add_option("m", m, "Grid size")->required()->check(CLI::PositiveNumber);
  grid->add_option("--tiling", tiling_path, "Decorate with this tiling");

  std::size_t max_n = 3;
  auto* solve = app.add_subcommand("solve-ogtp", "Brute-force a tiling instance");
  solve->add_option("ogtp", ogtp_path, "OGTP JSON")->required();
  solve->add_option("--max-n", max_n, "Largest grid size tried");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : 2;
  }

  try {
    if (eval->parsed()) {
      Graph g;
      check(rpqdet_graph_load(graph_path.c_str(), &g.p));
      char* pairs = nullptr;
      check(rpqdet_eval(g.p, query.c_str(), &pairs));
      emit(take(pairs), out_path);
      return 0;
    }
    if (reduce->parsed()) {
      Ogtp o;
      check(rpqdet_ogtp_load(ogtp_path.c_str(), &o.p));
      Inst inst;
      check(rpqdet_reduce(o.p, &inst.p));
      char* json = nullptr;
      check(rpqdet_instance_to_json(inst.p, &json));
      emit(take(json), out_path);
      return 0;
    }
    if (play->parsed()) {
      Inst inst;
      check(rpqdet_instance_load(instance_path.c_str(), &inst.p));
      rpqdet_play_options options;
      rpqdet_play_options_init(&options);
      options.max_rounds = max_rounds;
      if (!word.empty()) options.initial_word = word.c_str();
      Graph model;
      std::string script;
      if (strategy == "guided") {
        if (model_path.empty()) {
          std::cerr << "error: --strategy guided needs --model\n";
          return kInputError;
        }
        check(rpqdet_graph_load(model_path.c_str(), &model.p));
        options.strategy = RPQDET_STRATEGY_GUIDED;
        options.model = model.p;
        options.model_a = model_a.c_str();
        options.model_b = model_b.c_str();
      } else if (strategy == "scripted") {
        if (trace_in.empty()) {
          std::cerr << "error: --strategy scripted needs --trace\n";
          return kInputError;
        }
        script = slurp(trace_in);
        options.strategy = RPQDET_STRATEGY_SCRIPTED;
        options.script = script.c_str();
      } else if (strategy == "interactive") {
        options.strategy = RPQDET_STRATEGY_INTERACTIVE;
      }
      rpqdet_play_result result{};
      check(rpqdet_play(inst.p, &options, &result));
      if (!trace_out.empty()) emit(result.trace, trace_out);
      if (!out_path.empty()) {
        char* json = nullptr;
        check(rpqdet_graph_to_json(result.final_graph, &json));
        emit(take(json), out_path);
      }
      std::cout << play_name(result.kind) << " " << result.round << "\n";
      const auto kind = result.kind;
      rpqdet_play_result_clear(&result);
      return kind == RPQDET_PLAY_WON_FIXPOINT ? 0 : kind == RPQDET_PLAY_LOST ? 1 : 3;
    }
    if (search->parsed()) {
      Inst inst;
      check(rpqdet_instance_load(instance_path.c_str(), &inst.p));
      rpqdet_verdict v{};
      check(rpqdet_search(inst.p, &caps, jobs, &v));
      std::cout << verdict_name(v.kind) << " words=" << v.initial_words;
      if (v.kind == RPQDET_VERDICT_NONDETERMINATE) {
        std::cout << " initial=\"" << v.initial_word << "\"";
      }
      std::cout << " caps=" << caps.max_initial_len << "," << caps.max_witness_len << ","
                << caps.max_rounds << "," << caps.max_branches << "\n";
      if (v.certificate && !out_path.empty()) {
        char* json = nullptr;
        check(rpqdet_graph_to_json(v.certificate, &json));
        emit(take(json), out_path);
      }
      const auto kind = v.kind;
      rpqdet_verdict_clear(&v);
      return kind == RPQDET_VERDICT_NONDETERMINATE ? 0 : kind == RPQDET_VERDICT_ALL_PLAYS_LOSE ? 1 : 3;
    }
    if (verify->parsed()) {
      Graph g;
      check(rpqdet_graph_load(graph_path.c_str(), &g.p));
      Inst inst;
      check(rpqdet_instance_load(instance_path.c_str(), &inst.p));
      int ok = 0;
      char* report = nullptr;
      check(rpqdet_verify(g.p, inst.p, a.c_str(), b.c_str(), &ok, &report));
      const auto text = take(report);
      if (ok) {
        std::cout << "COUNTEREXAMPLE\n";
        return 0;
      }
      std::cout << "NOT_A_COUNTEREXAMPLE\n" << text;
      return 1;
    }
    if (grid->parsed()) {
      Tiling t;
      if (!tiling_path.empty()) check(rpqdet_tiling_load(tiling_path.c_str(), &t.p));
      Graph g;
      check(rpqdet_grid(m, t.p, &g.p));
      char* json = nullptr;
      check(rpqdet_graph_to_json(g.p, &json));
      emit(take(json), out_path);
      return 0;
    }
    if (solve->parsed()) {
      Ogtp o;
      check(rpqdet_ogtp_load(ogtp_path.c_str(), &o.p));
      Tiling t;
      check(rpqdet_solve_ogtp(o.p, max_n, &t.p));
      if (!t.p) {
        emit("NONE\n", out_path);
        return 1;
      }
      char* json = nullptr;
      check(rpqdet_tiling_to_json(t.p, &json));
      emit(take(json), out_path);
      return 0;
    }
  } catch (const Failure& f) {
    return f.code;
  }
  return 0;
}
