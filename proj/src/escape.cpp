#include "rpqdet/escape.hpp"

#include <algorithm>
#include <cctype>
#include <atomic>
#include <istream>
#include <limits>
#include <mutex>
#include <ostream>
#include <thread>

#include "rpqdet/error.hpp"
#include "rpqdet/rpq.hpp"

namespace rpqdet {

Game make_game(const Alphabet& base, const Regex& q0, ConstraintSet constraints) {
  Game game;
  game.base = base;
  game.q0 = q0;
  game.q0_nfa = compile_nfa(q0, base);
  auto colored = constraints.empty() ? std::make_shared<const Alphabet>(base.red_green())
                                     : constraints.shared_alphabet();
  game.green_q0 = compile_nfa(recolor(q0, Color::Green), colored);
  game.red_q0 = compile_nfa(recolor(q0, Color::Red), colored);
  game.constraints = std::move(constraints);
  return game;
}

Game make_game(const Alphabet& base, const Regex& q0, std::span<const Regex> views,
               std::span<const std::string> names) {
  return make_game(base, q0, arrows_of(views, base, names));
}

Position initial_position(const Word& w) {
  Position p;
  p.state.graph = chain_graph(recolor(w, Color::Green), "a", "b");
  p.state.a = "a";
  p.state.b = "b";
  return p;
}

std::vector<Position> initial_positions(const Nfa& q0, std::size_t cap) {
  std::vector<Position> out;
  for_each_word(q0, cap, [&](const Word& w) {
    if (!w.empty()) out.push_back(initial_position(w));
    return true;
  });
  return out;
}

Word ShortestStrategy::choose(const ChoiceContext& context) {
  const auto id = context.request.constraint;
  if (auto it = cache_.find(id); it != cache_.end()) return it->second;
  auto w = shortest_word(context.constraints[id].rhs_nfa);
  if (!w) {
    throw Error(ErrorCode::WitnessRejected,
                "constraint " + context.constraints[id].name + " has no witness words");
  }
  cache_.emplace(id, *w);
  return *w;
}

GuidedStrategy::GuidedStrategy(LabeledGraph model, VertexMap initial_map)
    : model_(std::move(model)), map_(std::move(initial_map)) {}

Word GuidedStrategy::choose(const ChoiceContext& context) {
  const auto& req = context.request;
  auto image = [&](const std::string& v) -> VertexIndex {
    auto it = map_.find(v);
    if (it == map_.end()) {
      throw Error(ErrorCode::GuidanceFailure, "vertex '" + v + "' has no image in the model");
    }
    return model_.index(it->second);
  };
  const auto& rc = context.constraints[req.constraint];
  auto witness = find_path_witness(rc.rhs_nfa, model_, image(req.x), image(req.y));
  if (!witness) {
    throw Error(ErrorCode::GuidanceFailure,
                "model has no " + rc.name + " path from " + map_.at(req.x) + " to " +
                    map_.at(req.y) + "; it does not satisfy the constraints");
  }
  for (std::size_t k = 1; k < witness->word.size(); ++k) {
    map_[fresh_vertex_name(context.round, context.request_index, k)] =
        model_.name(witness->vertices[k]);
  }
  return witness->word;
}

ScriptedStrategy::ScriptedStrategy(std::vector<Word> words) : words_(std::move(words)) {}

ScriptedStrategy ScriptedStrategy::from_trace(const PlayTrace& trace) {
  std::vector<Word> words;
  for (const auto& r : trace.rounds) words.insert(words.end(), r.choices.begin(), r.choices.end());
  return ScriptedStrategy(std::move(words));
}

Word ScriptedStrategy::choose(const ChoiceContext& context) {
  if (next_ >= words_.size()) {
    throw Error(ErrorCode::ScriptExhausted,
                "script exhausted at round " + std::to_string(context.round) + ", request " +
                    std::to_string(context.request_index));
  }
  return words_[next_++];
}

InteractiveStrategy::InteractiveStrategy(std::istream& in, std::ostream& out,
                                         std::size_t suggestion_len, std::size_t suggestion_count)
    : in_(in), out_(out), suggestion_len_(suggestion_len), suggestion_count_(suggestion_count) {}

Word InteractiveStrategy::choose(const ChoiceContext& context) {
  const auto& req = context.request;
  const auto& rc = context.constraints[req.constraint];
  auto suggestions = first_words(rc.rhs_nfa, suggestion_len_, suggestion_count_);
  out_ << "move " << context.round << ", request " << context.request_index << ": <" << req.x
       << ", " << req.y << ", " << rc.name << ">\n"
       << "  needs a word of " << to_string(rc.rhs) << "\n";
  for (std::size_t i = 0; i < suggestions.size(); ++i) {
    out_ << "  [" << i << "] " << to_string(suggestions[i]) << "\n";
  }
  for (;;) {
    out_ << "witness> " << std::flush;
    std::string line;
    if (!std::getline(in_, line)) {
      throw Error(ErrorCode::ScriptExhausted, "input closed at move " +
                                                  std::to_string(context.round) + ", request " +
                                                  std::to_string(context.request_index));
    }
    auto first = line.find_first_not_of(" \t\r");
    if (first == std::string::npos) {
      if (!suggestions.empty()) return suggestions.front();
      out_ << "  no suggestion available; type a word\n";
      continue;
    }
    line = line.substr(first);
    if (std::all_of(line.begin(), line.end(), [](char c) {
          return std::isdigit(static_cast<unsigned char>(c)) || std::isspace(static_cast<unsigned char>(c));
        })) {
      auto k = static_cast<std::size_t>(std::stoul(line));
      if (k < suggestions.size()) return suggestions[k];
      out_ << "  no suggestion " << k << "\n";
      continue;
    }
    try {
      Word w = parse_word(line, &rc.rhs_nfa.alphabet());
      if (!w.empty() && accepts(rc.rhs_nfa, w)) return w;
      out_ << "  '" << line << "' is not in " << to_string(rc.rhs) << "\n";
    } catch (const Error& e) {
      out_ << "  " << e.what() << "\n";
    }
  }
}

StepResult apply_round(const Position& p, const ConstraintSet& t,
                       std::span<const Request> requests, std::span<const Word> choices) {
  StepResult out{p, {}};
  out.next.round = p.round + 1;
  out.record.round = p.round + 1;
  out.record.requests.assign(requests.begin(), requests.end());
  out.record.choices.assign(choices.begin(), choices.end());
  auto& g = out.next.state.graph;
  for (std::size_t i = 0; i < requests.size(); ++i) {
    for (const auto& e : add_witness_path(g, t, requests[i], choices[i], p.round + 1, i)) {
      out.record.added_edges.push_back({g.name(e.src), e.label, g.name(e.dst)});
    }
  }
  return out;
}

StepResult step_traced(const Position& p, const ConstraintSet& t, Strategy& s) {
  auto reqs = requests(t, p.graph());
  if (reqs.empty()) return {p, {}};
  std::vector<Word> choices;
  choices.reserve(reqs.size());
  for (std::size_t i = 0; i < reqs.size(); ++i) {
    choices.push_back(s.choose({p, t, reqs[i], p.round + 1, i}));
  }
  return apply_round(p, t, reqs, choices);
}

Position step(const Position& p, const ConstraintSet& t, Strategy& s) {
  return step_traced(p, t, s).next;
}

std::string to_string(PlayResultKind kind) {
  switch (kind) {
    case PlayResultKind::Lost:
      return "LOST";
    case PlayResultKind::WonFixpoint:
      return "WON_FIXPOINT";
    case PlayResultKind::Exhausted:
      return "EXHAUSTED";
  }
  return "?";
}

std::string to_string(VerdictKind kind) {
  switch (kind) {
    case VerdictKind::Nondeterminate:
      return "NONDETERMINATE";
    case VerdictKind::AllPlaysLose:
      return "ALL_PLAYS_LOSE";
    case VerdictKind::Inconclusive:
      return "INCONCLUSIVE";
  }
  return "?";
}

namespace {

bool lost(const Game& game, const Position& p) {
  const auto& g = p.graph();
  return holds(game.red_q0, g, g.index(p.state.a), g.index(p.state.b));
}

}  // namespace

PlayOutcome run_play(const Game& game, Strategy& s, const Word& initial, std::size_t max_rounds,
                     const StepObserver& observer) {
  PlayOutcome out{{PlayResultKind::Exhausted, 0}, {initial, {}}, initial_position(initial)};
  auto& pos = out.final_position;
  for (;;) {
    if (lost(game, pos)) {
      out.result = {PlayResultKind::Lost, pos.round};
      return out;
    }
    auto reqs = requests(game.constraints, pos.graph());
    if (reqs.empty()) {
      out.result = {PlayResultKind::WonFixpoint, pos.round};
      return out;
    }
    if (pos.round >= max_rounds) {
      out.result = {PlayResultKind::Exhausted, pos.round};
      return out;
    }
    std::vector<Word> choices;
    for (std::size_t i = 0; i < reqs.size(); ++i) {
      choices.push_back(s.choose({pos, game.constraints, reqs[i], pos.round + 1, i}));
    }
    auto next = apply_round(pos, game.constraints, reqs, choices);
    if (observer) observer(pos, next.record, next.next);
    out.trace.rounds.push_back(std::move(next.record));
    pos = std::move(next.next);
  }
}

namespace {

class Explorer {
 public:
  Explorer(const Game& game, const Caps& caps, const StepObserver& observer)
      : game_(game), caps_(caps), observer_(observer) {
    candidates_.resize(game.constraints.size());
    losing_at_ends_.resize(game.constraints.size());
    for (const auto& rc : game.constraints.constraints()) {
      candidates_[rc.id] = first_words(rc.rhs_nfa, caps.max_witness_len, caps.max_branches);
      losing_at_ends_[rc.id] = included(rc.rhs_nfa, game.red_q0);
    }
  }

  BranchOutcome search(const Position& pos) {
    if (lost(game_, pos)) return {BranchKind::Lost, pos.round, std::nullopt};
    auto reqs = requests(game_.constraints, pos.graph());
    if (reqs.empty()) return {BranchKind::Won, 0, pos};
    if (pos.round >= caps_.max_rounds) return {BranchKind::Inconclusive, 0, std::nullopt};

    const auto& g = pos.graph();
    const auto a = g.index(pos.state.a);
    const auto b = g.index(pos.state.b);
    for (const auto& r : reqs) {
      if (losing_at_ends_[r.constraint] && g.index(r.x) == a && g.index(r.y) == b) {
        return {BranchKind::Lost, pos.round + 1, std::nullopt};
      }
    }

    std::vector<const std::vector<Word>*> options;
    options.reserve(reqs.size());
    for (const auto& r : reqs) {
      const auto& c = candidates_[r.constraint];
      if (c.empty()) return {BranchKind::Inconclusive, 0, std::nullopt};
      options.push_back(&c);
    }
    if (forced_loss(pos, reqs, options)) return {BranchKind::Lost, pos.round + 1, std::nullopt};

    BranchOutcome summary{BranchKind::Lost, 0, std::nullopt};
    bool inconclusive = false;
    std::vector<std::size_t> pick(reqs.size(), 0);
    std::vector<Word> choices(reqs.size());
    for (;;) {
      for (std::size_t i = 0; i < reqs.size(); ++i) choices[i] = (*options[i])[pick[i]];
      auto next = apply_round(pos, game_.constraints, reqs, choices);
      if (observer_) observer_(pos, next.record, next.next);
      auto child = search(next.next);
      if (child.kind == BranchKind::Won) return child;
      if (child.kind == BranchKind::Inconclusive) inconclusive = true;
      summary.deepest_loss = std::max(summary.deepest_loss, child.deepest_loss);

      // odometer, last request turning fastest
      std::size_t i = reqs.size();
      while (i > 0) {
        --i;
        if (++pick[i] < options[i]->size()) break;
        pick[i] = 0;
        if (i == 0) {
          i = reqs.size() + 1;
          break;
        }
      }
      if (i == reqs.size() + 1) break;
    }
    if (inconclusive) summary.kind = BranchKind::Inconclusive;
    return summary;
  }

 private:
  bool forced_loss(const Position& pos, const std::vector<Request>& reqs,
                   const std::vector<const std::vector<Word>*>& options) const {
    const auto& g = pos.graph();
    const auto a = g.index(pos.state.a);
    const auto b = g.index(pos.state.b);
    for (std::size_t i = 0; i < reqs.size(); ++i) {
      bool all_lose = true;
      for (const auto& w : *options[i]) {
        LabeledGraph trial = g;
        add_witness_path(trial, game_.constraints, reqs[i], w, pos.round + 1, i);
        if (!holds(game_.red_q0, trial, a, b)) {
          all_lose = false;
          break;
        }
      }
      if (all_lose) return true;
    }
    return false;
  }

  const Game& game_;
  Caps caps_;
  const StepObserver& observer_;
  std::vector<std::vector<Word>> candidates_;
  std::vector<char> losing_at_ends_;
};

}  // namespace

BranchOutcome explore_position(const Game& game, const Position& start, const Caps& caps,
                               const StepObserver& observer) {
  return Explorer(game, caps, observer).search(start);
}

std::vector<BranchOutcome> explore_positions(const Game& game, std::span<const Position> starts,
                                             const Caps& caps, const StepObserver& observer) {
  Explorer explorer(game, caps, observer);
  std::vector<BranchOutcome> out;
  out.reserve(starts.size());
  for (const auto& p : starts) out.push_back(explorer.search(p));
  return out;
}

Verdict explore(const Game& game, const Caps& caps, const ExploreOptions& options) {
  Verdict verdict;
  verdict.caps = caps;
  bool inconclusive = false;

  if (options.jobs <= 1) {
    Explorer explorer(game, caps, options.observer);
    for_each_word(game.q0_nfa, caps.max_initial_len, [&](const Word& w) {
      if (w.empty()) return true;
      ++verdict.initial_words;
      auto outcome = explorer.search(initial_position(w));
      if (outcome.kind == BranchKind::Won) {
        verdict.kind = VerdictKind::Nondeterminate;
        verdict.certificate = std::move(outcome.fixpoint);
        verdict.initial_word = w;
        return false;
      }
      if (outcome.kind == BranchKind::Inconclusive) inconclusive = true;
      return true;
    });
    if (verdict.kind != VerdictKind::Nondeterminate) {
      verdict.kind = inconclusive ? VerdictKind::Inconclusive : VerdictKind::AllPlaysLose;
    }
    return verdict;
  }

  std::vector<Word> words;
  for_each_word(game.q0_nfa, caps.max_initial_len, [&](const Word& w) {
    if (!w.empty()) words.push_back(w);
    return true;
  });
  constexpr auto kNone = std::numeric_limits<std::size_t>::max();
  std::vector<BranchKind> kinds(words.size(), BranchKind::Lost);
  std::vector<std::optional<Position>> fixpoints(words.size());
  std::atomic<std::size_t> next{0};
  std::atomic<std::size_t> best{kNone};
  std::mutex error_mutex;
  std::exception_ptr error;

  auto worker = [&] {
    try {
      Explorer explorer(game, caps, options.observer);
      for (;;) {
        const auto i = next.fetch_add(1);
        if (i >= words.size() || i > best.load()) return;
        auto outcome = explorer.search(initial_position(words[i]));
        kinds[i] = outcome.kind;
        if (outcome.kind == BranchKind::Won) {
          fixpoints[i] = std::move(outcome.fixpoint);
          auto cur = best.load();
          while (i < cur && !best.compare_exchange_weak(cur, i)) {
          }
        }
      }
    } catch (...) {
      std::lock_guard lock(error_mutex);
      if (!error) error = std::current_exception();
      best.store(0);
    }
  };
  std::vector<std::thread> pool;
  for (std::size_t j = 0; j < options.jobs; ++j) pool.emplace_back(worker);
  for (auto& t : pool) t.join();
  if (error) std::rethrow_exception(error);

  // sequencer: report in word order
  const auto limit = std::min(best.load(), words.size());
  verdict.initial_words = limit == words.size() ? words.size() : limit + 1;
  for (std::size_t i = 0; i < limit; ++i) {
    if (kinds[i] == BranchKind::Inconclusive) inconclusive = true;
  }
  if (best.load() != kNone) {
    verdict.kind = VerdictKind::Nondeterminate;
    verdict.certificate = std::move(fixpoints[best.load()]);
    verdict.initial_word = words[best.load()];
  } else {
    verdict.kind = inconclusive ? VerdictKind::Inconclusive : VerdictKind::AllPlaysLose;
  }
  return verdict;
}

}  // namespace rpqdet
