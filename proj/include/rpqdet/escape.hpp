#pragma once

#include <cstddef>
#include <functional>
#include <iosfwd>
#include <optional>
#include <span>
#include <string>
#include <unordered_map>
#include <vector>

#include "rpqdet/constraints.hpp"
#include "rpqdet/graph.hpp"
#include "rpqdet/nfa.hpp"
#include "rpqdet/regex.hpp"

namespace rpqdet {

// An Escape instance: the forbidden-chain language Q0 and the constraint set
// (normally the red-green liftings of the views).
struct Game {
  Alphabet base;
  Regex q0;
  Nfa q0_nfa;    // over `base`
  Nfa green_q0;  // G(Q0) over the red-green alphabet
  Nfa red_q0;    // R(Q0)
  ConstraintSet constraints;
};

Game make_game(const Alphabet& base, const Regex& q0, ConstraintSet constraints);
Game make_game(const Alphabet& base, const Regex& q0, std::span<const Regex> views,
               std::span<const std::string> names = {});

struct Position {
  EndpointedGraph state;
  std::size_t round = 0;

  const LabeledGraph& graph() const { return state.graph; }
};

// G(w)[a, b] at round 0.
Position initial_position(const Word& w);
// One position per non-empty word of `q0` with length <= cap, shortlex order.
std::vector<Position> initial_positions(const Nfa& q0, std::size_t cap);

struct NamedEdge {
  std::string src;
  Symbol label;
  std::string dst;
};

struct RoundRecord {
  std::size_t round = 0;  // number of the move that produced this round's edges
  std::vector<Request> requests;
  std::vector<Word> choices;
  std::vector<NamedEdge> added_edges;
};

struct PlayTrace {
  Word initial_word;
  std::vector<RoundRecord> rounds;
};

struct ChoiceContext {
  const Position& position;
  const ConstraintSet& constraints;
  const Request& request;
  std::size_t round;          // number of the move being made
  std::size_t request_index;  // position of `request` in canonical order
};

class Strategy {
 public:
  virtual ~Strategy() = default;
  virtual Word choose(const ChoiceContext& context) = 0;
};

// Shortlex-least shortest word of the right-hand side.
class ShortestStrategy : public Strategy {
 public:
  Word choose(const ChoiceContext& context) override;

 private:
  std::unordered_map<std::size_t, Word> cache_;
};

// Follows a model graph that satisfies the constraints: each request is
// answered with a path of the model between the images of its endpoints, and
// the map is extended over the fresh vertices of that path.
class GuidedStrategy : public Strategy {
 public:
  GuidedStrategy(LabeledGraph model, VertexMap initial_map);
  Word choose(const ChoiceContext& context) override;

  const VertexMap& map() const { return map_; }
  const LabeledGraph& model() const { return model_; }

 private:
  LabeledGraph model_;
  VertexMap map_;
};

// Replays a fixed word sequence in canonical request order.
class ScriptedStrategy : public Strategy {
 public:
  explicit ScriptedStrategy(std::vector<Word> words);
  static ScriptedStrategy from_trace(const PlayTrace& trace);
  Word choose(const ChoiceContext& context) override;
  std::size_t consumed() const { return next_; }

 private:
  std::vector<Word> words_;
  std::size_t next_ = 0;
};

// Prompts for every request on `out` and reads a witness from `in`. An empty
// line picks the first suggestion, a number picks that suggestion.
class InteractiveStrategy : public Strategy {
 public:
  InteractiveStrategy(std::istream& in, std::ostream& out, std::size_t suggestion_len = 4,
                      std::size_t suggestion_count = 5);
  Word choose(const ChoiceContext& context) override;

 private:
  std::istream& in_;
  std::ostream& out_;
  std::size_t suggestion_len_;
  std::size_t suggestion_count_;
};

struct StepResult {
  Position next;
  RoundRecord record;
};

// Satisfies every request of rq(T, position) at once. With no requests the
// position comes back unchanged.
StepResult step_traced(const Position& p, const ConstraintSet& t, Strategy& s);
Position step(const Position& p, const ConstraintSet& t, Strategy& s);
// Applies the given witness words (one per request, canonical order).
StepResult apply_round(const Position& p, const ConstraintSet& t,
                       std::span<const Request> requests, std::span<const Word> choices);

enum class PlayResultKind { Lost, WonFixpoint, Exhausted };

struct PlayResult {
  PlayResultKind kind;
  std::size_t round;
};

std::string to_string(PlayResultKind kind);

using StepObserver =
    std::function<void(const Position& before, const RoundRecord& record, const Position& after)>;

struct PlayOutcome {
  PlayResult result;
  PlayTrace trace;
  Position final_position;
};

// Plays from G(initial)[a, b]. Loss (R(Q0)(a, b)) is tested on every
// position, including the initial one.
PlayOutcome run_play(const Game& game, Strategy& s, const Word& initial, std::size_t max_rounds,
                     const StepObserver& observer = {});

struct Caps {
  std::size_t max_initial_len = 8;
  std::size_t max_witness_len = 3;
  std::size_t max_rounds = 6;
  std::size_t max_branches = 4;
};

enum class VerdictKind { Nondeterminate, AllPlaysLose, Inconclusive };

std::string to_string(VerdictKind kind);

struct Verdict {
  VerdictKind kind = VerdictKind::Inconclusive;
  Caps caps;
  // Set for Nondeterminate: the fixpoint position and the word it started from.
  std::optional<Position> certificate;
  Word initial_word;
  std::size_t initial_words = 0;
};

enum class BranchKind { Lost, Won, Inconclusive };

struct BranchOutcome {
  BranchKind kind = BranchKind::Lost;
  std::size_t deepest_loss = 0;  // latest round at which some explored branch lost
  std::optional<Position> fixpoint;
};

struct ExploreOptions {
  std::size_t jobs = 1;
  // Called for every enumerated move; must be thread-safe when jobs > 1.
  StepObserver observer;
};

// Bounded search below one position. A request all of whose candidate
// witnesses already lose on their own loses under every combination, so such
// rounds are settled without enumerating the combinations. A request between
// the endpoints whose right-hand side lies inside R(Q0) loses whatever the
// witness, including witnesses longer than the cap.
BranchOutcome explore_position(const Game& game, const Position& start, const Caps& caps,
                               const StepObserver& observer = {});
// Same, for many start positions sharing one set of precomputed candidates.
std::vector<BranchOutcome> explore_positions(const Game& game, std::span<const Position> starts,
                                             const Caps& caps, const StepObserver& observer = {});

// Bounded search for a winning play over all initial words of Q0 up to the
// caps. The first fixpoint in shortlex/branch order is reported regardless of
// scheduling.
Verdict explore(const Game& game, const Caps& caps, const ExploreOptions& options = {});

}  // namespace rpqdet
