#pragma once

#include <cstdint>
#include <functional>
#include <memory>
#include <optional>
#include <span>
#include <vector>

#include "rpqdet/regex.hpp"
#include "rpqdet/symbol.hpp"

namespace rpqdet {

// Epsilon-free NFA over an ordered alphabet. Transition symbols are alphabet
// indices, so iterating them in increasing order follows shortlex order.
// State 0 is the start state; every state is reachable and co-reachable
// (except the lone start state of an empty language).
class Nfa {
 public:
  using State = std::uint32_t;

  struct Transition {
    std::uint32_t symbol;
    State target;
    friend auto operator<=>(const Transition&, const Transition&) = default;
  };

  Nfa();

  const Alphabet& alphabet() const { return *alphabet_; }
  std::size_t state_count() const { return accepting_.size(); }
  State start() const { return 0; }
  bool accepting(State s) const { return accepting_[s] != 0; }
  std::span<const Transition> transitions(State s) const { return transitions_[s]; }
  // Targets of `s` on alphabet index `symbol`.
  std::span<const Transition> transitions(State s, std::uint32_t symbol) const;

  bool empty_language() const { return empty_; }
  bool accepts_epsilon() const { return accepting_[0] != 0; }
  // States of the Thompson automaton before epsilon elimination and trimming.
  std::size_t construction_state_count() const { return construction_states_; }
  // Alphabet indices that label some transition out of the start state.
  std::span<const std::uint32_t> initial_symbols() const { return initial_symbols_; }

  friend Nfa compile_nfa(const Regex& r, const Alphabet& alphabet);
  friend Nfa compile_nfa(const Regex& r, std::shared_ptr<const Alphabet> alphabet);

 private:
  std::shared_ptr<const Alphabet> alphabet_;
  std::vector<std::vector<Transition>> transitions_;
  std::vector<char> accepting_;
  std::vector<std::uint32_t> initial_symbols_;
  std::size_t construction_states_ = 0;
  bool empty_ = true;
};

// Thompson construction followed by epsilon elimination. Throws
// Error(ForeignSymbol) if `r` mentions a symbol outside `alphabet`.
Nfa compile_nfa(const Regex& r, const Alphabet& alphabet);
Nfa compile_nfa(const Regex& r, std::shared_ptr<const Alphabet> alphabet);

// Throws Error(ForeignSymbol) when `w` has a letter outside the alphabet.
bool accepts(const Nfa& n, const Word& w);

// Words of length <= max_len in shortlex order. The visitor returns false to stop.
void for_each_word(const Nfa& n, std::size_t max_len,
                   const std::function<bool(const Word&)>& visit);
std::vector<Word> enumerate_words(const Nfa& n, std::size_t max_len);
// First `limit` words of length <= max_len in shortlex order.
std::vector<Word> first_words(const Nfa& n, std::size_t max_len, std::size_t limit);

// Shortest accepted word, shortlex-least among ties.
std::optional<Word> shortest_word(const Nfa& n);

// L(sub) ⊆ L(super), by a product of `sub` with the subset automaton of `super`.
bool included(const Nfa& sub, const Nfa& super);

}  // namespace rpqdet
