#pragma once

#include <cstdint>
#include <memory>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "rpqdet/symbol.hpp"

namespace rpqdet {

// Immutable regular-expression AST. Copies share structure.
class Regex {
 public:
  enum class Kind : std::uint8_t { Empty, Epsilon, Literal, Class, Union, Concat, Star, Plus };

  static Regex empty();
  static Regex epsilon();
  static Regex literal(Symbol s);
  // `label` is the source spelling used when printing ("[A,H,C,*]", "S0", ...);
  // it takes no part in equality.
  static Regex symbol_class(std::vector<Symbol> symbols, std::string label = {});
  static Regex alt(Regex lhs, Regex rhs);
  static Regex concat(Regex lhs, Regex rhs);
  static Regex star(Regex inner);
  static Regex plus(Regex inner);

  Regex() : Regex(empty()) {}

  Kind kind() const;
  Symbol symbol() const;                   // Literal
  std::span<const Symbol> symbols() const; // Class, sorted by symbol id
  const std::string& label() const;        // Class
  const Regex& left() const;               // Union, Concat
  const Regex& right() const;              // Union, Concat
  const Regex& inner() const;              // Star, Plus

  std::size_t size() const;  // number of AST nodes
  bool nullable() const;     // ε ∈ L(r)

  friend bool operator==(const Regex& a, const Regex& b);

 private:
  struct Node;
  static std::shared_ptr<Node> make_node(Kind kind);
  explicit Regex(std::shared_ptr<const Node> node) : node_(std::move(node)) {}
  std::shared_ptr<const Node> node_;
};

struct ParseOptions {
  // Accept well-formed symbol tokens that are missing from the alphabet.
  bool admit_unknown_symbols = false;
};

// Grammar: `+` union (lowest), juxtaposition concatenation, postfix `*` and
// `^+`, parentheses. Atoms: symbol tokens, `[T,D,K,S]` tile classes with `*`
// wildcards, `S0` (all tile symbols), `{s1,s2,...}` explicit sets (`{}` is the
// empty language) and `()` for the empty word. Classes and `S0` accept a
// `G:`/`R:` colour prefix and expand against the colour-matching tile symbols
// of `alphabet`.
Regex parse_regex(std::string_view text, const Alphabet& alphabet, ParseOptions options = {});

// Canonical text form; parse_regex(to_string(r)) == r for parsed expressions.
std::string to_string(const Regex& r);

// G(r) / R(r): every symbol painted in `color`.
Regex recolor(const Regex& r, Color color);

// Every symbol mentioned by `r`, in first-occurrence order.
std::vector<Symbol> mentioned_symbols(const Regex& r);

}  // namespace rpqdet
