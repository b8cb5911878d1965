#pragma once

#include <compare>
#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

namespace rpqdet {

enum class Color : std::uint8_t { Green, Red };

// Base letter of a symbol: one of the three frame letters or a grid tile
// letter of the form T-D-K[-S].
enum class Letter : std::uint8_t { Alpha, Beta, Omega, Tile };

struct SymbolInfo {
  std::string name;
  std::optional<Color> color;
  Letter letter = Letter::Alpha;
  char type = 0;         // 'A' or 'B'
  char direction = 0;    // 'H' or 'V'
  char temperature = 0;  // 'W' or 'C'
  std::string shade;     // empty for shade-stripped tile symbols

  bool is_tile() const { return letter == Letter::Tile; }
};

// Interned symbol token. Symbols compare by identity of the token; the
// ordering operators order by interning id and carry no alphabet meaning.
class Symbol {
 public:
  // Throws Error(UnknownSymbol) when the token does not match the symbol grammar.
  static Symbol parse(std::string_view token);
  static std::optional<Symbol> try_parse(std::string_view token);

  // Builds a tile symbol from its components; an empty shade gives the stripped form.
  static Symbol tile(char type, char direction, char temperature, std::string_view shade,
                     std::optional<Color> color = std::nullopt);

  std::uint32_t id() const { return id_; }
  const std::string& name() const;
  const SymbolInfo& info() const;

  std::optional<Color> color() const { return info().color; }
  Symbol with_color(std::optional<Color> color) const;
  Symbol without_shade() const;

  friend bool operator==(Symbol, Symbol) = default;
  friend auto operator<=>(Symbol, Symbol) = default;

 private:
  explicit Symbol(std::uint32_t id) : id_(id) {}
  std::uint32_t id_ = 0;
};

std::string to_string(std::optional<Color> color);

// Ordered set of symbols. Declaration order defines the shortlex order on words.
class Alphabet {
 public:
  Alphabet() = default;
  explicit Alphabet(std::vector<Symbol> symbols);
  static Alphabet from_tokens(std::span<const std::string> tokens);

  std::size_t size() const { return symbols_.size(); }
  bool empty() const { return symbols_.empty(); }
  std::span<const Symbol> symbols() const { return symbols_; }
  Symbol operator[](std::size_t i) const { return symbols_[i]; }

  std::optional<std::size_t> index_of(Symbol s) const {
    if (s.id() >= index_.size() || index_[s.id()] < 0) return std::nullopt;
    return static_cast<std::size_t>(index_[s.id()]);
  }
  bool contains(Symbol s) const { return index_of(s).has_value(); }

  // Copy of the alphabet with every symbol painted in `color`.
  Alphabet colored(Color color) const;
  // G(Σ) followed by R(Σ).
  Alphabet red_green() const;
  // Union preserving this alphabet's order, then the new symbols of `other`.
  Alphabet merged(const Alphabet& other) const;
  // Shade names used by tile symbols, in first-occurrence order.
  std::vector<std::string> shades() const;

  friend bool operator==(const Alphabet& a, const Alphabet& b) { return a.symbols_ == b.symbols_; }

 private:
  std::vector<Symbol> symbols_;
  std::vector<std::int32_t> index_;
};

using Word = std::vector<Symbol>;

std::string to_string(const Word& word);
// Whitespace-separated symbol tokens; with an alphabet, every token must belong to it.
Word parse_word(std::string_view text, const Alphabet* alphabet = nullptr);
Word recolor(const Word& word, Color color);
// Shortlex comparison with letters ranked by their position in `alphabet`.
bool shortlex_less(const Word& lhs, const Word& rhs, const Alphabet& alphabet);

}  // namespace rpqdet
