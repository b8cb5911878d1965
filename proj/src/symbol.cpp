#include "rpqdet/symbol.hpp"

#include <algorithm>
#include <deque>
#include <mutex>
#include <shared_mutex>
#include <sstream>
#include <unordered_map>

#include "rpqdet/error.hpp"

namespace rpqdet {
namespace {

bool is_shade_name(std::string_view s) {
  if (s.empty()) return false;
  return std::all_of(s.begin(), s.end(), [](char c) {
    return (c >= 'a' && c <= 'z') || (c >= '0' && c <= '9') || c == '_';
  });
}

std::optional<SymbolInfo> parse_info(std::string_view token) {
  SymbolInfo info;
  info.name = std::string(token);
  std::string_view rest = token;
  if (rest.size() >= 2 && rest[1] == ':') {
    if (rest[0] == 'G') {
      info.color = Color::Green;
    } else if (rest[0] == 'R') {
      info.color = Color::Red;
    } else {
      return std::nullopt;
    }
    rest.remove_prefix(2);
  }
  if (rest == "alpha") {
    info.letter = Letter::Alpha;
    return info;
  }
  if (rest == "beta") {
    info.letter = Letter::Beta;
    return info;
  }
  if (rest == "omega") {
    info.letter = Letter::Omega;
    return info;
  }
  // T-D-K or T-D-K-S
  if (rest.size() < 5 || rest[1] != '-' || rest[3] != '-') return std::nullopt;
  if (rest[0] != 'A' && rest[0] != 'B') return std::nullopt;
  if (rest[2] != 'H' && rest[2] != 'V') return std::nullopt;
  if (rest[4] != 'W' && rest[4] != 'C') return std::nullopt;
  info.letter = Letter::Tile;
  info.type = rest[0];
  info.direction = rest[2];
  info.temperature = rest[4];
  if (rest.size() == 5) return info;
  if (rest[5] != '-' || !is_shade_name(rest.substr(6))) return std::nullopt;
  info.shade = std::string(rest.substr(6));
  return info;
}

class Interner {
 public:
  static Interner& instance() {
    static Interner interner;
    return interner;
  }

  std::optional<std::uint32_t> intern(std::string_view token) {
    {
      std::shared_lock lock(mutex_);
      if (auto it = ids_.find(std::string(token)); it != ids_.end()) return it->second;
    }
    auto info = parse_info(token);
    if (!info) return std::nullopt;
    std::unique_lock lock(mutex_);
    if (auto it = ids_.find(info->name); it != ids_.end()) return it->second;
    auto id = static_cast<std::uint32_t>(infos_.size());
    infos_.push_back(std::move(*info));
    ids_.emplace(infos_.back().name, id);
    return id;
  }

  const SymbolInfo& info(std::uint32_t id) {
    std::shared_lock lock(mutex_);
    return infos_[id];  // deque keeps references stable
  }

 private:
  std::shared_mutex mutex_;
  std::deque<SymbolInfo> infos_;
  std::unordered_map<std::string, std::uint32_t> ids_;
};

}  // namespace

Symbol Symbol::parse(std::string_view token) {
  if (auto s = try_parse(token)) return *s;
  throw Error(ErrorCode::UnknownSymbol, "malformed symbol token '" + std::string(token) + "'");
}

std::optional<Symbol> Symbol::try_parse(std::string_view token) {
  if (auto id = Interner::instance().intern(token)) return Symbol(*id);
  return std::nullopt;
}

Symbol Symbol::tile(char type, char direction, char temperature, std::string_view shade,
                    std::optional<Color> color) {
  std::string name;
  if (color) name += *color == Color::Green ? "G:" : "R:";
  name += type;
  name += '-';
  name += direction;
  name += '-';
  name += temperature;
  if (!shade.empty()) {
    name += '-';
    name += shade;
  }
  return parse(name);
}

const std::string& Symbol::name() const { return info().name; }

const SymbolInfo& Symbol::info() const { return Interner::instance().info(id_); }

Symbol Symbol::with_color(std::optional<Color> color) const {
  const SymbolInfo& i = info();
  if (i.color == color) return *this;
  std::string_view base = i.name;
  if (i.color) base.remove_prefix(2);
  std::string name = to_string(color) + std::string(base);
  return parse(name);
}

Symbol Symbol::without_shade() const {
  const SymbolInfo& i = info();
  if (!i.is_tile() || i.shade.empty()) return *this;
  return tile(i.type, i.direction, i.temperature, "", i.color);
}

std::string to_string(std::optional<Color> color) {
  if (!color) return "";
  return *color == Color::Green ? "G:" : "R:";
}

Alphabet::Alphabet(std::vector<Symbol> symbols) : symbols_(std::move(symbols)) {
  std::uint32_t max_id = 0;
  for (Symbol s : symbols_) max_id = std::max(max_id, s.id());
  index_.assign(symbols_.empty() ? 0 : max_id + 1, -1);
  for (std::size_t i = 0; i < symbols_.size(); ++i) {
    auto& slot = index_[symbols_[i].id()];
    if (slot >= 0) {
      throw Error(ErrorCode::InvalidArgument,
                  "duplicate symbol '" + symbols_[i].name() + "' in alphabet");
    }
    slot = static_cast<std::int32_t>(i);
  }
}

Alphabet Alphabet::from_tokens(std::span<const std::string> tokens) {
  std::vector<Symbol> symbols;
  symbols.reserve(tokens.size());
  for (const auto& t : tokens) symbols.push_back(Symbol::parse(t));
  return Alphabet(std::move(symbols));
}

Alphabet Alphabet::colored(Color color) const {
  std::vector<Symbol> out;
  out.reserve(symbols_.size());
  for (Symbol s : symbols_) out.push_back(s.with_color(color));
  return Alphabet(std::move(out));
}

Alphabet Alphabet::red_green() const {
  std::vector<Symbol> out;
  out.reserve(2 * symbols_.size());
  for (Symbol s : symbols_) out.push_back(s.with_color(Color::Green));
  for (Symbol s : symbols_) out.push_back(s.with_color(Color::Red));
  return Alphabet(std::move(out));
}

Alphabet Alphabet::merged(const Alphabet& other) const {
  std::vector<Symbol> out = symbols_;
  for (Symbol s : other.symbols_) {
    if (!contains(s)) out.push_back(s);
  }
  return Alphabet(std::move(out));
}

std::vector<std::string> Alphabet::shades() const {
  std::vector<std::string> out;
  for (Symbol s : symbols_) {
    const auto& i = s.info();
    if (i.is_tile() && !i.shade.empty() &&
        std::find(out.begin(), out.end(), i.shade) == out.end()) {
      out.push_back(i.shade);
    }
  }
  return out;
}

std::string to_string(const Word& word) {
  std::string out;
  for (std::size_t i = 0; i < word.size(); ++i) {
    if (i) out += ' ';
    out += word[i].name();
  }
  return out;
}

Word parse_word(std::string_view text, const Alphabet* alphabet) {
  Word out;
  std::istringstream in{std::string(text)};
  std::string token;
  while (in >> token) {
    Symbol s = Symbol::parse(token);
    if (alphabet && !alphabet->contains(s)) {
      throw Error(ErrorCode::UnknownSymbol, "symbol '" + token + "' is not in the alphabet");
    }
    out.push_back(s);
  }
  return out;
}

Word recolor(const Word& word, Color color) {
  Word out;
  out.reserve(word.size());
  for (Symbol s : word) out.push_back(s.with_color(color));
  return out;
}

bool shortlex_less(const Word& lhs, const Word& rhs, const Alphabet& alphabet) {
  if (lhs.size() != rhs.size()) return lhs.size() < rhs.size();
  for (std::size_t i = 0; i < lhs.size(); ++i) {
    auto a = alphabet.index_of(lhs[i]);
    auto b = alphabet.index_of(rhs[i]);
    if (a != b) return a < b;
  }
  return false;
}

}  // namespace rpqdet
