#include "rpqdet/regex.hpp"

#include <algorithm>
#include <cctype>
#include <optional>

#include "rpqdet/error.hpp"

namespace rpqdet {

struct Regex::Node {
  Kind kind = Kind::Empty;
  std::optional<Symbol> symbol;
  std::vector<Symbol> symbols;
  std::string label;
  std::optional<Regex> a;
  std::optional<Regex> b;
  std::size_t size = 1;
  bool nullable = false;
};

std::shared_ptr<Regex::Node> Regex::make_node(Kind kind) {
  auto n = std::make_shared<Node>();
  n->kind = kind;
  return n;
}

Regex Regex::empty() {
  static const Regex r(make_node(Kind::Empty));
  return r;
}

Regex Regex::epsilon() {
  static const Regex r = [] {
    auto n = make_node(Kind::Epsilon);
    n->nullable = true;
    return Regex(std::move(n));
  }();
  return r;
}

Regex Regex::literal(Symbol s) {
  auto n = make_node(Kind::Literal);
  n->symbol = s;
  return Regex(std::move(n));
}

Regex Regex::symbol_class(std::vector<Symbol> symbols, std::string label) {
  std::vector<Symbol> unique;
  for (Symbol s : symbols) {
    if (std::find(unique.begin(), unique.end(), s) == unique.end()) unique.push_back(s);
  }
  if (unique.empty()) {
    throw Error(ErrorCode::InvalidArgument, "symbol class must not be empty");
  }
  auto n = make_node(Kind::Class);
  n->symbols = std::move(unique);
  n->label = std::move(label);
  return Regex(std::move(n));
}

Regex Regex::alt(Regex lhs, Regex rhs) {
  auto n = make_node(Kind::Union);
  n->size = 1 + lhs.size() + rhs.size();
  n->nullable = lhs.nullable() || rhs.nullable();
  n->a = std::move(lhs);
  n->b = std::move(rhs);
  return Regex(std::move(n));
}

Regex Regex::concat(Regex lhs, Regex rhs) {
  auto n = make_node(Kind::Concat);
  n->size = 1 + lhs.size() + rhs.size();
  n->nullable = lhs.nullable() && rhs.nullable();
  n->a = std::move(lhs);
  n->b = std::move(rhs);
  return Regex(std::move(n));
}

Regex Regex::star(Regex inner) {
  auto n = make_node(Kind::Star);
  n->size = 1 + inner.size();
  n->nullable = true;
  n->a = std::move(inner);
  return Regex(std::move(n));
}

Regex Regex::plus(Regex inner) {
  auto n = make_node(Kind::Plus);
  n->size = 1 + inner.size();
  n->nullable = inner.nullable();
  n->a = std::move(inner);
  return Regex(std::move(n));
}

Regex::Kind Regex::kind() const { return node_->kind; }
Symbol Regex::symbol() const { return *node_->symbol; }
std::span<const Symbol> Regex::symbols() const { return node_->symbols; }
const std::string& Regex::label() const { return node_->label; }
const Regex& Regex::left() const { return *node_->a; }
const Regex& Regex::right() const { return *node_->b; }
const Regex& Regex::inner() const { return *node_->a; }
std::size_t Regex::size() const { return node_->size; }
bool Regex::nullable() const { return node_->nullable; }

bool operator==(const Regex& x, const Regex& y) {
  if (x.node_ == y.node_) return true;
  if (x.kind() != y.kind()) return false;
  switch (x.kind()) {
    case Regex::Kind::Empty:
    case Regex::Kind::Epsilon:
      return true;
    case Regex::Kind::Literal:
      return x.symbol() == y.symbol();
    case Regex::Kind::Class: {
      std::vector<Symbol> a(x.symbols().begin(), x.symbols().end());
      std::vector<Symbol> b(y.symbols().begin(), y.symbols().end());
      std::sort(a.begin(), a.end());
      std::sort(b.begin(), b.end());
      return a == b;
    }
    case Regex::Kind::Union:
    case Regex::Kind::Concat:
      return x.left() == y.left() && x.right() == y.right();
    case Regex::Kind::Star:
    case Regex::Kind::Plus:
      return x.inner() == y.inner();
  }
  return false;
}

namespace {

enum class Tok { Symbol, Class, Set, LParen, RParen, Plus, Star, PlusOp, End };

struct Token {
  Tok kind;
  std::string text;
  std::size_t pos;
};

bool is_word_char(char c) {
  return std::isalnum(static_cast<unsigned char>(c)) || c == '_' || c == '-' || c == ':';
}

std::vector<Token> tokenize(std::string_view text) {
  std::vector<Token> out;
  std::size_t i = 0;
  while (i < text.size()) {
    char c = text[i];
    if (std::isspace(static_cast<unsigned char>(c))) {
      ++i;
      continue;
    }
    std::size_t start = i;
    switch (c) {
      case '(':
        out.push_back({Tok::LParen, "(", i++});
        continue;
      case ')':
        out.push_back({Tok::RParen, ")", i++});
        continue;
      case '+':
        out.push_back({Tok::Plus, "+", i++});
        continue;
      case '*':
        out.push_back({Tok::Star, "*", i++});
        continue;
      case '^':
        if (i + 1 < text.size() && text[i + 1] == '+') {
          out.push_back({Tok::PlusOp, "^+", i});
          i += 2;
          continue;
        }
        throw SyntaxError(i, "expected '+' after '^'");
      default:
        break;
    }
    // optional colour prefix in front of a bracketed class or set
    std::size_t j = i;
    if (j + 2 < text.size() && (text[j] == 'G' || text[j] == 'R') && text[j + 1] == ':' &&
        (text[j + 2] == '[' || text[j + 2] == '{')) {
      j += 2;
    }
    if (text[j] == '[' || text[j] == '{') {
      char close = text[j] == '[' ? ']' : '}';
      auto end = text.find(close, j);
      if (end == std::string_view::npos) {
        throw SyntaxError(start, std::string("unterminated '") + text[j] + "'");
      }
      out.push_back({text[j] == '[' ? Tok::Class : Tok::Set,
                     std::string(text.substr(start, end + 1 - start)), start});
      i = end + 1;
      continue;
    }
    if (!is_word_char(c)) throw SyntaxError(i, std::string("unexpected character '") + c + "'");
    while (i < text.size() && is_word_char(text[i])) ++i;
    out.push_back({Tok::Symbol, std::string(text.substr(start, i - start)), start});
  }
  out.push_back({Tok::End, "", text.size()});
  return out;
}

std::string strip_spaces(std::string_view s) {
  std::string out;
  for (char c : s) {
    if (!std::isspace(static_cast<unsigned char>(c))) out += c;
  }
  return out;
}

std::vector<std::string> split_fields(std::string_view body) {
  std::vector<std::string> out;
  std::string cur;
  for (char c : body) {
    if (c == ',') {
      out.push_back(cur);
      cur.clear();
    } else {
      cur += c;
    }
  }
  out.push_back(cur);
  return out;
}

class Parser {
 public:
  Parser(std::string_view text, const Alphabet& alphabet, ParseOptions options)
      : tokens_(tokenize(text)), alphabet_(alphabet), options_(options) {}

  Regex parse() {
    if (peek().kind == Tok::End) throw SyntaxError(0, "empty expression");
    Regex r = parse_union();
    if (peek().kind != Tok::End) {
      throw SyntaxError(peek().pos, "unexpected '" + peek().text + "'");
    }
    return r;
  }

 private:
  const Token& peek() const { return tokens_[pos_]; }
  const Token& next() { return tokens_[pos_++]; }

  static bool starts_atom(Tok k) {
    return k == Tok::Symbol || k == Tok::Class || k == Tok::Set || k == Tok::LParen;
  }

  Regex parse_union() {
    Regex r = parse_concat();
    while (peek().kind == Tok::Plus) {
      next();
      r = Regex::alt(std::move(r), parse_concat());
    }
    return r;
  }

  Regex parse_concat() {
    if (!starts_atom(peek().kind)) {
      throw SyntaxError(peek().pos, peek().kind == Tok::End
                                        ? std::string("unexpected end of expression")
                                        : "unexpected '" + peek().text + "'");
    }
    Regex r = parse_postfix();
    while (starts_atom(peek().kind)) r = Regex::concat(std::move(r), parse_postfix());
    return r;
  }

  Regex parse_postfix() {
    Regex r = parse_atom();
    for (;;) {
      if (peek().kind == Tok::Star) {
        next();
        r = Regex::star(std::move(r));
      } else if (peek().kind == Tok::PlusOp) {
        next();
        r = Regex::plus(std::move(r));
      } else {
        return r;
      }
    }
  }

  Regex parse_atom() {
    const Token& t = next();
    switch (t.kind) {
      case Tok::LParen: {
        if (peek().kind == Tok::RParen) {
          next();
          return Regex::epsilon();
        }
        Regex r = parse_union();
        if (peek().kind != Tok::RParen) throw SyntaxError(peek().pos, "expected ')'");
        next();
        return r;
      }
      case Tok::Symbol:
        return parse_symbol_token(t);
      case Tok::Class:
        return parse_class(t);
      case Tok::Set:
        return parse_set(t);
      default:
        throw SyntaxError(t.pos, "unexpected '" + t.text + "'");
    }
  }

  static std::pair<std::optional<Color>, std::string_view> split_color(std::string_view text) {
    if (text.size() >= 2 && text[1] == ':' && (text[0] == 'G' || text[0] == 'R')) {
      return {text[0] == 'G' ? Color::Green : Color::Red, text.substr(2)};
    }
    return {std::nullopt, text};
  }

  Regex parse_symbol_token(const Token& t) {
    auto [color, base] = split_color(t.text);
    if (base == "S0") return tile_class(color, '*', '*', '*', "*", t);
    auto s = Symbol::try_parse(t.text);
    if (!s) throw SyntaxError(t.pos, "malformed symbol token '" + t.text + "'");
    if (!alphabet_.contains(*s) && !options_.admit_unknown_symbols) {
      throw Error(ErrorCode::UnknownSymbol, "unknown symbol '" + t.text + "' at position " +
                                                std::to_string(t.pos));
    }
    return Regex::literal(*s);
  }

  Regex parse_class(const Token& t) {
    auto [color, rest] = split_color(t.text);
    std::string body = strip_spaces(rest.substr(1, rest.size() - 2));
    auto fields = split_fields(body);
    if (fields.size() != 3 && fields.size() != 4) {
      throw SyntaxError(t.pos, "class literal needs 3 or 4 fields");
    }
    auto one = [&](const std::string& f, std::string_view allowed) -> char {
      if (f == "*") return '*';
      if (f.size() == 1 && allowed.find(f[0]) != std::string_view::npos) return f[0];
      throw SyntaxError(t.pos, "bad class field '" + f + "'");
    };
    char type = one(fields[0], "AB");
    char dir = one(fields[1], "HV");
    char temp = one(fields[2], "WC");
    std::string shade = fields.size() == 4 ? fields[3] : std::string();
    return tile_class(color, type, dir, temp, fields.size() == 4 ? shade : std::string(), t);
  }

  // shade: "*" any, "" stripped symbols only, otherwise exact.
  Regex tile_class(std::optional<Color> color, char type, char dir, char temp,
                   const std::string& shade, const Token& t) {
    std::vector<Symbol> picked;
    for (Symbol s : alphabet_.symbols()) {
      const SymbolInfo& i = s.info();
      if (!i.is_tile() || i.color != color) continue;
      if (type != '*' && i.type != type) continue;
      if (dir != '*' && i.direction != dir) continue;
      if (temp != '*' && i.temperature != temp) continue;
      if (shade != "*" && i.shade != shade) continue;
      picked.push_back(s);
    }
    if (picked.empty()) {
      throw Error(ErrorCode::UnknownSymbol, "class '" + t.text + "' at position " +
                                                std::to_string(t.pos) +
                                                " matches no symbol of the alphabet");
    }
    std::string label = to_string(color);
    auto [_, base] = split_color(t.text);
    if (base == "S0") {
      label += "S0";
    } else {
      label += "[";
      label += type;
      label += ',';
      label += dir;
      label += ',';
      label += temp;
      if (!shade.empty()) label += "," + shade;
      label += "]";
    }
    return Regex::symbol_class(std::move(picked), std::move(label));
  }

  Regex parse_set(const Token& t) {
    std::string body = strip_spaces(std::string_view(t.text).substr(1, t.text.size() - 2));
    if (t.text.size() >= 2 && t.text[1] == ':') {
      throw SyntaxError(t.pos, "explicit sets take coloured members, not a prefix");
    }
    if (body.empty()) return Regex::empty();
    std::vector<Symbol> members;
    for (const auto& f : split_fields(body)) {
      auto s = Symbol::try_parse(f);
      if (!s) throw SyntaxError(t.pos, "malformed symbol token '" + f + "' in set");
      if (!alphabet_.contains(*s) && !options_.admit_unknown_symbols) {
        throw Error(ErrorCode::UnknownSymbol, "unknown symbol '" + f + "' at position " +
                                                  std::to_string(t.pos));
      }
      members.push_back(*s);
    }
    std::string label = "{";
    for (std::size_t i = 0; i < members.size(); ++i) {
      if (i) label += ',';
      label += members[i].name();
    }
    label += '}';
    return Regex::symbol_class(std::move(members), std::move(label));
  }

  std::vector<Token> tokens_;
  std::size_t pos_ = 0;
  const Alphabet& alphabet_;
  ParseOptions options_;
};

int precedence(Regex::Kind k) {
  switch (k) {
    case Regex::Kind::Union:
      return 0;
    case Regex::Kind::Concat:
      return 1;
    case Regex::Kind::Star:
    case Regex::Kind::Plus:
      return 2;
    default:
      return 3;
  }
}

std::string set_label(std::span<const Symbol> symbols) {
  std::string out = "{";
  for (std::size_t i = 0; i < symbols.size(); ++i) {
    if (i) out += ',';
    out += symbols[i].name();
  }
  return out + "}";
}

void print(const Regex& r, int context, std::string& out) {
  bool wrap = precedence(r.kind()) < context;
  if (wrap) out += '(';
  switch (r.kind()) {
    case Regex::Kind::Empty:
      out += "{}";
      break;
    case Regex::Kind::Epsilon:
      out += "()";
      break;
    case Regex::Kind::Literal:
      out += r.symbol().name();
      break;
    case Regex::Kind::Class:
      out += r.label().empty() ? set_label(r.symbols()) : r.label();
      break;
    case Regex::Kind::Union:
      print(r.left(), 0, out);
      out += " + ";
      print(r.right(), 1, out);
      break;
    case Regex::Kind::Concat:
      print(r.left(), 1, out);
      out += ' ';
      print(r.right(), 2, out);
      break;
    case Regex::Kind::Star:
      print(r.inner(), 2, out);
      out += '*';
      break;
    case Regex::Kind::Plus:
      print(r.inner(), 2, out);
      out += "^+";
      break;
  }
  if (wrap) out += ')';
}

}  // namespace

Regex parse_regex(std::string_view text, const Alphabet& alphabet, ParseOptions options) {
  return Parser(text, alphabet, options).parse();
}

std::string to_string(const Regex& r) {
  std::string out;
  print(r, 0, out);
  return out;
}

Regex recolor(const Regex& r, Color color) {
  switch (r.kind()) {
    case Regex::Kind::Empty:
    case Regex::Kind::Epsilon:
      return r;
    case Regex::Kind::Literal:
      return Regex::literal(r.symbol().with_color(color));
    case Regex::Kind::Class: {
      std::vector<Symbol> painted;
      for (Symbol s : r.symbols()) painted.push_back(s.with_color(color));
      std::string label;
      std::string_view old = r.label();
      if (old.size() >= 2 && old[1] == ':') old.remove_prefix(2);
      if (!old.empty() && old.front() != '{') {
        label = to_string(std::optional<Color>(color)) + std::string(old);
      } else {
        label = set_label(painted);
      }
      return Regex::symbol_class(std::move(painted), std::move(label));
    }
    case Regex::Kind::Union:
      return Regex::alt(recolor(r.left(), color), recolor(r.right(), color));
    case Regex::Kind::Concat:
      return Regex::concat(recolor(r.left(), color), recolor(r.right(), color));
    case Regex::Kind::Star:
      return Regex::star(recolor(r.inner(), color));
    case Regex::Kind::Plus:
      return Regex::plus(recolor(r.inner(), color));
  }
  return r;
}

namespace {

void collect(const Regex& r, std::vector<Symbol>& out) {
  auto add = [&](Symbol s) {
    if (std::find(out.begin(), out.end(), s) == out.end()) out.push_back(s);
  };
  switch (r.kind()) {
    case Regex::Kind::Literal:
      add(r.symbol());
      break;
    case Regex::Kind::Class:
      for (Symbol s : r.symbols()) add(s);
      break;
    case Regex::Kind::Union:
    case Regex::Kind::Concat:
      collect(r.left(), out);
      collect(r.right(), out);
      break;
    case Regex::Kind::Star:
    case Regex::Kind::Plus:
      collect(r.inner(), out);
      break;
    default:
      break;
  }
}

}  // namespace

std::vector<Symbol> mentioned_symbols(const Regex& r) {
  std::vector<Symbol> out;
  collect(r, out);
  return out;
}

}  // namespace rpqdet
