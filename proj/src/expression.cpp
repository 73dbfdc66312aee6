#include "skewpbw/expression.hpp"

#include <cctype>

#include "skewpbw/error.hpp"

namespace skewpbw::expr {

namespace {

enum class Tok { Integer, Ident, Plus, Minus, Star, Slash, Caret, LParen, RParen, End };

struct Token {
  Tok kind;
  std::size_t position;
  std::string text;
};

std::vector<Token> tokenize(std::string_view s) {
  std::vector<Token> out;
  std::size_t i = 0;
  while (i < s.size()) {
    const unsigned char ch = static_cast<unsigned char>(s[i]);
    if (std::isspace(ch)) {
      ++i;
      continue;
    }
    const std::size_t start = i;
    if (std::isdigit(ch)) {
      while (i < s.size() && std::isdigit(static_cast<unsigned char>(s[i]))) ++i;
      out.push_back({Tok::Integer, start, std::string(s.substr(start, i - start))});
      continue;
    }
    if (std::isalpha(ch) || ch == '_') {
      while (i < s.size() && (std::isalnum(static_cast<unsigned char>(s[i])) || s[i] == '_')) ++i;
      out.push_back({Tok::Ident, start, std::string(s.substr(start, i - start))});
      continue;
    }
    // U+2212 MINUS SIGN
    if (s.substr(i, 3) == "\xE2\x88\x92") {
      out.push_back({Tok::Minus, start, "-"});
      i += 3;
      continue;
    }
    Tok kind;
    switch (ch) {
      case '+': kind = Tok::Plus; break;
      case '-': kind = Tok::Minus; break;
      case '*': kind = Tok::Star; break;
      case '/': kind = Tok::Slash; break;
      case '^': kind = Tok::Caret; break;
      case '(': kind = Tok::LParen; break;
      case ')': kind = Tok::RParen; break;
      default: throw ParseError(std::string("unexpected character '") + s[i] + "'", start);
    }
    out.push_back({kind, start, std::string(1, s[i])});
    ++i;
  }
  out.push_back({Tok::End, s.size(), ""});
  return out;
}

class Parser {
 public:
  explicit Parser(std::vector<Token> tokens) : tokens_(std::move(tokens)) {}

  std::unique_ptr<Node> parse_all() {
    if (peek().kind == Tok::End) throw ParseError("empty expression", peek().position);
    auto node = expression();
    if (peek().kind != Tok::End) throw ParseError("unexpected '" + peek().text + "'", peek().position);
    return node;
  }

 private:
  const Token& peek() const { return tokens_[pos_]; }
  const Token& take() { return tokens_[pos_++]; }

  static std::unique_ptr<Node> binary(NodeKind kind, std::size_t position, std::unique_ptr<Node> a,
                                      std::unique_ptr<Node> b) {
    auto n = std::make_unique<Node>();
    n->kind = kind;
    n->position = position;
    n->children.push_back(std::move(a));
    n->children.push_back(std::move(b));
    return n;
  }

  std::unique_ptr<Node> expression() {
    std::unique_ptr<Node> left;
    if (peek().kind == Tok::Plus) {
      take();
      left = term();
    } else {
      left = term();
    }
    while (peek().kind == Tok::Plus || peek().kind == Tok::Minus) {
      const Token& op = take();
      auto right = term();
      left = binary(op.kind == Tok::Plus ? NodeKind::Add : NodeKind::Sub, op.position, std::move(left),
                    std::move(right));
    }
    return left;
  }

  std::unique_ptr<Node> term() {
    auto left = unary();
    while (peek().kind == Tok::Star || peek().kind == Tok::Slash) {
      const Token& op = take();
      auto right = unary();
      left = binary(op.kind == Tok::Star ? NodeKind::Mul : NodeKind::Div, op.position, std::move(left),
                    std::move(right));
    }
    return left;
  }

  std::unique_ptr<Node> unary() {
    if (peek().kind == Tok::Minus) {
      const Token& op = take();
      auto n = std::make_unique<Node>();
      n->kind = NodeKind::Neg;
      n->position = op.position;
      n->children.push_back(unary());
      return n;
    }
    return power();
  }

  std::unique_ptr<Node> power() {
    auto base = atom();
    if (peek().kind == Tok::Caret) {
      const Token& op = take();
      if (peek().kind != Tok::Integer) throw ParseError("expected integer exponent", peek().position);
      const Token& e = take();
      auto n = std::make_unique<Node>();
      n->kind = NodeKind::Pow;
      n->position = op.position;
      try {
        n->exponent = std::stoul(e.text);
      } catch (const std::exception&) {
        throw ParseError("exponent too large", e.position);
      }
      n->children.push_back(std::move(base));
      return n;
    }
    return base;
  }

  std::unique_ptr<Node> atom() {
    const Token& t = take();
    auto n = std::make_unique<Node>();
    n->position = t.position;
    switch (t.kind) {
      case Tok::Integer:
        n->kind = NodeKind::Integer;
        n->integer = mpz_class(t.text);
        return n;
      case Tok::Ident:
        n->kind = NodeKind::Symbol;
        n->symbol = t.text;
        return n;
      case Tok::LParen: {
        auto inner = expression();
        if (peek().kind != Tok::RParen) throw ParseError("expected ')'", peek().position);
        take();
        return inner;
      }
      case Tok::End: throw ParseError("unexpected end of input", t.position);
      default: throw ParseError("unexpected '" + t.text + "'", t.position);
    }
  }

  std::vector<Token> tokens_;
  std::size_t pos_ = 0;
};

std::string trim(std::string_view s) {
  std::size_t a = 0, b = s.size();
  while (a < b && std::isspace(static_cast<unsigned char>(s[a]))) ++a;
  while (b > a && std::isspace(static_cast<unsigned char>(s[b - 1]))) --b;
  return std::string(s.substr(a, b - a));
}

}  // namespace

std::unique_ptr<Node> parse(std::string_view text) { return Parser(tokenize(text)).parse_all(); }

std::vector<std::string> split_top_level(std::string_view text, char separator) {
  std::vector<std::string> out;
  int depth = 0;
  std::size_t start = 0;
  for (std::size_t i = 0; i <= text.size(); ++i) {
    if (i == text.size() || (text[i] == separator && depth == 0)) {
      auto item = trim(text.substr(start, i - start));
      if (!item.empty()) out.push_back(std::move(item));
      start = i + 1;
    } else if (text[i] == '(') {
      ++depth;
    } else if (text[i] == ')') {
      --depth;
    }
  }
  return out;
}

}  // namespace skewpbw::expr
