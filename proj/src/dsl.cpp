#include "ivpp/dsl.hpp"

#include <cctype>
#include <charconv>
#include <optional>
#include <sstream>
#include <tuple>

namespace ivpp::dsl {

std::string ParseDiagnostic::to_string() const {
  std::ostringstream os;
  os << line << ":" << column << ": " << message;
  if (!expected.empty()) {
    os << " (expected ";
    for (std::size_t i = 0; i < expected.size(); ++i) os << (i ? ", " : "") << expected[i];
    os << ")";
  }
  return os.str();
}

namespace {

enum class Tok { Number, Ident, Prime, Equals, Semicolon, Plus, Minus, Star, Slash, Caret, LParen, RParen, End };

struct Token {
  Tok kind;
  std::string_view text;
  std::size_t offset;
};

const char* describe(Tok kind) {
  switch (kind) {
    case Tok::Number: return "number";
    case Tok::Ident: return "identifier";
    case Tok::Prime: return "\"'\"";
    case Tok::Equals: return "\"=\"";
    case Tok::Semicolon: return "\";\"";
    case Tok::Plus: return "\"+\"";
    case Tok::Minus: return "\"-\"";
    case Tok::Star: return "\"*\"";
    case Tok::Slash: return "\"/\"";
    case Tok::Caret: return "\"^\"";
    case Tok::LParen: return "\"(\"";
    case Tok::RParen: return "\")\"";
    case Tok::End: return "end of input";
  }
  return "?";
}

struct Fraction {
  Polynomial num;
  Polynomial den;
};

class Parser {
 public:
  explicit Parser(std::string_view src) : src_(src) { tokenize(); }

  RationalMapSpec parse() {
    expect_keyword("dim");
    const Token dim_tok = expect(Tok::Number, {"integer"});
    int dim = 0;
    if (dim_tok.text.find_first_not_of("0123456789") != std::string_view::npos) {
      fail(dim_tok.offset, "dimension must be an integer", {"integer"});
    }
    std::from_chars(dim_tok.text.data(), dim_tok.text.data() + dim_tok.text.size(), dim);
    if (dim < 1 || dim > kMaxVariables) semantic(dim_tok.offset, "dimension must be 1, 2 or 3");
    dim_ = dim;
    expect(Tok::Semicolon, {"\";\""});

    std::vector<std::optional<RationalComponent>> components(static_cast<std::size_t>(dim));
    bool any_component = false;
    while (peek().kind == Tok::Ident && peek().text != "inv") {
      const Token var = next();
      const int index = variable_index(var.text);
      if (index < 0) fail(var.offset, "expected a component variable", {"x", "y", "z", "inv"});
      if (index >= dim) semantic(var.offset, "component for undeclared variable '" + std::string(var.text) + "'");
      expect(Tok::Prime, {"\"'\""});
      expect(Tok::Equals, {"\"=\""});
      Fraction f = expr();
      expect(Tok::Semicolon, {"\";\"", "\"+\"", "\"-\"", "\"*\"", "\"/\"", "\"^\""});
      auto& slot = components[static_cast<std::size_t>(index)];
      if (slot) semantic(var.offset, "duplicate component for '" + std::string(var.text) + "'");
      slot = RationalComponent{std::move(f.num), std::move(f.den)};
      any_component = true;
    }
    if (!any_component) fail(peek().offset, "expected a component", {"x", "y", "z"});

    std::vector<NamedInvariant> invariants;
    while (peek().kind == Tok::Ident && peek().text == "inv") {
      next();
      const Token name = expect(Tok::Ident, {"identifier"});
      expect(Tok::Equals, {"\"=\""});
      const std::size_t at = peek().offset;
      Fraction f = expr();
      expect(Tok::Semicolon, {"\";\"", "\"+\"", "\"-\"", "\"*\"", "\"/\"", "\"^\""});
      if (!f.den.is_constant()) semantic(at, "invariant '" + std::string(name.text) + "' must be a polynomial");
      invariants.push_back({std::string(name.text), f.num.scaled(1.0 / f.den.constant_term())});
    }
    if (peek().kind != Tok::End) fail(peek().offset, "unexpected token", {"inv", "end of input"});

    std::vector<RationalComponent> out;
    for (std::size_t i = 0; i < components.size(); ++i) {
      if (!components[i]) {
        throw Error(ErrorKind::SemanticError, "dimension mismatch: no component for '" +
                                                  std::string(1, "xyz"[i]) + "'");
      }
      out.push_back(std::move(*components[i]));
    }
    return RationalMapSpec(dim, std::move(out), std::move(invariants));
  }

 private:
  static int variable_index(std::string_view name) {
    if (name == "x") return 0;
    if (name == "y") return 1;
    if (name == "z") return 2;
    return -1;
  }

  void tokenize() {
    std::size_t i = 0;
    while (i < src_.size()) {
      const char c = src_[i];
      if (std::isspace(static_cast<unsigned char>(c))) {
        ++i;
        continue;
      }
      if (c == '#') {
        while (i < src_.size() && src_[i] != '\n') ++i;
        continue;
      }
      const std::size_t start = i;
      if (std::isdigit(static_cast<unsigned char>(c)) || (c == '.' && i + 1 < src_.size() &&
                                                          std::isdigit(static_cast<unsigned char>(src_[i + 1])))) {
        while (i < src_.size() && std::isdigit(static_cast<unsigned char>(src_[i]))) ++i;
        if (i < src_.size() && src_[i] == '.') {
          ++i;
          while (i < src_.size() && std::isdigit(static_cast<unsigned char>(src_[i]))) ++i;
        }
        if (i < src_.size() && (src_[i] == 'e' || src_[i] == 'E')) {
          std::size_t j = i + 1;
          if (j < src_.size() && (src_[j] == '+' || src_[j] == '-')) ++j;
          if (j < src_.size() && std::isdigit(static_cast<unsigned char>(src_[j]))) {
            i = j;
            while (i < src_.size() && std::isdigit(static_cast<unsigned char>(src_[i]))) ++i;
          }
        }
        tokens_.push_back({Tok::Number, src_.substr(start, i - start), start});
        continue;
      }
      if (std::isalpha(static_cast<unsigned char>(c)) || c == '_') {
        while (i < src_.size() && (std::isalnum(static_cast<unsigned char>(src_[i])) || src_[i] == '_')) ++i;
        tokens_.push_back({Tok::Ident, src_.substr(start, i - start), start});
        continue;
      }
      Tok kind;
      switch (c) {
        case '\'': kind = Tok::Prime; break;
        case '=': kind = Tok::Equals; break;
        case ';': kind = Tok::Semicolon; break;
        case '+': kind = Tok::Plus; break;
        case '-': kind = Tok::Minus; break;
        case '*': kind = Tok::Star; break;
        case '/': kind = Tok::Slash; break;
        case '^': kind = Tok::Caret; break;
        case '(': kind = Tok::LParen; break;
        case ')': kind = Tok::RParen; break;
        default:
          fail(start, std::string("unexpected character '") + c + "'",
               {"number", "variable", "operator", "\"(\"", "\")\"", "\";\""});
      }
      tokens_.push_back({kind, src_.substr(start, 1), start});
      ++i;
    }
    tokens_.push_back({Tok::End, {}, src_.size()});
  }

  const Token& peek() const { return tokens_[pos_]; }
  Token next() {
    Token t = tokens_[pos_];
    if (t.kind != Tok::End) ++pos_;
    return t;
  }

  Token expect(Tok kind, std::vector<std::string> expected) {
    if (peek().kind != kind) {
      std::string message = std::string("unexpected ") + describe(peek().kind);
      if (kind == Tok::RParen && !open_parens_.empty()) {
        const auto [line, col] = line_col(open_parens_.back());
        message += "; '(' at " + std::to_string(line) + ":" + std::to_string(col) + " is not closed";
      }
      fail(peek().offset, message, std::move(expected));
    }
    return next();
  }

  void expect_keyword(std::string_view word) {
    if (peek().kind != Tok::Ident || peek().text != word) {
      fail(peek().offset, std::string("unexpected ") + describe(peek().kind), {"\"" + std::string(word) + "\""});
    }
    next();
  }

  std::pair<int, int> line_col(std::size_t offset) const {
    int line = 1;
    int col = 1;
    for (std::size_t i = 0; i < offset && i < src_.size(); ++i) {
      if (src_[i] == '\n') {
        ++line;
        col = 1;
      } else {
        ++col;
      }
    }
    return {line, col};
  }

  [[noreturn]] void fail(std::size_t offset, std::string message, std::vector<std::string> expected) const {
    ParseDiagnostic d;
    // end-of-input errors point at the last byte so the offset stays inside
    d.offset = src_.empty() ? 0 : std::min(offset, src_.size() - 1);
    std::tie(d.line, d.column) = line_col(d.offset);
    d.message = std::move(message);
    d.expected = std::move(expected);
    throw ParseError(std::move(d));
  }

  [[noreturn]] void semantic(std::size_t offset, const std::string& message) const {
    const auto [line, col] = line_col(offset);
    throw Error(ErrorKind::SemanticError, std::to_string(line) + ":" + std::to_string(col) + ": " + message);
  }

  Fraction expr() {
    Fraction acc = term();
    while (peek().kind == Tok::Plus || peek().kind == Tok::Minus) {
      const bool minus = next().kind == Tok::Minus;
      Fraction rhs = term();
      if (minus) rhs.num = -rhs.num;
      if (acc.den == rhs.den) {
        acc.num = acc.num + rhs.num;
      } else {
        acc.num = acc.num * rhs.den + rhs.num * acc.den;
        acc.den = acc.den * rhs.den;
      }
    }
    return acc;
  }

  Fraction term() {
    Fraction acc = unary();
    while (peek().kind == Tok::Star || peek().kind == Tok::Slash) {
      const Token op = next();
      Fraction rhs = unary();
      if (op.kind == Tok::Star) {
        acc.num = acc.num * rhs.num;
        acc.den = acc.den * rhs.den;
      } else {
        if (rhs.num.is_zero()) semantic(op.offset, "division by zero");
        acc.num = acc.num * rhs.den;
        acc.den = acc.den * rhs.num;
      }
    }
    return acc;
  }

  Fraction unary() {
    if (peek().kind == Tok::Minus) {
      next();
      Fraction f = unary();
      f.num = -f.num;
      return f;
    }
    if (peek().kind == Tok::Plus) {
      next();
      return unary();
    }
    return power();
  }

  Fraction power() {
    Fraction base = primary();
    if (peek().kind == Tok::Caret) {
      next();
      const Token e = expect(Tok::Number, {"non-negative integer"});
      unsigned exponent = 0;
      const auto [ptr, ec] = std::from_chars(e.text.data(), e.text.data() + e.text.size(), exponent);
      if (ec != std::errc{} || ptr != e.text.data() + e.text.size()) {
        fail(e.offset, "exponent must be a non-negative integer", {"non-negative integer"});
      }
      base.num = base.num.pow(exponent);
      base.den = base.den.pow(exponent);
    }
    return base;
  }

  Fraction primary() {
    const Token& t = peek();
    switch (t.kind) {
      case Tok::Number: {
        next();
        double value = 0.0;
        const auto [ptr, ec] = std::from_chars(t.text.data(), t.text.data() + t.text.size(), value);
        if (ec != std::errc{} || ptr != t.text.data() + t.text.size()) {
          fail(t.offset, "malformed number", {"number"});
        }
        return {Polynomial::constant(value), Polynomial::constant(1.0)};
      }
      case Tok::Ident: {
        const Token var = next();
        const int index = variable_index(var.text);
        if (index < 0 || index >= dim_) semantic(var.offset, "undeclared variable '" + std::string(var.text) + "'");
        return {Polynomial::variable(index), Polynomial::constant(1.0)};
      }
      case Tok::LParen: {
        open_parens_.push_back(next().offset);
        Fraction inner = expr();
        expect(Tok::RParen, {"\")\"", "\"+\"", "\"-\"", "\"*\"", "\"/\"", "\"^\""});
        open_parens_.pop_back();
        return inner;
      }
      default:
        fail(t.offset, std::string("unexpected ") + describe(t.kind), {"number", "variable", "\"(\"", "\"-\""});
    }
  }

  std::string_view src_;
  std::vector<Token> tokens_;
  std::size_t pos_ = 0;
  int dim_ = 0;
  std::vector<std::size_t> open_parens_;
};

}  // namespace

RationalMapSpec parse_map(std::string_view source) { return Parser(source).parse(); }

std::string format_map(const RationalMapSpec& spec) {
  static constexpr const char* kNames[] = {"x", "y", "z"};
  std::ostringstream os;
  os << "dim " << spec.dimension() << ";\n";
  for (std::size_t i = 0; i < spec.components().size(); ++i) {
    const auto& c = spec.components()[i];
    os << kNames[i] << "' = ";
    if (c.denominator == Polynomial::constant(1.0)) {
      os << c.numerator.to_string();
    } else {
      os << "(" << c.numerator.to_string() << ")/(" << c.denominator.to_string() << ")";
    }
    os << ";\n";
  }
  for (const auto& inv : spec.invariants()) os << "inv " << inv.name << " = " << inv.polynomial.to_string() << ";\n";
  return os.str();
}

}  // namespace ivpp::dsl
