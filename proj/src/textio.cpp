#include "lndexp/textio.hpp"

#include <cctype>
#include <utility>
#include <vector>

namespace lndexp {

namespace {

enum class Tok { kEnd, kPlus, kMinus, kStar, kCaret, kLParen, kRParen, kNumber, kIdent };

struct Token {
  Tok kind = Tok::kEnd;
  std::size_t pos = 0;  // 1-based
  Rational number;      // kNumber
  bool integral = true;
  std::string ident;  // kIdent
};

class Lexer {
 public:
  explicit Lexer(std::string_view text) : text_(text) {}

  Token next() {
    while (i_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[i_]))) ++i_;
    std::size_t pos = i_ + 1;
    if (i_ >= text_.size()) return token(Tok::kEnd, pos);
    char c = text_[i_];
    switch (c) {
      case '+': ++i_; return token(Tok::kPlus, pos);
      case '-': ++i_; return token(Tok::kMinus, pos);
      case '*': ++i_; return token(Tok::kStar, pos);
      case '^': ++i_; return token(Tok::kCaret, pos);
      case '(': ++i_; return token(Tok::kLParen, pos);
      case ')': ++i_; return token(Tok::kRParen, pos);
      default: break;
    }
    if (std::isdigit(static_cast<unsigned char>(c))) return lex_number(pos);
    if (std::isalpha(static_cast<unsigned char>(c)) || c == '_') return lex_ident(pos);
    throw ParseError("unexpected character '" + std::string(1, c) + "' at position " +
                         std::to_string(pos),
                     pos, "number, variable, or operator");
  }

 private:
  static Token token(Tok kind, std::size_t pos) {
    Token t;
    t.kind = kind;
    t.pos = pos;
    return t;
  }

  Token lex_number(std::size_t pos) {
    std::string digits = take_digits();
    BigInt num(digits, 10);
    // `/` directly followed by digits continues the rational literal; no
    // whitespace is allowed around it.
    if (i_ < text_.size() && text_[i_] == '/' && i_ + 1 < text_.size() &&
        std::isdigit(static_cast<unsigned char>(text_[i_ + 1]))) {
      ++i_;
      std::size_t den_pos = i_ + 1;
      BigInt den(take_digits(), 10);
      if (den == 0)
        throw ParseError("zero denominator at position " + std::to_string(den_pos), den_pos,
                         "nonzero denominator");
      Token t = token(Tok::kNumber, pos);
      t.number = make_rational(num, den);
      t.integral = (t.number.get_den() == 1);
      return t;
    }
    Token t = token(Tok::kNumber, pos);
    t.number = Rational(num);
    return t;
  }

  Token lex_ident(std::size_t pos) {
    std::size_t start = i_;
    while (i_ < text_.size() &&
           (std::isalnum(static_cast<unsigned char>(text_[i_])) || text_[i_] == '_'))
      ++i_;
    Token t = token(Tok::kIdent, pos);
    t.ident = std::string(text_.substr(start, i_ - start));
    return t;
  }

  std::string take_digits() {
    std::size_t start = i_;
    while (i_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[i_]))) ++i_;
    return std::string(text_.substr(start, i_ - start));
  }

  std::string_view text_;
  std::size_t i_ = 0;
};

class Parser {
 public:
  Parser(std::string_view text, RingPtr ring) : lexer_(text), ring_(std::move(ring)) {
    advance();
  }

  Polynomial parse() {
    Polynomial p = expression();
    expect(Tok::kEnd, "end of input or an operator");
    return p;
  }

 private:
  void advance() { tok_ = lexer_.next(); }

  void expect(Tok kind, const std::string& what) {
    if (tok_.kind != kind)
      throw ParseError("expected " + what + " at position " + std::to_string(tok_.pos),
                       tok_.pos, what);
    advance();
  }

  Polynomial expression() {
    Polynomial p = signed_term();
    while (tok_.kind == Tok::kPlus || tok_.kind == Tok::kMinus) {
      bool plus = tok_.kind == Tok::kPlus;
      advance();
      Polynomial q = signed_term();
      p = plus ? p + q : p - q;
    }
    return p;
  }

  Polynomial signed_term() {
    if (tok_.kind == Tok::kMinus) {
      advance();
      return -product();
    }
    return product();
  }

  Polynomial product() {
    Polynomial p = power();
    while (tok_.kind == Tok::kStar) {
      advance();
      p = p * power();
    }
    return p;
  }

  Polynomial power() {
    Polynomial p = atom();
    if (tok_.kind == Tok::kCaret) {
      advance();
      if (tok_.kind == Tok::kMinus)
        throw NonIntegerExponent(
            "negative exponent at position " + std::to_string(tok_.pos), tok_.pos);
      if (tok_.kind != Tok::kNumber)
        throw ParseError("expected exponent at position " + std::to_string(tok_.pos), tok_.pos,
                         "nonnegative integer exponent");
      if (!tok_.integral)
        throw NonIntegerExponent(
            "fractional exponent at position " + std::to_string(tok_.pos), tok_.pos);
      BigInt e = tok_.number.get_num();
      if (!e.fits_ulong_p())
        throw OverflowError("exponent too large at position " + std::to_string(tok_.pos));
      advance();
      return pow(p, e.get_ui());
    }
    return p;
  }

  Polynomial atom() {
    if (tok_.kind == Tok::kNumber) {
      Rational value = tok_.number;
      advance();
      return Polynomial::constant(ring_, value);
    }
    if (tok_.kind == Tok::kIdent) {
      auto idx = ring_->index_of(tok_.ident);
      if (!idx)
        throw UnknownVariable("unknown variable '" + tok_.ident + "' at position " +
                                  std::to_string(tok_.pos),
                              tok_.pos, tok_.ident);
      advance();
      return Polynomial::variable(ring_, *idx);
    }
    if (tok_.kind == Tok::kLParen) {
      advance();
      Polynomial p = expression();
      expect(Tok::kRParen, "')'");
      return p;
    }
    throw ParseError("expected a term at position " + std::to_string(tok_.pos), tok_.pos,
                     "number, variable, or '('");
  }

  Lexer lexer_;
  RingPtr ring_;
  Token tok_;
};

std::string format_term(const std::vector<std::string>& names, const Monomial& mono,
                        const Rational& abs_coeff) {
  std::string mono_str;
  for (std::size_t v = 0; v < mono.nvars(); ++v) {
    std::int64_t e = mono.exponent(v);
    if (e == 0) continue;
    if (!mono_str.empty()) mono_str += "*";
    mono_str += names[v];
    if (e != 1) mono_str += "^" + std::to_string(e);
  }
  if (mono_str.empty()) return abs_coeff.get_str();
  if (abs_coeff == 1) return mono_str;
  return abs_coeff.get_str() + "*" + mono_str;
}

}  // namespace

Polynomial parse_poly(std::string_view text, const RingPtr& ring) {
  return Parser(text, ring).parse();
}

PolyMap parse_map(std::span<const std::string> components, const RingPtr& ring) {
  if (components.size() != ring->size())
    throw ArityMismatch("expected " + std::to_string(ring->size()) + " components, got " +
                        std::to_string(components.size()));
  std::vector<Polynomial> polys;
  polys.reserve(components.size());
  for (const auto& text : components) polys.push_back(parse_poly(text, ring));
  return PolyMap(ring, std::move(polys));
}

Derivation parse_derivation(std::span<const std::string> images, const RingPtr& ring) {
  if (images.size() != ring->size())
    throw ArityMismatch("expected " + std::to_string(ring->size()) + " images, got " +
                        std::to_string(images.size()));
  std::vector<Polynomial> polys;
  polys.reserve(images.size());
  for (const auto& text : images) polys.push_back(parse_poly(text, ring));
  return Derivation(ring, std::move(polys));
}

std::string format_poly(const Polynomial& p) {
  if (p.is_zero()) return "0";
  const auto& names = p.ring()->names();
  std::string out;
  bool first = true;
  for (const auto& [mono, coeff] : p.terms()) {
    bool negative = coeff < 0;
    Rational abs_coeff = negative ? Rational(-coeff) : coeff;
    if (first)
      out += negative ? "-" : "";
    else
      out += negative ? " - " : " + ";
    out += format_term(names, mono, abs_coeff);
    first = false;
  }
  return out;
}

std::string format_unipoly(const UniPoly& p, std::string_view var) {
  if (p.is_zero()) return "0";
  std::string out;
  bool first = true;
  const auto& coeffs = p.coefficients();
  for (std::size_t k = coeffs.size(); k-- > 0;) {
    const Rational& coeff = coeffs[k];
    if (coeff == 0) continue;
    bool negative = coeff < 0;
    Rational abs_coeff = negative ? Rational(-coeff) : coeff;
    if (first)
      out += negative ? "-" : "";
    else
      out += negative ? " - " : " + ";
    std::string var_str;
    if (k >= 2)
      var_str = std::string(var) + "^" + std::to_string(k);
    else if (k == 1)
      var_str = std::string(var);
    if (var_str.empty())
      out += abs_coeff.get_str();
    else if (abs_coeff == 1)
      out += var_str;
    else
      out += abs_coeff.get_str() + "*" + var_str;
    first = false;
  }
  return out;
}

RingPtr ring_from_names(std::span<const std::string> names) {
  for (const auto& name : names) {
    if (name.empty()) throw InvalidArgument("empty variable name");
    if (!(std::isalpha(static_cast<unsigned char>(name[0])) || name[0] == '_'))
      throw InvalidArgument("variable name '" + name + "' must start with a letter or '_'");
    for (char c : name)
      if (!(std::isalnum(static_cast<unsigned char>(c)) || c == '_'))
        throw InvalidArgument("variable name '" + name + "' has an invalid character");
  }
  return make_ring(std::vector<std::string>(names.begin(), names.end()));
}

}  // namespace lndexp
