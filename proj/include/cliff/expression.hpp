#pragma once

#include <cctype>
#include <cstdio>
#include <charconv>
#include <cstddef>
#include <string>
#include <string_view>
#include <system_error>
#include <variant>

#include "cliff/errors.hpp"
#include "cliff/multivector.hpp"

// Textual Clifford expressions.
//
//   expr    := product (('+' | '-') product)*
//   product := unary ('*' unary)*
//   unary   := '-' unary | '+' unary | primary
//   primary := number | generator | '(' expr ')'
//            | T(expr) | C(expr) | H(expr) | I(expr) | Re(expr)
//            | grade(expr, integer) | top()
//   number  := digits ['/' digits] | decimal [exponent]
//   generator := 'e' digits            (1-based: e1 is generator 0)
//              | single letter a..z    (letter mode only: a is generator 0)
namespace cliff {

inline constexpr std::size_t kMaxExpressionBytes = 64 * 1024;
inline constexpr int kMaxNesting = 256;
inline constexpr int kMaxDecimalExponent = 4000;

struct ParseOptions {
  // Accept single letters a..z as generator names (binor notation).
  bool letters = false;
};

namespace detail {

enum class TokKind { Number, Ident, Plus, Minus, Star, LParen, RParen, Comma, End };

struct Token {
  TokKind kind = TokKind::End;
  std::string_view text;
  std::size_t line = 1;
  std::size_t column = 1;
};

class Lexer {
public:
  explicit Lexer(std::string_view src) : src_(src) {}

  Token next() {
    skip_space();
    Token t;
    t.line = line_;
    t.column = col_;
    if (pos_ >= src_.size())
      return t;
    const std::size_t start = pos_;
    const char c = src_[pos_];
    auto single = [&](TokKind k) {
      advance();
      t.kind = k;
      t.text = src_.substr(start, 1);
      return t;
    };
    switch (c) {
    case '+':
      return single(TokKind::Plus);
    case '-':
      return single(TokKind::Minus);
    case '*':
      return single(TokKind::Star);
    case '(':
      return single(TokKind::LParen);
    case ')':
      return single(TokKind::RParen);
    case ',':
      return single(TokKind::Comma);
    default:
      break;
    }
    if (is_digit(c) || c == '.') {
      lex_number(t);
      t.text = src_.substr(start, pos_ - start);
      return t;
    }
    if (is_alpha(c)) {
      while (pos_ < src_.size() && (is_alpha(src_[pos_]) || is_digit(src_[pos_])))
        advance();
      t.kind = TokKind::Ident;
      t.text = src_.substr(start, pos_ - start);
      return t;
    }
    throw parse_error(std::string("unexpected character '") + printable(c) + "'",
                      line_, col_);
  }

private:
  static bool is_digit(char c) { return c >= '0' && c <= '9'; }
  static bool is_alpha(char c) {
    return (c >= 'a' && c <= 'z') || (c >= 'A' && c <= 'Z') || c == '_';
  }
  static std::string printable(char c) {
    const auto u = static_cast<unsigned char>(c);
    if (u >= 0x20 && u < 0x7f)
      return std::string(1, c);
    char buf[8];
    std::snprintf(buf, sizeof(buf), "\\x%02x", u);
    return buf;
  }

  void advance() {
    if (src_[pos_] == '\n') {
      ++line_;
      col_ = 1;
    } else {
      ++col_;
    }
    ++pos_;
  }

  void skip_space() {
    while (pos_ < src_.size() &&
           (src_[pos_] == ' ' || src_[pos_] == '\t' || src_[pos_] == '\n' ||
            src_[pos_] == '\r'))
      advance();
  }

  std::size_t digits() {
    std::size_t n = 0;
    while (pos_ < src_.size() && is_digit(src_[pos_])) {
      advance();
      ++n;
    }
    return n;
  }

  void lex_number(Token &t) {
    const std::size_t line = line_, col = col_;
    t.kind = TokKind::Number;
    const std::size_t int_digits = digits();
    if (pos_ < src_.size() && src_[pos_] == '/') {
      if (int_digits == 0)
        throw parse_error("malformed rational literal", line, col);
      advance();
      if (digits() == 0)
        throw parse_error("rational literal needs a denominator", line, col);
      return;
    }
    std::size_t frac_digits = 0;
    if (pos_ < src_.size() && src_[pos_] == '.') {
      advance();
      frac_digits = digits();
    }
    if (int_digits + frac_digits == 0)
      throw parse_error("malformed number", line, col);
    if (pos_ < src_.size() && (src_[pos_] == 'e' || src_[pos_] == 'E')) {
      // Only an exponent if digits follow; "2e1" is 20, "2*e1" is a product.
      std::size_t look = pos_ + 1;
      if (look < src_.size() && (src_[look] == '+' || src_[look] == '-'))
        ++look;
      if (look < src_.size() && is_digit(src_[look])) {
        while (pos_ < look)
          advance();
        digits();
      }
    }
    if (pos_ < src_.size() && (is_alpha(src_[pos_]) || src_[pos_] == '.'))
      throw parse_error("malformed number", line, col);
  }

  std::string_view src_;
  std::size_t pos_ = 0;
  std::size_t line_ = 1;
  std::size_t col_ = 1;
};

struct NumberParts {
  std::string_view mantissa_int;
  std::string_view mantissa_frac;
  long exponent = 0;
  bool is_rational = false;
  std::string_view numerator, denominator;
  bool is_integer() const {
    return !is_rational && mantissa_frac.empty() && exponent == 0;
  }
};

inline NumberParts split_number(const Token &t) {
  NumberParts p;
  std::string_view s = t.text;
  if (auto slash = s.find('/'); slash != std::string_view::npos) {
    p.is_rational = true;
    p.numerator = s.substr(0, slash);
    p.denominator = s.substr(slash + 1);
    return p;
  }
  std::string_view mant = s;
  if (auto e = s.find_first_of("eE"); e != std::string_view::npos) {
    mant = s.substr(0, e);
    std::string_view ex = s.substr(e + 1);
    bool neg = false;
    if (!ex.empty() && (ex[0] == '+' || ex[0] == '-')) {
      neg = ex[0] == '-';
      ex.remove_prefix(1);
    }
    long v = 0;
    auto res = std::from_chars(ex.data(), ex.data() + ex.size(), v);
    if (res.ec != std::errc{} || v > kMaxDecimalExponent)
      throw parse_error("exponent out of range", t.line, t.column);
    p.exponent = neg ? -v : v;
  }
  if (auto dot = mant.find('.'); dot != std::string_view::npos) {
    p.mantissa_int = mant.substr(0, dot);
    p.mantissa_frac = mant.substr(dot + 1);
  } else {
    p.mantissa_int = mant;
  }
  return p;
}

inline bool has_decimal_point(const Token &t) {
  return t.text.find('.') != std::string_view::npos;
}

template <CoefficientRing R> R literal_value(const Token &t);

template <> inline GF2 literal_value<GF2>(const Token &t) {
  const auto p = split_number(t);
  if (!p.is_integer() || has_decimal_point(t))
    throw ring_error("literal '" + std::string(t.text) +
                     "' is not an integer and has no GF2 value (at " +
                     std::to_string(t.line) + ":" + std::to_string(t.column) + ")");
  const char last = p.mantissa_int.back();
  return GF2{((last - '0') & 1) != 0};
}

inline boost::multiprecision::cpp_int parse_big_int(std::string_view digits) {
  boost::multiprecision::cpp_int v = 0;
  for (char c : digits)
    v = v * 10 + (c - '0');
  return v;
}

template <> inline Rational literal_value<Rational>(const Token &t) {
  using boost::multiprecision::cpp_int;
  const auto p = split_number(t);
  if (p.is_rational) {
    const cpp_int den = parse_big_int(p.denominator);
    if (den == 0)
      throw parse_error("zero denominator", t.line, t.column);
    return Rational(parse_big_int(p.numerator), den);
  }
  std::string digits(p.mantissa_int);
  digits += p.mantissa_frac;
  cpp_int mant = parse_big_int(digits);
  long exp10 = p.exponent - static_cast<long>(p.mantissa_frac.size());
  const cpp_int scale =
      boost::multiprecision::pow(cpp_int(10), static_cast<unsigned>(exp10 < 0 ? -exp10 : exp10));
  return exp10 >= 0 ? Rational(mant * scale) : Rational(mant, scale);
}

template <> inline double literal_value<double>(const Token &t) {
  const auto p = split_number(t);
  auto to_double = [&](std::string_view s) {
    double v = 0;
    auto res = std::from_chars(s.data(), s.data() + s.size(), v);
    if (res.ec != std::errc{} || res.ptr != s.data() + s.size())
      throw parse_error("number out of range", t.line, t.column);
    return v;
  };
  if (p.is_rational) {
    const double den = to_double(p.denominator);
    if (den == 0.0)
      throw parse_error("zero denominator", t.line, t.column);
    return to_double(p.numerator) / den;
  }
  return to_double(t.text);
}

template <CoefficientRing R> class Parser {
public:
  Parser(std::string_view text, const Signature &sig, ParseOptions opts)
      : lex_(text), sig_(sig), opts_(opts) {
    cur_ = lex_.next();
  }

  Multivector<R> parse() {
    auto v = expr(0);
    if (cur_.kind != TokKind::End)
      fail("unexpected '" + std::string(cur_.text) + "'");
    return v;
  }

private:
  using MV = Multivector<R>;

  [[noreturn]] void fail(const std::string &msg) const {
    throw parse_error(msg, cur_.line, cur_.column);
  }

  void bump() { cur_ = lex_.next(); }

  void expect(TokKind k, const char *what) {
    if (cur_.kind != k)
      fail(std::string("expected ") + what);
    bump();
  }

  void enter(int depth) const {
    if (depth > kMaxNesting)
      fail("expression nested too deeply");
  }

  MV expr(int depth) {
    enter(depth);
    MV acc = product(depth + 1);
    while (cur_.kind == TokKind::Plus || cur_.kind == TokKind::Minus) {
      const bool minus = cur_.kind == TokKind::Minus;
      bump();
      MV rhs = product(depth + 1);
      if (minus)
        acc -= rhs;
      else
        acc += rhs;
    }
    return acc;
  }

  MV product(int depth) {
    MV acc = unary(depth + 1);
    while (cur_.kind == TokKind::Star) {
      bump();
      acc = gp(acc, unary(depth + 1));
    }
    return acc;
  }

  MV unary(int depth) {
    enter(depth);
    if (cur_.kind == TokKind::Minus) {
      bump();
      return -unary(depth + 1);
    }
    if (cur_.kind == TokKind::Plus) {
      bump();
      return unary(depth + 1);
    }
    return primary(depth + 1);
  }

  MV primary(int depth) {
    enter(depth);
    switch (cur_.kind) {
    case TokKind::Number: {
      MV v = MV::scalar(sig_, literal_value<R>(cur_));
      bump();
      return v;
    }
    case TokKind::LParen: {
      bump();
      MV v = expr(depth + 1);
      expect(TokKind::RParen, "')'");
      return v;
    }
    case TokKind::Ident:
      return identifier(depth);
    case TokKind::End:
      fail("unexpected end of input");
    default:
      fail("unexpected '" + std::string(cur_.text) + "'");
    }
  }

  MV call_arg(int depth) {
    expect(TokKind::LParen, "'('");
    MV v = expr(depth + 1);
    return v;
  }

  MV identifier(int depth) {
    const Token tok = cur_;
    const std::string_view name = tok.text;
    bump();
    const bool is_call = cur_.kind == TokKind::LParen;
    if (is_call) {
      if (name == "T" || name == "C" || name == "H" || name == "I") {
        MV v = call_arg(depth);
        expect(TokKind::RParen, "')'");
        return involution(v, parse_four_group(name));
      }
      if (name == "Re") {
        MV v = call_arg(depth);
        expect(TokKind::RParen, "')'");
        return MV::scalar(sig_, scalar_part(v));
      }
      if (name == "grade") {
        MV v = call_arg(depth);
        expect(TokKind::Comma, "','");
        if (cur_.kind != TokKind::Number)
          fail("grade needs an integer literal");
        int g = 0;
        auto res = std::from_chars(cur_.text.data(),
                                   cur_.text.data() + cur_.text.size(), g);
        if (res.ec != std::errc{} || res.ptr != cur_.text.data() + cur_.text.size())
          fail("grade needs a non-negative integer literal");
        bump();
        expect(TokKind::RParen, "')'");
        return grade_project(v, g);
      }
      if (name == "top") {
        bump();
        expect(TokKind::RParen, "')'");
        return top<R>(sig_);
      }
    }
    return MV::generator(sig_, generator_index(tok));
  }

  std::size_t generator_index(const Token &tok) const {
    const std::string_view name = tok.text;
    std::size_t idx = 0;
    if (name.size() >= 2 && name[0] == 'e') {
      std::size_t v = 0;
      auto res = std::from_chars(name.data() + 1, name.data() + name.size(), v);
      if (res.ec != std::errc{} || res.ptr != name.data() + name.size() || v == 0)
        throw parse_error("unknown generator '" + std::string(name) + "'",
                          tok.line, tok.column);
      idx = v - 1;
    } else if (opts_.letters && name.size() == 1 && name[0] >= 'a' &&
               name[0] <= 'z') {
      idx = static_cast<std::size_t>(name[0] - 'a');
    } else {
      throw parse_error("unknown identifier '" + std::string(name) + "'",
                        tok.line, tok.column);
    }
    if (idx >= sig_.size())
      throw parse_error("generator '" + std::string(name) +
                            "' outside signature of size " +
                            std::to_string(sig_.size()),
                        tok.line, tok.column);
    return idx;
  }

  Lexer lex_;
  Token cur_;
  const Signature &sig_;
  ParseOptions opts_;
};

} // namespace detail

template <CoefficientRing R>
Multivector<R> parse_expression(std::string_view text, const Signature &sig,
                                ParseOptions opts = {}) {
  if (text.size() > kMaxExpressionBytes)
    throw parse_error("expression longer than 64 KiB", 1, 1);
  if (sig.size() > kMaxBladeGenerators)
    throw bound_error("signature too large for expressions");
  return detail::Parser<R>(text, sig, opts).parse();
}

using AnyMultivector =
    std::variant<Multivector<GF2>, Multivector<Rational>, Multivector<double>>;

inline AnyMultivector parse_expression(std::string_view text, RingTag ring,
                                       const Signature &sig,
                                       ParseOptions opts = {}) {
  switch (ring) {
  case RingTag::GF2:
    return parse_expression<GF2>(text, sig, opts);
  case RingTag::ExactRational:
    return parse_expression<Rational>(text, sig, opts);
  case RingTag::Float64:
    return parse_expression<double>(text, sig, opts);
  }
  throw config_error("unknown ring");
}

inline std::string blade_name(Blade b) {
  std::string s;
  for (auto i : b.members()) {
    if (!s.empty())
      s += '*';
    s += 'e' + std::to_string(i + 1);
  }
  return s;
}

// Canonical text: terms in ascending blade bitmask order, exact coefficients.
template <CoefficientRing R> std::string print_expression(const Multivector<R> &x) {
  using traits = ring_traits<R>;
  if (x.is_zero())
    return "0";
  std::string out;
  bool first = true;
  for (const auto &[b, c] : x.terms()) {
    std::string coeff = traits::to_string(c);
    bool negative = !coeff.empty() && coeff[0] == '-';
    if (negative)
      coeff.erase(0, 1);
    std::string term;
    if (b.is_scalar())
      term = coeff;
    else if (coeff == "1")
      term = blade_name(b);
    else
      term = coeff + "*" + blade_name(b);
    if (first)
      out += negative ? "-" + term : term;
    else
      out += (negative ? " - " : " + ") + term;
    first = false;
  }
  return out;
}

inline std::string print_expression(const AnyMultivector &x) {
  return std::visit([](const auto &m) { return print_expression(m); }, x);
}

} // namespace cliff
