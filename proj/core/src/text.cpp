#include "bw/text.hpp"

#include <cctype>
#include <string>

#include "bw/error.hpp"

namespace bw {

namespace {

class Parser {
 public:
  explicit Parser(std::string_view text) : text_(text) {}

  Fraction parse() {
    Fraction f = expr();
    skip_space();
    if (pos_ != text_.size()) fail("unexpected character");
    return f;
  }

 private:
  [[noreturn]] void fail(const std::string& what) const {
    throw Error(ErrorCode::ParseError,
                what + " at offset " + std::to_string(pos_) + " in '" + std::string(text_) + "'");
  }

  void skip_space() {
    while (pos_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[pos_]))) ++pos_;
  }

  char peek() {
    skip_space();
    return pos_ < text_.size() ? text_[pos_] : '\0';
  }

  bool starts_atom(char c) const {
    return std::isdigit(static_cast<unsigned char>(c)) || c == 'x' || c == 'y' || c == 'z' ||
           c == '(';
  }

  static Fraction add(const Fraction& a, const Fraction& b, bool subtract) {
    if (a.denominator == b.denominator) {
      return {subtract ? a.numerator - b.numerator : a.numerator + b.numerator, a.denominator};
    }
    Poly lhs = a.numerator * b.denominator;
    Poly rhs = b.numerator * a.denominator;
    return {subtract ? lhs - rhs : lhs + rhs, a.denominator * b.denominator};
  }

  Fraction expr() {
    bool negate = false;
    if (peek() == '+' || peek() == '-') {
      negate = text_[pos_] == '-';
      ++pos_;
    }
    Fraction acc = term();
    if (negate) acc.numerator = -acc.numerator;
    for (;;) {
      const char c = peek();
      if (c != '+' && c != '-') break;
      ++pos_;
      acc = add(acc, term(), c == '-');
    }
    return acc;
  }

  Fraction term() {
    Fraction acc = power();
    for (;;) {
      const char c = peek();
      if (c == '*') {
        ++pos_;
        Fraction rhs = power();
        acc = {acc.numerator * rhs.numerator, acc.denominator * rhs.denominator};
      } else if (c == '/') {
        ++pos_;
        Fraction rhs = power();
        if (rhs.numerator.is_zero()) fail("division by zero");
        acc = {acc.numerator * rhs.denominator, acc.denominator * rhs.numerator};
      } else if (starts_atom(c)) {
        Fraction rhs = power();
        acc = {acc.numerator * rhs.numerator, acc.denominator * rhs.denominator};
      } else {
        break;
      }
    }
    return acc;
  }

  Fraction power() {
    Fraction base = atom();
    if (peek() == '^') {
      ++pos_;
      skip_space();
      const std::string digits = integer();
      if (digits.empty()) fail("expected exponent");
      if (digits.size() > 4) fail("exponent too large");
      const auto n = static_cast<unsigned>(std::stoul(digits));
      base = {pow(base.numerator, n), pow(base.denominator, n)};
    }
    return base;
  }

  std::string integer() {
    const std::size_t start = pos_;
    while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_]))) ++pos_;
    return std::string(text_.substr(start, pos_ - start));
  }

  Fraction atom() {
    const char c = peek();
    if (std::isdigit(static_cast<unsigned char>(c))) {
      const std::string digits = integer();
      if (pos_ < text_.size() && (text_[pos_] == '.' || text_[pos_] == 'e')) {
        fail("floating-point literals are not supported");
      }
      return {Poly(Rat(mpz_class(digits))), Poly(1)};
    }
    if (c == 'x' || c == 'y' || c == 'z') {
      ++pos_;
      const Var v = c == 'x' ? Var::X : (c == 'y' ? Var::Y : Var::Z);
      if (pos_ < text_.size() && std::isalnum(static_cast<unsigned char>(text_[pos_])) &&
          !std::isdigit(static_cast<unsigned char>(text_[pos_])) && text_[pos_] != 'x' &&
          text_[pos_] != 'y' && text_[pos_] != 'z') {
        fail("unknown identifier");
      }
      return {Poly::var(v), Poly(1)};
    }
    if (c == '(') {
      ++pos_;
      Fraction inner = expr();
      if (peek() != ')') fail("expected ')'");
      ++pos_;
      return inner;
    }
    if (c == '\0') fail("unexpected end of input");
    fail(std::string("unexpected '") + c + "'");
  }

  std::string_view text_;
  std::size_t pos_ = 0;
};

}  // namespace

Fraction parse_fraction(std::string_view text) { return Parser(text).parse(); }

Poly parse_poly(std::string_view text, MonomialOrder order) {
  Fraction f = parse_fraction(text);
  if (!f.denominator.is_constant()) {
    throw Error(ErrorCode::ParseError,
                "non-constant denominator in polynomial '" + std::string(text) + "'");
  }
  return (f.numerator * (Rat(1) / f.denominator.constant_term())).with_order(order);
}

std::string to_string(const Rat& r) {
  // mpq_class::get_str gives "p" or "p/q" for a canonical value.
  return r.get_str();
}

std::string to_string(const Poly& p) {
  if (p.is_zero()) return "0";
  std::string out;
  bool first = true;
  for (const auto& t : p.terms()) {
    Rat c = t.coeff;
    if (first) {
      if (c < 0) {
        out += '-';
        c = -c;
      }
    } else {
      out += c < 0 ? " - " : " + ";
      if (c < 0) c = -c;
    }
    first = false;
    std::string mono;
    for (Var v : {Var::X, Var::Y, Var::Z}) {
      const auto e = t.mono[v];
      if (e == 0) continue;
      if (!mono.empty()) mono += '*';
      mono += var_name(v);
      if (e > 1) mono += '^' + std::to_string(e);
    }
    if (mono.empty()) {
      out += to_string(c);
    } else if (c == 1) {
      out += mono;
    } else {
      out += to_string(c) + '*' + mono;
    }
  }
  return out;
}

}  // namespace bw
