#include "adkit/poly_parse.hpp"

#include <cctype>

namespace adkit {
namespace {

class Parser {
public:
  explicit Parser(std::string_view text) : s_(text) {}

  Poly parse_expr() {
    skip_ws();
    Poly out;
    bool first = true;
    while (true) {
      skip_ws();
      Rational sign(1);
      if (peek() == '+' || peek() == '-') {
        if (peek() == '-') sign = Rational(-1);
        ++pos_;
        skip_ws();
      } else if (!first) {
        break;
      }
      out += parse_term() * sign;
      first = false;
      skip_ws();
      if (pos_ >= s_.size()) break;
      if (peek() != '+' && peek() != '-') error("expected '+', '-' or end of input");
    }
    return out;
  }

  void expect_end() {
    skip_ws();
    if (pos_ < s_.size()) error("unexpected character '" + std::string(1, s_[pos_]) + "'");
  }

  std::size_t pos() const { return pos_; }

private:
  Poly parse_term() {
    skip_ws();
    Poly t;
    if (std::isdigit(static_cast<unsigned char>(peek()))) {
      t = Poly(parse_rational());
    } else if (std::isalpha(static_cast<unsigned char>(peek()))) {
      t = parse_factor();
    } else if (pos_ >= s_.size()) {
      error("unexpected end of input, expected a term");
    } else {
      error("unexpected character '" + std::string(1, peek()) + "', expected a term");
    }
    while (true) {
      skip_ws();
      if (peek() != '*') break;
      ++pos_;
      skip_ws();
      if (!std::isalpha(static_cast<unsigned char>(peek()))) error("expected an indeterminate after '*'");
      t *= parse_factor();
    }
    return t;
  }

  Rational parse_rational() {
    std::size_t start = pos_;
    mpz_class num = parse_integer();
    skip_ws();
    if (peek() != '/') return Rational(num);
    ++pos_;
    skip_ws();
    if (!std::isdigit(static_cast<unsigned char>(peek()))) error("expected a positive integer denominator");
    mpz_class den = parse_integer();
    if (den == 0) throw ParseError("division by zero in literal", start);
    return Rational(num, den);
  }

  mpz_class parse_integer() {
    std::size_t start = pos_;
    while (std::isdigit(static_cast<unsigned char>(peek()))) ++pos_;
    return mpz_class(std::string(s_.substr(start, pos_ - start)), 10);
  }

  Poly parse_factor() {
    std::size_t start = pos_;
    while (std::isalnum(static_cast<unsigned char>(peek()))) ++pos_;
    std::string_view name = s_.substr(start, pos_ - start);
    auto var = param_from_name(name);
    if (!var) throw ParseError("unknown indeterminate '" + std::string(name) + "'", start);
    skip_ws();
    unsigned exp = 1;
    if (peek() == '^') {
      ++pos_;
      skip_ws();
      std::size_t epos = pos_;
      if (!std::isdigit(static_cast<unsigned char>(peek()))) error("expected a positive integer exponent");
      mpz_class e = parse_integer();
      if (e <= 0 || e > 64) throw ParseError("exponent must be a positive integer no larger than 64", epos);
      exp = static_cast<unsigned>(e.get_ui());
    }
    return Poly::term(Rational(1), Monomial::of(*var, exp));
  }

  char peek() const { return pos_ < s_.size() ? s_[pos_] : '\0'; }
  void skip_ws() {
    while (pos_ < s_.size() && std::isspace(static_cast<unsigned char>(s_[pos_]))) ++pos_;
  }
  [[noreturn]] void error(const std::string& msg) const { throw ParseError(msg, pos_); }

  std::string_view s_;
  std::size_t pos_ = 0;
};

} // namespace

Poly parse_poly(std::string_view text) {
  Parser p(text);
  Poly out = p.parse_expr();
  p.expect_end();
  return out;
}

std::map<Var, Poly> parse_substitution(std::string_view text) {
  std::map<Var, Poly> out;
  std::size_t offset = 0;
  while (offset <= text.size()) {
    std::size_t comma = text.find(',', offset);
    std::string_view item = text.substr(offset, comma == std::string_view::npos ? std::string_view::npos : comma - offset);
    std::size_t eq = item.find('=');
    if (eq == std::string_view::npos) throw ParseError("expected name=value", offset);
    std::string name;
    for (char c : item.substr(0, eq))
      if (!std::isspace(static_cast<unsigned char>(c))) name += c;
    auto var = param_from_name(name);
    if (!var) throw ParseError("unknown indeterminate '" + name + "'", offset);
    if (out.count(*var)) throw ParseError("duplicate assignment for '" + name + "'", offset);
    try {
      out.emplace(*var, parse_poly(item.substr(eq + 1)));
    } catch (const ParseError& e) {
      throw ParseError(std::string("in value of '") + name + "': " + e.what(), offset + eq + 1 + e.position);
    }
    if (comma == std::string_view::npos) break;
    offset = comma + 1;
  }
  return out;
}

Assignment parse_assignment(std::string_view text) {
  Assignment out;
  for (const auto& [v, p] : parse_substitution(text)) {
    auto c = p.constant_value();
    if (!c) throw ParseError("value of '" + var_name(v) + "' must be a rational constant", 0);
    out.emplace(v, *c);
  }
  return out;
}

} // namespace adkit
