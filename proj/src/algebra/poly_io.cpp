#include "colpart/algebra/poly_io.hpp"

#include <cctype>
#include <string>

#include "colpart/errors.hpp"

namespace colpart {

nlohmann::json poly_to_json(const LaurentPoly2& p) {
  nlohmann::json j = nlohmann::json::object();
  for (const auto& [mono, c] : p.terms()) {
    j[std::to_string(mono.x) + "," + std::to_string(mono.y)] = to_fraction_string(c);
  }
  return j;
}

LaurentPoly2 poly_from_json(const nlohmann::json& j) {
  if (!j.is_object()) throw ParseError("polynomial JSON must be an object", 0);
  LaurentPoly2 p;
  for (const auto& [key, value] : j.items()) {
    const auto comma = key.find(',');
    if (comma == std::string::npos || !value.is_string()) throw ParseError("bad polynomial term '" + key + "'", 0);
    int xe = 0;
    int ye = 0;
    try {
      std::size_t used = 0;
      xe = std::stoi(key.substr(0, comma), &used);
      if (used != comma) throw std::invalid_argument("x");
      const std::string tail = key.substr(comma + 1);
      ye = std::stoi(tail, &used);
      if (used != tail.size()) throw std::invalid_argument("y");
    } catch (const std::exception&) {
      throw ParseError("bad exponent key '" + key + "'", 0);
    }
    p.add_term(Monomial{xe, ye}, parse_fraction(value.get<std::string>()));
  }
  return p;
}

namespace {

class PolyParser {
 public:
  PolyParser(std::string_view text, const std::map<char, long>& bindings) : text_(text), bindings_(bindings) {}

  LaurentPoly2 parse() {
    LaurentPoly2 p = expr();
    skip_ws();
    if (pos_ != text_.size()) fail("unexpected character '" + std::string(1, text_[pos_]) + "'");
    return p;
  }

 private:
  [[noreturn]] void fail(const std::string& what) const { throw ParseError(what, pos_); }

  void skip_ws() {
    while (pos_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[pos_]))) ++pos_;
  }

  char peek() {
    skip_ws();
    return pos_ < text_.size() ? text_[pos_] : '\0';
  }

  LaurentPoly2 expr() {
    LaurentPoly2 acc;
    bool negate = false;
    if (peek() == '+' || peek() == '-') negate = text_[pos_++] == '-';
    acc = term();
    if (negate) acc = -acc;
    while (peek() == '+' || peek() == '-') {
      const bool minus = text_[pos_++] == '-';
      LaurentPoly2 t = term();
      if (minus) acc -= t; else acc += t;
    }
    return acc;
  }

  static bool starts_atom(char c) {
    return std::isdigit(static_cast<unsigned char>(c)) || std::isalpha(static_cast<unsigned char>(c)) || c == '(';
  }

  LaurentPoly2 term() {
    LaurentPoly2 acc = power();
    for (;;) {
      const char c = peek();
      if (c == '*') {
        ++pos_;
        acc *= power();
      } else if (c == '/') {
        ++pos_;
        const std::size_t at = pos_;
        LaurentPoly2 d = power();
        if (d.size() != 1) throw ParseError("can only divide by a single term", at);
        const auto& [mono, coeff] = *d.terms().begin();
        if (mono.x != 0) throw ParseError("cannot divide by a power of x", at);
        acc = acc.shifted(0, -mono.y).scaled(1 / coeff);
      } else if (starts_atom(c)) {
        acc *= power();
      } else {
        return acc;
      }
    }
  }

  LaurentPoly2 power() {
    LaurentPoly2 base = atom();
    if (peek() != '^') return base;
    ++pos_;
    bool negative = false;
    if (peek() == '-') {
      negative = true;
      ++pos_;
    }
    const std::size_t at = pos_;
    const long e = integer();
    if (!negative) return poly_pow(base, static_cast<unsigned>(e));
    if (base.size() != 1) throw ParseError("negative power of a non-monomial", at);
    const auto& [mono, coeff] = *base.terms().begin();
    if (mono.x != 0) throw ParseError("negative power of x", at);
    return LaurentPoly2::monomial(pow_rational(coeff, -e), 0, -mono.y * static_cast<int>(e));
  }

  long integer() {
    skip_ws();
    const std::size_t start = pos_;
    while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_]))) ++pos_;
    if (start == pos_) fail("expected integer");
    return std::stol(std::string(text_.substr(start, pos_ - start)));
  }

  LaurentPoly2 atom() {
    const char c = peek();
    if (std::isdigit(static_cast<unsigned char>(c))) {
      const std::size_t start = pos_;
      while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_]))) ++pos_;
      return LaurentPoly2(BigRational(BigInt(std::string(text_.substr(start, pos_ - start)), 10)));
    }
    if (c == '(') {
      ++pos_;
      LaurentPoly2 inner = expr();
      if (peek() != ')') fail("expected ')'");
      ++pos_;
      return inner;
    }
    if (c == 'x') {
      ++pos_;
      return LaurentPoly2::x();
    }
    if (c == 'y') {
      ++pos_;
      return LaurentPoly2::y();
    }
    if (std::isalpha(static_cast<unsigned char>(c))) {
      const auto it = bindings_.find(c);
      if (it == bindings_.end()) fail("unbound variable '" + std::string(1, c) + "'");
      ++pos_;
      return LaurentPoly2(it->second);
    }
    if (c == '\0') fail("unexpected end of input");
    fail("unexpected character '" + std::string(1, c) + "'");
  }

  std::string_view text_;
  const std::map<char, long>& bindings_;
  std::size_t pos_ = 0;
};

}  // namespace

LaurentPoly2 parse_poly(std::string_view text, const std::map<char, long>& bindings) {
  return PolyParser(text, bindings).parse();
}

}  // namespace colpart
