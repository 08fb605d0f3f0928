#include "colpart/algebra/rational.hpp"

#include <cctype>

#include "colpart/errors.hpp"

namespace colpart {

BigRational make_rational(const BigInt& num, const BigInt& den) {
  if (den == 0) throw DivisionByZero("rational with zero denominator");
  BigRational q(num, den);
  q.canonicalize();
  return q;
}

std::string to_fraction_string(const BigRational& q) {
  return q.get_num().get_str() + "/" + q.get_den().get_str();
}

namespace {

BigInt parse_integer(const std::string& text, std::size_t offset) {
  std::size_t i = 0;
  if (i < text.size() && (text[i] == '-' || text[i] == '+')) ++i;
  if (i == text.size()) throw ParseError("expected digits", offset + i);
  for (; i < text.size(); ++i) {
    if (!std::isdigit(static_cast<unsigned char>(text[i]))) {
      throw ParseError("unexpected character '" + std::string(1, text[i]) + "'", offset + i);
    }
  }
  std::string digits = text;
  if (!digits.empty() && digits[0] == '+') digits.erase(0, 1);
  return BigInt(digits, 10);
}

}  // namespace

BigRational parse_fraction(const std::string& text) {
  const auto slash = text.find('/');
  if (slash == std::string::npos) return BigRational(parse_integer(text, 0));
  BigInt num = parse_integer(text.substr(0, slash), 0);
  BigInt den = parse_integer(text.substr(slash + 1), slash + 1);
  return make_rational(num, den);
}

std::string to_decimal_string(const BigRational& q, unsigned digits) {
  const BigInt scale = pow_int(10, digits);
  BigInt num = abs(q.get_num()) * scale;
  BigInt quot = num / q.get_den();
  const BigInt rem = num - quot * q.get_den();
  if (2 * rem >= q.get_den()) ++quot;
  std::string body = quot.get_str();
  if (body.size() <= digits) body.insert(0, digits + 1 - body.size(), '0');
  std::string out = (q < 0 && quot != 0) ? "-" : "";
  out += body.substr(0, body.size() - digits);
  if (digits > 0) out += "." + body.substr(body.size() - digits);
  return out;
}

BigInt pow_int(const BigInt& base, unsigned long exponent) {
  BigInt r;
  mpz_pow_ui(r.get_mpz_t(), base.get_mpz_t(), exponent);
  return r;
}

BigRational pow_rational(const BigRational& base, long exponent) {
  if (exponent < 0) {
    if (base == 0) throw DivisionByZero("zero raised to a negative power");
    BigRational inv = 1 / base;
    return pow_rational(inv, -exponent);
  }
  const auto e = static_cast<unsigned long>(exponent);
  return make_rational(pow_int(base.get_num(), e), pow_int(base.get_den(), e));
}

}  // namespace colpart
