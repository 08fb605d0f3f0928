#include "colpart/algebra/laurent_poly.hpp"

#include <algorithm>
#include <limits>
#include <sstream>

#include "colpart/errors.hpp"

namespace colpart {

LaurentPoly2::LaurentPoly2(const BigRational& constant) {
  if (constant != 0) terms_.emplace(Monomial{0, 0}, constant);
}

LaurentPoly2::LaurentPoly2(long constant) {
  if (constant != 0) terms_.emplace(Monomial{0, 0}, BigRational(constant));
}

LaurentPoly2 LaurentPoly2::monomial(const BigRational& coeff, int x_exp, int y_exp) {
  if (x_exp < 0) throw InvalidArgument("negative x exponent");
  LaurentPoly2 p;
  if (coeff != 0) p.terms_.emplace(Monomial{x_exp, y_exp}, coeff);
  return p;
}

BigRational LaurentPoly2::coeff(int x_exp, int y_exp) const {
  const auto it = terms_.find(Monomial{x_exp, y_exp});
  return it == terms_.end() ? BigRational(0) : it->second;
}

LaurentPoly2 LaurentPoly2::x_coeff(int x_exp) const {
  LaurentPoly2 out;
  auto it = terms_.lower_bound(Monomial{x_exp, std::numeric_limits<int>::min()});
  for (; it != terms_.end() && it->first.x == x_exp; ++it) {
    out.terms_.emplace_hint(out.terms_.end(), Monomial{0, it->first.y}, it->second);
  }
  return out;
}

int LaurentPoly2::x_degree() const {
  return terms_.empty() ? -1 : terms_.rbegin()->first.x;
}

int LaurentPoly2::min_y_exp() const {
  if (terms_.empty()) return 0;
  int m = std::numeric_limits<int>::max();
  for (const auto& [mono, c] : terms_) m = std::min(m, mono.y);
  return m;
}

int LaurentPoly2::max_y_exp() const {
  if (terms_.empty()) return 0;
  int m = std::numeric_limits<int>::min();
  for (const auto& [mono, c] : terms_) m = std::max(m, mono.y);
  return m;
}

int LaurentPoly2::total_degree() const {
  int d = std::numeric_limits<int>::min();
  for (const auto& [mono, c] : terms_) d = std::max(d, mono.x + mono.y);
  return terms_.empty() ? 0 : d;
}

const LaurentPoly2::TermMap::value_type& LaurentPoly2::leading_term() const {
  if (terms_.empty()) throw InvalidArgument("leading term of zero polynomial");
  return *terms_.rbegin();
}

LaurentPoly2 LaurentPoly2::shifted(int dx, int dy) const {
  LaurentPoly2 out;
  for (const auto& [mono, c] : terms_) {
    if (mono.x + dx < 0) throw InvalidArgument("shift produces negative x exponent");
    out.terms_.emplace_hint(out.terms_.end(), Monomial{mono.x + dx, mono.y + dy}, c);
  }
  return out;
}

LaurentPoly2 LaurentPoly2::scaled(const BigRational& c) const {
  if (c == 0) return {};
  LaurentPoly2 out = *this;
  for (auto& [mono, v] : out.terms_) v *= c;
  return out;
}

void LaurentPoly2::add_term(const Monomial& m, const BigRational& c) {
  if (c == 0) return;
  if (m.x < 0) throw InvalidArgument("negative x exponent");
  auto [it, inserted] = terms_.try_emplace(m, c);
  if (!inserted) {
    it->second += c;
    if (it->second == 0) terms_.erase(it);
  }
}

void LaurentPoly2::add_shifted(const LaurentPoly2& src, int dx, int dy) {
  for (const auto& [mono, c] : src.terms_) add_term(Monomial{mono.x + dx, mono.y + dy}, c);
}

LaurentPoly2& LaurentPoly2::operator+=(const LaurentPoly2& rhs) {
  for (const auto& [mono, c] : rhs.terms_) add_term(mono, c);
  return *this;
}

LaurentPoly2& LaurentPoly2::operator-=(const LaurentPoly2& rhs) {
  for (const auto& [mono, c] : rhs.terms_) add_term(mono, -c);
  return *this;
}

LaurentPoly2 operator*(const LaurentPoly2& a, const LaurentPoly2& b) {
  LaurentPoly2 out;
  BigRational prod;
  for (const auto& [ma, ca] : a.terms_) {
    for (const auto& [mb, cb] : b.terms_) {
      prod = ca * cb;
      out.add_term(Monomial{ma.x + mb.x, ma.y + mb.y}, prod);
    }
  }
  return out;
}

LaurentPoly2& LaurentPoly2::operator*=(const LaurentPoly2& rhs) {
  *this = *this * rhs;
  return *this;
}

LaurentPoly2 LaurentPoly2::operator-() const {
  LaurentPoly2 out = *this;
  for (auto& [mono, c] : out.terms_) c = -c;
  return out;
}

LaurentPoly2 poly_add(const LaurentPoly2& a, const LaurentPoly2& b) { return a + b; }

LaurentPoly2 poly_mul(const LaurentPoly2& a, const LaurentPoly2& b) { return a * b; }

LaurentPoly2 poly_pow(const LaurentPoly2& a, unsigned exponent) {
  LaurentPoly2 result(1);
  LaurentPoly2 base = a;
  while (exponent > 0) {
    if (exponent & 1U) result *= base;
    exponent >>= 1U;
    if (exponent > 0) base *= base;
  }
  return result;
}

LaurentPoly2 poly_derivative_y(const LaurentPoly2& a) {
  LaurentPoly2 out;
  for (const auto& [mono, c] : a.terms()) {
    if (mono.y == 0) continue;
    out.add_term(Monomial{mono.x, mono.y - 1}, c * mono.y);
  }
  return out;
}

BigRational poly_eval(const LaurentPoly2& a, const BigRational& x0, const BigRational& y0) {
  BigRational sum = 0;
  for (const auto& [mono, c] : a.terms()) {
    if (mono.y < 0 && y0 == 0) throw DivisionByZero("evaluating negative power of y at y = 0");
    sum += c * pow_rational(x0, mono.x) * pow_rational(y0, mono.y);
  }
  return sum;
}

LaurentPoly2 poly_eval_y(const LaurentPoly2& a, const BigRational& y0) {
  LaurentPoly2 out;
  for (const auto& [mono, c] : a.terms()) {
    if (mono.y < 0 && y0 == 0) throw DivisionByZero("evaluating negative power of y at y = 0");
    out.add_term(Monomial{mono.x, 0}, c * pow_rational(y0, mono.y));
  }
  return out;
}

LaurentPoly2 exact_divide(const LaurentPoly2& a, const LaurentPoly2& b) {
  if (b.is_zero()) throw InvalidArgument("division by the zero polynomial");
  if (a.is_zero()) return {};
  // Normalize to ordinary polynomials not divisible by y; the y-adic
  // valuation is additive, so the quotient is then a polynomial too.
  const int sa = a.min_y_exp();
  const int sb = b.min_y_exp();
  LaurentPoly2 rem = a.shifted(0, -sa);
  const LaurentPoly2 div = b.shifted(0, -sb);
  const auto [lead_mono, lead_coeff] = div.leading_term();

  LaurentPoly2 quot;
  while (!rem.is_zero()) {
    const auto [mono, c] = rem.leading_term();
    const int qx = mono.x - lead_mono.x;
    const int qy = mono.y - lead_mono.y;
    if (qx < 0 || qy < 0) throw InvalidArgument("polynomial division is not exact");
    const BigRational qc = c / lead_coeff;
    quot.add_term(Monomial{qx, qy}, qc);
    for (const auto& [dm, dc] : div.terms()) {
      rem.add_term(Monomial{dm.x + qx, dm.y + qy}, -qc * dc);
    }
  }
  return quot.shifted(0, sa - sb);
}

std::string to_string(const LaurentPoly2& p) {
  if (p.is_zero()) return "0";
  std::ostringstream os;
  bool first = true;
  // Descending lex order reads naturally: highest x power first.
  for (auto it = p.terms().rbegin(); it != p.terms().rend(); ++it) {
    const auto& [mono, c] = *it;
    BigRational mag = abs(c);
    if (first) {
      if (c < 0) os << "-";
    } else {
      os << (c < 0 ? " - " : " + ");
    }
    first = false;
    const bool unit = mono.x == 0 && mono.y == 0;
    bool need_star = false;
    if (mag != 1 || unit) {
      os << mag.get_str();
      need_star = true;
    }
    auto emit = [&](char var, int e) {
      if (e == 0) return;
      if (need_star) os << "*";
      os << var;
      if (e != 1) os << "^" << e;
      need_star = true;
    };
    emit('x', mono.x);
    emit('y', mono.y);
  }
  return os.str();
}

}  // namespace colpart
