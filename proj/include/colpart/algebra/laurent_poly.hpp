#pragma once

#include <compare>
#include <map>
#include <string>

#include "colpart/algebra/rational.hpp"

namespace colpart {

/// Exponent pair of a monomial x^x * y^y. x is never negative.
struct Monomial {
  int x = 0;
  int y = 0;

  friend auto operator<=>(const Monomial&, const Monomial&) = default;
  friend bool operator==(const Monomial&, const Monomial&) = default;
};

/// Sparse polynomial in x (nonnegative exponents) and y (any integer
/// exponent) with exact rational coefficients.
///
/// Terms are kept in a map ordered lexicographically by (x, y); zero
/// coefficients are never stored, so structural equality is mathematical
/// equality.
class LaurentPoly2 {
 public:
  using TermMap = std::map<Monomial, BigRational>;

  LaurentPoly2() = default;
  LaurentPoly2(const BigRational& constant);  // NOLINT(google-explicit-constructor)
  LaurentPoly2(long constant);                // NOLINT
  LaurentPoly2(int constant) : LaurentPoly2(static_cast<long>(constant)) {}  // NOLINT

  static LaurentPoly2 monomial(const BigRational& coeff, int x_exp, int y_exp);
  static LaurentPoly2 x() { return monomial(1, 1, 0); }
  static LaurentPoly2 y() { return monomial(1, 0, 1); }

  const TermMap& terms() const noexcept { return terms_; }
  bool is_zero() const noexcept { return terms_.empty(); }
  std::size_t size() const noexcept { return terms_.size(); }

  BigRational coeff(int x_exp, int y_exp) const;

  /// [x^x_exp] as a polynomial in y alone.
  LaurentPoly2 x_coeff(int x_exp) const;

  /// Highest x exponent, or -1 for the zero polynomial.
  int x_degree() const;
  /// Extremes of the y exponents; 0 for the zero polynomial.
  int min_y_exp() const;
  int max_y_exp() const;
  /// Maximum of x + y over the terms; used for pivot selection.
  int total_degree() const;

  /// Leading term in lex order (x first, then y). Precondition: nonzero.
  const TermMap::value_type& leading_term() const;

  /// Multiplies by x^dx * y^dy.
  LaurentPoly2 shifted(int dx, int dy) const;

  void add_term(const Monomial& m, const BigRational& c);
  /// *this += src * x^dx * y^dy, without materializing the shift.
  void add_shifted(const LaurentPoly2& src, int dx, int dy);

  LaurentPoly2& operator+=(const LaurentPoly2& rhs);
  LaurentPoly2& operator-=(const LaurentPoly2& rhs);
  LaurentPoly2& operator*=(const LaurentPoly2& rhs);
  /// Multiplies every coefficient by c.
  LaurentPoly2 scaled(const BigRational& c) const;

  friend LaurentPoly2 operator+(LaurentPoly2 a, const LaurentPoly2& b) { return a += b; }
  friend LaurentPoly2 operator-(LaurentPoly2 a, const LaurentPoly2& b) { return a -= b; }
  friend LaurentPoly2 operator*(const LaurentPoly2& a, const LaurentPoly2& b);
  LaurentPoly2 operator-() const;

  friend bool operator==(const LaurentPoly2& a, const LaurentPoly2& b) { return a.terms_ == b.terms_; }

 private:
  TermMap terms_;
};

LaurentPoly2 poly_add(const LaurentPoly2& a, const LaurentPoly2& b);
LaurentPoly2 poly_mul(const LaurentPoly2& a, const LaurentPoly2& b);
LaurentPoly2 poly_pow(const LaurentPoly2& a, unsigned exponent);
LaurentPoly2 poly_derivative_y(const LaurentPoly2& a);

/// Exact evaluation. Throws DivisionByZero when a zero is substituted for a
/// variable carrying negative exponents.
BigRational poly_eval(const LaurentPoly2& a, const BigRational& x0, const BigRational& y0);

/// Substitutes y = y0, leaving a polynomial in x.
LaurentPoly2 poly_eval_y(const LaurentPoly2& a, const BigRational& y0);

/// Quotient a / b, which must be exact in the Laurent ring.
/// Throws InvalidArgument when b is zero or b does not divide a.
LaurentPoly2 exact_divide(const LaurentPoly2& a, const LaurentPoly2& b);

/// Human-readable form in the documented polynomial syntax, e.g.
/// "2*x*y^2 - 3*y^-1 + 1". Zero prints as "0".
std::string to_string(const LaurentPoly2& p);

}  // namespace colpart
