#pragma once

#include <vector>

#include "colpart/algebra/laurent_poly.hpp"

namespace colpart {

/// Bivariate generating function num(x,y) / den(x,y). Never reduced; two
/// values are compared by cross-multiplication (see gf_equal).
class RationalGF {
 public:
  RationalGF(LaurentPoly2 num, LaurentPoly2 den);

  const LaurentPoly2& num() const noexcept { return num_; }
  const LaurentPoly2& den() const noexcept { return den_; }

  /// Divides num and den by [x^0]den when that is a single monomial c*y^j,
  /// giving a denominator with unit constant term. Throws InvalidArgument
  /// otherwise.
  RationalGF normalized() const;

 private:
  LaurentPoly2 num_;
  LaurentPoly2 den_;
};

bool gf_equal(const RationalGF& a, const RationalGF& b);

/// Coefficients c_0..c_N of x^n, each a Laurent polynomial in y.
/// Requires [x^0]den == 1; throws InvalidArgument otherwise.
std::vector<LaurentPoly2> series_expand(const RationalGF& gf, int max_order);

}  // namespace colpart
