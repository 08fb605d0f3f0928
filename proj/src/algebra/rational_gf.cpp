#include "colpart/algebra/rational_gf.hpp"

#include <utility>

#include "colpart/errors.hpp"

namespace colpart {

RationalGF::RationalGF(LaurentPoly2 num, LaurentPoly2 den) : num_(std::move(num)), den_(std::move(den)) {
  if (den_.is_zero()) throw InvalidArgument("generating function with zero denominator");
}

RationalGF RationalGF::normalized() const {
  const LaurentPoly2 c0 = den_.x_coeff(0);
  if (c0.size() != 1) throw InvalidArgument("constant term of denominator is not a monomial in y");
  const auto& [mono, c] = *c0.terms().begin();
  const BigRational inv = 1 / c;
  return RationalGF(num_.shifted(0, -mono.y).scaled(inv), den_.shifted(0, -mono.y).scaled(inv));
}

bool gf_equal(const RationalGF& a, const RationalGF& b) {
  return a.num() * b.den() == b.num() * a.den();
}

std::vector<LaurentPoly2> series_expand(const RationalGF& gf, int max_order) {
  if (max_order < 0) throw InvalidArgument("series order must be nonnegative");
  if (gf.den().x_coeff(0) != LaurentPoly2(1)) {
    throw InvalidArgument("series_expand requires [x^0] of the denominator to be 1");
  }
  const int qdeg = gf.den().x_degree();
  std::vector<LaurentPoly2> q(static_cast<std::size_t>(qdeg) + 1);
  for (int i = 1; i <= qdeg; ++i) q[i] = gf.den().x_coeff(i);

  std::vector<LaurentPoly2> c;
  c.reserve(static_cast<std::size_t>(max_order) + 1);
  for (int n = 0; n <= max_order; ++n) {
    LaurentPoly2 cn = gf.num().x_coeff(n);
    for (int i = 1; i <= std::min(n, qdeg); ++i) {
      if (!q[i].is_zero()) cn -= q[i] * c[n - i];
    }
    c.push_back(std::move(cn));
  }
  return c;
}

}  // namespace colpart
