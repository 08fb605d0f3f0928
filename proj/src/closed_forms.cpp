#include "colpart/closed_forms.hpp"

#include <string>

#include "colpart/algebra/combinatorics.hpp"
#include "colpart/errors.hpp"
#include "colpart/fixtures.hpp"

namespace colpart {

namespace {

void require(bool ok, const char* what) {
  if (!ok) throw InvalidArgument(what);
}

BigRational power(long base, long e) { return pow_rational(BigRational(base), e); }

BlockDistribution make_distribution(LaurentPoly2 poly, int vertices, int k) {
  BlockDistribution d;
  d.poly = std::move(poly);
  d.vertex_count = vertices;
  d.k = k;
  return d;
}

}  // namespace

BlockDistribution tree_distribution(int n, int k) {
  require(n >= 1 && k >= 1, "tree_distribution needs n >= 1, k >= 1");
  const LaurentPoly2 y = LaurentPoly2::y();
  LaurentPoly2 p = LaurentPoly2::monomial(k, 0, 1) * poly_pow(y.scaled(k - 1) + LaurentPoly2(1), n - 1);
  return make_distribution(std::move(p), n, k);
}

BigRational tree_expected(int n, int k) {
  require(n >= 1 && k >= 1, "tree_expected needs n >= 1, k >= 1");
  return make_rational(BigInt((k - 1)) * n + 1, k);
}

BlockDistribution pbt_distribution(int height, int k) {
  require(height >= 0 && height < 30 && k >= 1, "pbt_distribution needs 0 <= h < 30, k >= 1");
  const unsigned exponent = (1U << (height + 1)) - 2;
  const LaurentPoly2 y = LaurentPoly2::y();
  LaurentPoly2 p = LaurentPoly2::monomial(k, 0, 1) * poly_pow(y.scaled(k - 1) + LaurentPoly2(1), exponent);
  return make_distribution(std::move(p), static_cast<int>(exponent) + 1, k);
}

BigRational pbt_expected(int height, int k) {
  require(height >= 0 && height < 30 && k >= 1, "pbt_expected needs 0 <= h < 30, k >= 1");
  const BigInt leaves_term = BigInt(2) * (k - 1) * (pow_int(2, static_cast<unsigned long>(height)) - 1);
  return make_rational(leaves_term + k, k);
}

BigInt cycle_block_count(int n, int i, int k) {
  require(n >= 3 && k >= 1, "cycle_block_count needs n >= 3, k >= 1");
  require(i >= 1 && i <= n, "cycle_block_count needs 1 <= i <= n");
  if (i == 1) return k;
  const BigInt km1 = k - 1;
  const BigInt sign = (i % 2 == 0) ? 1 : -1;
  return binomial(n, i) * (pow_int(km1, static_cast<unsigned long>(i)) + km1 * sign);
}

BlockDistribution cycle_distribution(int n, int k) {
  require(n >= 3 && k >= 1, "cycle_distribution needs n >= 3, k >= 1");
  LaurentPoly2 p;
  for (int i = 1; i <= n; ++i) p.add_term(Monomial{0, i}, BigRational(cycle_block_count(n, i, k)));
  return make_distribution(std::move(p), n, k);
}

BigRational cycle_expected(int n, int k) {
  require(n >= 3 && k >= 1, "cycle_expected needs n >= 3, k >= 1");
  const BigInt kn = pow_int(k, static_cast<unsigned long>(n));
  const BigInt kn1 = pow_int(k, static_cast<unsigned long>(n - 1));
  return make_rational(BigInt(k) + BigInt(n) * (kn - kn1), kn);
}

BigRational closed_walks_complete(int m, int l) {
  require(m >= 1 && l >= 0, "closed_walks_complete needs m >= 1, l >= 0");
  const BigRational sign = (l % 2 == 0) ? 1 : -1;
  return (power(m - 1, l) + BigRational(m - 1) * sign) / BigRational(m);
}

BigRational open_walks_complete(int m, int l) {
  require(m >= 1 && l >= 1, "open_walks_complete needs m >= 1, l >= 1");
  const BigRational sign = (l % 2 == 0) ? 1 : -1;
  return (power(m - 1, l) - sign) / BigRational(m);
}

BigInt complete_block_count(int n, int i, int k) {
  require(n >= 1 && k >= 1, "complete_block_count needs n >= 1, k >= 1");
  if (i < 1 || i > n || i > k) return 0;
  return stirling2(n, i) * binomial(k, i) * factorial(static_cast<unsigned long>(i));
}

BlockDistribution complete_distribution(int n, int k) {
  require(n >= 1 && k >= 1, "complete_distribution needs n >= 1, k >= 1");
  LaurentPoly2 p;
  for (int i = 1; i <= n; ++i) p.add_term(Monomial{0, i}, BigRational(complete_block_count(n, i, k)));
  return make_distribution(std::move(p), n, k);
}

BigRational complete_expected(int n, int k) {
  require(n >= 1 && k >= 1, "complete_expected needs n >= 1, k >= 1");
  return BigRational(k) - power(k - 1, n) / power(k, n - 1);
}

BigRational bipartite_expected(int n, int m, int k) {
  require(n >= 1 && m >= 1 && k >= 1, "bipartite_expected needs n, m, k >= 1");
  const BigRational kn = power(k, n);
  const BigRational km = power(k, m);
  const BigRational kn1 = power(k - 1, n);
  const BigRational km1 = power(k - 1, m);
  const BigRational numer = BigRational(n) * kn * km1 + BigRational(m) * km * kn1 +
                            BigRational(k) * (kn - kn1) * (km - km1);
  return numer / power(k, static_cast<long>(n) + m);
}

BigRational complete_prism_expected(int l, int n, int k) {
  require(l >= 1 && n >= 1 && k >= 1, "complete_prism_expected needs l, n, k >= 1");
  const BigRational base = power(k, 2L * l) - power(static_cast<long>(k) * k - 1, l);
  const BigRational slope = power(k - 1, l) * (power(k + 1, l) - power(k, l));
  return (base + slope * BigRational(n)) / power(k, 2L * l - 1);
}

RationalGF k3_prism_gf(int k) { return fixture_gf(FixtureId::K3_generic_k, k); }

BigInt star_profile_count(int m) {
  require(m >= 0, "star_profile_count needs m >= 0");
  BigInt sum = 0;
  for (int l = 0; l <= m; ++l) sum += partition_count(l);
  return sum;
}

BigRational star_prism_expected(int n) {
  require(n >= 1, "star_prism_expected needs n >= 1");
  return BigRational(2254219, 1411200) + BigRational(6, 49) * power(2, -3L * n) -
         BigRational(2, 225) * power(2, -4L * n) + BigRational(11933, 13440) * BigRational(n);
}

BlockDistribution family_distribution(const FamilyParams& p) {
  using F = FamilyParams::Family;
  switch (p.family) {
    case F::Tree: return tree_distribution(p.n, p.k);
    case F::PerfectBinaryTree: return pbt_distribution(p.n, p.k);
    case F::Cycle: return cycle_distribution(p.n, p.k);
    case F::Complete: return complete_distribution(p.n, p.k);
    case F::CompletePrism: {
      require(p.m == 3 && p.n >= 1 && p.k >= 1, "closed-form prism distribution exists only for K_3 x P_n");
      const auto series = series_expand(k3_prism_gf(p.k), p.n);
      return make_distribution(series.at(p.n), 3 * p.n, p.k);
    }
    default: throw InvalidArgument("no closed-form distribution for this family");
  }
}

BigRational family_expected(const FamilyParams& p) {
  using F = FamilyParams::Family;
  switch (p.family) {
    case F::Tree: return tree_expected(p.n, p.k);
    case F::PerfectBinaryTree: return pbt_expected(p.n, p.k);
    case F::Cycle: return cycle_expected(p.n, p.k);
    case F::Complete: return complete_expected(p.n, p.k);
    case F::Bipartite: return bipartite_expected(p.n, p.m, p.k);
    case F::CompletePrism: return complete_prism_expected(p.m, p.n, p.k);
    case F::StarProfile:
      require(p.m == 3 && p.k == 2, "closed-form star prism expectation exists only for K_{1,3}, k = 2");
      return star_prism_expected(p.n);
  }
  throw InvalidArgument("unknown family");
}

}  // namespace colpart
