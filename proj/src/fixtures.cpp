#include "colpart/fixtures.hpp"

#include <array>
#include <string>
#include <utility>

#include "colpart/errors.hpp"

namespace colpart {

namespace {

using P = LaurentPoly2;

const P X = P::x();
const P Y = P::y();

P c(long v) { return P(v); }
P pw(const P& p, unsigned e) { return poly_pow(p, e); }

struct YTerm {
  long coeff;
  int y_exp;
};

// sum over x powers of (sum of coeff * y^e) * x^i, from term tables.
P from_rows(const std::vector<std::vector<YTerm>>& rows) {
  P out;
  for (std::size_t i = 0; i < rows.size(); ++i) {
    for (const auto& t : rows[i]) out.add_term(Monomial{static_cast<int>(i), t.y_exp}, BigRational(t.coeff));
  }
  return out;
}

RationalGF k3_generic(long k_value) {
  const P k = c(k_value);
  const P one = c(1);
  const P p =
      k * X * Y *
      (one - (one - k) * Y * (c(3) - (c(2) - k) * Y) -
       X * (one - Y) *
           (c(4) - Y * (c(13) - c(5) * k) + (c(3) + k) * (c(3) - c(2) * k) * pw(Y, 2) -
            (one - k) * (one + (c(3) - k) * k) * pw(Y, 3)) +
       pw(X, 2) * pw(one - Y, 2) *
           (c(3) - (c(2) + c(4) * k) * Y + (one - k + c(3) * pw(k, 2)) * pw(Y, 2) + pw(k, 2) * (one - k) * pw(Y, 3)));
  const P q =
      one - X * (c(5) - c(12) * (c(2) - k) * Y +
                 pw(X, 2) * pw(one - Y, 2) *
                     (c(3) - (c(2) + c(4) * k) * Y + k * (one + c(2) * k) * pw(Y, 2) + k * (one - k) * pw(Y, 3) -
                      pw(k - one, 4) * pw(Y, 4)) -
                 X * (one - Y) *
                     (c(7) - (c(25) - c(8) * k) * Y + (c(20) - c(3) * k - c(4) * pw(k, 2)) * pw(Y, 2) +
                      (c(5) - c(24) * k + c(21) * pw(k, 2) - c(5) * pw(k, 3)) * pw(Y, 3) -
                      (c(7) - c(18) * k + c(17) * pw(k, 2) - c(7) * pw(k, 3) + pw(k, 4)) * pw(Y, 4)) +
                 pw(Y, 2) * (c(32) - c(26) * k + c(6) * pw(k, 2) - (c(13) - c(14) * k + c(6) * pw(k, 2) - pw(k, 3)) * Y));
  return RationalGF(p, q);
}

RationalGF k4_k2() {
  const P ym1 = Y - c(1);
  const P p = c(2) * X * Y *
              (c(1) + c(7) * Y - X * ym1 * (c(7) * pw(Y, 2) + Y - c(9)) +
               pw(X, 2) * pw(ym1, 2) * (c(8) * pw(Y, 2) - c(17) * Y + c(8)));
  const P q = c(1) - c(2) * X * (pw(Y, 2) + c(2) * Y + c(5)) +
              pw(X, 2) * ym1 * (pw(Y, 3) + c(6) * pw(Y, 2) + c(8) * Y - c(17)) -
              pw(X, 3) * pw(ym1, 2) * (pw(Y, 3) + c(6) * pw(Y, 2) - c(17) * Y + c(8));
  return RationalGF(p, q);
}

RationalGF k5_k2() {
  const P ym1 = Y - c(1);
  const P p = c(2) * X * Y *
              (c(1) + c(15) * Y - X * ym1 * (c(15) * pw(Y, 2) - c(13) * Y - c(21)) +
               pw(X, 2) * pw(ym1, 2) * (c(16) * pw(Y, 2) - c(51) * Y + c(30)));
  const P q = c(1) - c(2) * X * (pw(Y, 2) + c(4) * Y + c(11)) +
              pw(X, 2) * ym1 * (pw(Y, 3) + c(10) * pw(Y, 2) + c(2) * Y - c(51)) -
              pw(X, 3) * pw(ym1, 2) * (pw(Y, 3) + c(10) * pw(Y, 2) - c(51) * Y + c(30));
  return RationalGF(p, q);
}

RationalGF k6_k2() {
  const P ym1 = Y - c(1);
  const P p = c(2) * X * Y *
              (c(1) + c(31) * Y - X * ym1 * (c(62) * pw(Y, 2) - c(103) * Y - c(48)) +
               pw(X, 2) * pw(ym1, 2) * (c(31) * pw(Y, 3) - c(72) * pw(Y, 2) - c(125) * Y + c(155)) -
               pw(X, 3) * pw(ym1, 3) * (c(32) * pw(Y, 3) - c(185) * pw(Y, 2) + c(263) * Y - c(108)));
  const P q = c(1) - X * (c(3) * pw(Y, 2) + c(12) * Y + c(49)) +
              pw(X, 2) * ym1 * (c(3) * pw(Y, 3) + c(28) * pw(Y, 2) - c(6) * Y - c(203)) -
              pw(X, 3) * pw(ym1, 2) * (pw(Y, 4) + c(16) * pw(Y, 3) - c(40) * pw(Y, 2) - c(262) * Y + c(263)) +
              pw(X, 4) * pw(ym1, 3) * (pw(Y, 4) + c(15) * pw(Y, 3) - c(167) * pw(Y, 2) + c(263) * Y - c(108));
  return RationalGF(p, q);
}

RationalGF k4_k3() {
  const P ym1 = Y - c(1);
  const P p = c(3) * X * Y *
              (c(1) + c(6) * Y + c(2) * pw(Y, 2) + c(2) * X * ym1 * (pw(Y, 3) - c(9) * pw(Y, 2) + Y + c(2)) -
               pw(X, 2) * (c(2) * Y - c(1)) * pw(ym1, 2) * (c(9) * pw(Y, 2) - c(8) * Y + c(3)));
  const P q = c(1) - X * (c(2) * pw(Y, 3) + c(8) * pw(Y, 2) + c(12) * Y + c(5)) -
              pw(X, 2) * ym1 * (c(2) * pw(Y, 4) - c(13) * pw(Y, 3) - c(25) * pw(Y, 2) - Y + c(7)) +
              pw(X, 3) * pw(ym1, 2) * (c(16) * pw(Y, 4) + c(6) * pw(Y, 3) - c(21) * pw(Y, 2) + c(14) * Y - c(3));
  return RationalGF(p, q);
}

RationalGF star13_k2() {
  const P p = from_rows({
      {},
      {{2, 4}, {6, 3}, {6, 2}, {2, 1}},
      {{-8, 7}, {4, 6}, {-28, 5}, {40, 4}, {-44, 3}, {4, 2}, {-16, 1}},
      {{14, 9}, {-22, 8}, {-4, 7}, {104, 6}, {-106, 5}, {-32, 4}, {90, 3}, {-52, 2}, {40, 1}},
      {{-8, 10}, {-8, 9}, {124, 8}, {-204, 7}, {52, 6}, {64, 5}, {16, 4}, {-80, 3}, {92, 2}, {-48, 1}},
      {{-10, 11}, {4, 10}, {110, 9}, {-268, 8}, {112, 7}, {384, 6}, {-662, 5}, {468, 4}, {-120, 3}, {-48, 2}, {30, 1}},
      {{16, 11}, {-28, 10}, {-156, 9}, {656, 8}, {-1028, 7}, {708, 6}, {-316, 4}, {168, 3}, {-12, 2}, {-8, 1}},
      {{8, 11}, {-58, 10}, {228, 9}, {-562, 8}, {852, 7}, {-756, 6}, {340, 5}, {-26, 4}, {-36, 3}, {10, 2}},
  });
  const P q = from_rows({
      {{1, 0}},
      {{-1, 4}, {-1, 3}, {-1, 2}, {-7, 1}, {-9, 0}},
      {{1, 7}, {1, 6}, {5, 5}, {11, 4}, {-4, 3}, {-6, 2}, {14, 1}, {28, 0}},
      {{-1, 9}, {-3, 8}, {1, 7}, {5, 6}, {-22, 5}, {-11, 4}, {7, 3}, {54, 2}, {-18, 1}, {-44, 0}},
      {{7, 9}, {-17, 8}, {2, 7}, {20, 6}, {-32, 5}, {45, 4}, {42, 3}, {-105, 2}, {-1, 1}, {39, 0}},
      {{1, 11}, {4, 10}, {-24, 9}, {47, 8}, {-28, 7}, {-62, 6}, {167, 5}, {-125, 4}, {-50, 3}, {83, 2}, {6, 1}, {-19, 0}},
      {{1, 11}, {-24, 10}, {94, 9}, {-122, 8}, {-61, 7}, {365, 6}, {-409, 5}, {116, 4}, {116, 3}, {-91, 2}, {11, 1}, {4, 0}},
      {{-3, 11}, {23, 10}, {-74, 9}, {95, 8}, {45, 7}, {-289, 6}, {355, 5}, {-183, 4}, {18, 3}, {18, 2}, {-5, 1}},
  });
  return RationalGF(p, q);
}

RationalGF star13_matrix() {
  const StarSystem sys = star_system();
  return combine_solution(bareiss_solve(sys.transition, sys.base), sys.combo);
}

struct FixtureInfo {
  FixtureId id;
  std::string_view name;
  int slice_size;
  int k;  // 0 when k is a parameter
};

constexpr std::array<FixtureInfo, 7> kFixtures{{
    {FixtureId::K3_generic_k, "K3_generic_k", 3, 0},
    {FixtureId::K4_k2, "K4_k2", 4, 2},
    {FixtureId::K5_k2, "K5_k2", 5, 2},
    {FixtureId::K6_k2, "K6_k2", 6, 2},
    {FixtureId::K4_k3, "K4_k3", 4, 3},
    {FixtureId::STAR13_k2, "STAR13_k2", 4, 2},
    {FixtureId::STAR13_matrix, "STAR13_matrix", 4, 2},
}};

const FixtureInfo& info(FixtureId id) {
  for (const auto& f : kFixtures) {
    if (f.id == id) return f;
  }
  throw InvalidArgument("unknown fixture id");
}

}  // namespace

std::string_view fixture_name(FixtureId id) { return info(id).name; }

FixtureId fixture_from_name(std::string_view name) {
  for (const auto& f : kFixtures) {
    if (f.name == name) return f.id;
  }
  throw InvalidArgument("unknown fixture '" + std::string(name) + "'");
}

std::vector<FixtureId> all_fixtures() {
  std::vector<FixtureId> out;
  for (const auto& f : kFixtures) out.push_back(f.id);
  return out;
}

int fixture_slice_size(FixtureId id) { return info(id).slice_size; }

std::optional<int> fixture_fixed_k(FixtureId id) {
  const int k = info(id).k;
  return k == 0 ? std::nullopt : std::optional<int>(k);
}

RationalGF fixture_gf(FixtureId id, std::optional<int> k) {
  const FixtureInfo& f = info(id);
  if (f.k == 0) {
    if (!k || *k < 1) throw InvalidArgument(std::string(f.name) + " requires k >= 1");
  } else if (k && *k != f.k) {
    throw InvalidArgument(std::string(f.name) + " is published for k = " + std::to_string(f.k) + " only");
  }
  switch (id) {
    case FixtureId::K3_generic_k: return k3_generic(*k);
    case FixtureId::K4_k2: return k4_k2();
    case FixtureId::K5_k2: return k5_k2();
    case FixtureId::K6_k2: return k6_k2();
    case FixtureId::K4_k3: return k4_k3();
    case FixtureId::STAR13_k2: return star13_k2();
    case FixtureId::STAR13_matrix: return star13_matrix();
  }
  throw InvalidArgument("unknown fixture id");
}

StarSystem star_system() {
  const P Yinv = P::monomial(1, 0, -1);
  const P Yinv2 = P::monomial(1, 0, -2);
  const P y2 = pw(Y, 2);
  const P y3 = pw(Y, 3);
  const P y4 = pw(Y, 4);
  const std::array<std::array<P, 7>, 7> rows{{
      {y4 + c(1), c(3) * y4, y4, c(3) * y3 + c(3) * Y, c(3) * y3, c(3) * y2, y3},
      {c(0), c(1), c(0), c(0), Y, y2, c(0)},
      {c(0), c(0), c(1), c(0), c(0), c(0), Y},
      {y2 + c(1), c(3) * y2 + c(2), y2, y3 + c(4) * Y + c(1), y3 + c(4) * Y, c(3) * y2 + c(2) * Y, y2},
      {c(0), c(1), c(1), c(0), c(1), c(1), Y},
      {c(2), Y + c(5), Y + c(1), (c(3) * y2 + c(2) * Y + c(1)) * Yinv, c(3) * Y + c(3), y2 + c(2) * Y + c(3), c(2) * Y},
      {(y2 + c(1)) * Yinv2, (c(3) * Y + c(3)) * Yinv, c(2), (c(3) * Y + c(3)) * Yinv, c(6), c(6), Y + c(1)},
  }};
  StarSystem sys;
  sys.transition = PolyMatrix(7, 7);
  for (std::size_t r = 0; r < 7; ++r) {
    for (std::size_t col = 0; col < 7; ++col) sys.transition(r, col) = rows[r][col];
  }
  sys.base = {y4, c(0), c(0), y3, c(0), y2, Y};
  sys.combo = {c(2), c(6), c(2), c(6), c(6), c(6), c(2)};
  return sys;
}

}  // namespace colpart
