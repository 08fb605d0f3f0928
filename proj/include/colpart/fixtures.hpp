#pragma once

#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "colpart/algebra/bareiss.hpp"
#include "colpart/algebra/rational_gf.hpp"

namespace colpart {

/// Published generating functions of G x P_n, summed over n >= 1.
enum class FixtureId {
  K3_generic_k,  // K_3 x P_n, any k
  K4_k2,
  K5_k2,
  K6_k2,
  K4_k3,
  STAR13_k2,      // K_{1,3} x P_n, published p/q
  STAR13_matrix,  // K_{1,3} x P_n, solved from the 7-state system
};

std::string_view fixture_name(FixtureId id);
/// Throws InvalidArgument for an unknown name.
FixtureId fixture_from_name(std::string_view name);
std::vector<FixtureId> all_fixtures();

/// Vertex count of one slice and the number of colors, when fixed by the id.
int fixture_slice_size(FixtureId id);
std::optional<int> fixture_fixed_k(FixtureId id);

/// The published numerator/denominator. `k` is required (>= 1) for
/// K3_generic_k and must be absent or equal to the fixed value otherwise.
RationalGF fixture_gf(FixtureId id, std::optional<int> k = std::nullopt);

/// The 7-state recursion for two-colored K_{1,3} x P_n: t = b + x*R*t, where
/// rows are the new last-slice configuration and columns the previous one.
/// The published base vector carries a factor of x; here it is stripped
/// (b = (y^4, 0, 0, y^3, 0, y^2, y)) so that T(x,y) = x * sum(combo_i * t_i).
struct StarSystem {
  PolyMatrix transition;
  std::vector<LaurentPoly2> base;
  std::vector<LaurentPoly2> combo;
};

StarSystem star_system();

}  // namespace colpart
