#pragma once

#include <cstdint>
#include <unordered_map>
#include <vector>

#include "colpart/algebra/bareiss.hpp"
#include "colpart/algebra/rational_gf.hpp"
#include "colpart/graphs/graph.hpp"
#include "colpart/oracle.hpp"

namespace colpart {

/// Boundary state of G x P_t: the coloring of the last slice and which of
/// its vertices already belong to one block (through any earlier slice).
/// `linkage` is a restricted-growth string over the slice's vertices.
struct Profile {
  std::vector<int> coloring;
  std::vector<int> linkage;

  int open_blocks() const;
  friend bool operator==(const Profile&, const Profile&) = default;
  friend auto operator<=>(const Profile&, const Profile&) = default;
};

struct ProfileHash {
  std::size_t operator()(const Profile& p) const noexcept;
};

/// Profile -> polynomial in y counting colorings by blocks already closed.
using StateWeights = std::unordered_map<Profile, LaurentPoly2, ProfileHash>;

struct TransferOptions {
  int max_vertices = 8;
  /// Upper bound on k^|V(G)| slice colorings.
  std::uint64_t max_slice_colorings = std::uint64_t{1} << 16;
};

/// One state per coloring of G with weight 1; linkage is the coloring's
/// monochromatic components. Throws CapExceeded or InvalidArgument.
StateWeights initial_states(const Graph& g, int k, const TransferOptions& options = {});

/// Appends one slice. Blocks of the old slice that do not continue into the
/// new one are closed and paid for with a factor of y.
StateWeights step(const Graph& g, int k, const StateWeights& s, const TransferOptions& options = {});

/// Pays for the blocks still open: sum of weight * y^(open blocks).
/// The distribution's vertex_count and k are left for the caller to fill.
LaurentPoly2 finalize(const StateWeights& s);

/// Block distribution of G x P_n (n >= 1) with k colors.
BlockDistribution prism_distribution(const Graph& g, int k, int n, const TransferOptions& options = {});

/// (d/dy)(1) of prism_distribution over k^(|V(G)| n).
BigRational prism_expected(const Graph& g, int k, int n, const TransferOptions& options = {});

/// An equivalence class of colorings of [m] with k colors, where two
/// colorings are equivalent when their color-class sizes agree up to a
/// permutation of the colors.
struct ColorClass {
  /// subsets[i] lists the vertices with color i; all k entries present.
  std::vector<std::vector<int>> subsets;
  BigInt class_size;
  int support = 0;

  /// Color of each vertex under the representative.
  std::vector<int> coloring() const;
};

/// One class per partition of m into at most k parts, in the order of
/// partitions_at_most_k_parts.
std::vector<ColorClass> color_classes(int m, int k);

/// The reduced recursion for K_m x P_n over color classes:
///   t_A = x * base_A + x * sum_B transition(A, B) t_B
/// with the leading x removed from base (solver convention).
struct KmSystem {
  std::vector<ColorClass> classes;
  PolyMatrix transition;
  std::vector<LaurentPoly2> base;
  std::vector<LaurentPoly2> sizes;
};

KmSystem km_transfer_system(int m, int k, const SolverOptions& options = {});

/// Generating function of K_m x P_n over n.
RationalGF km_prism_gf(int m, int k, const SolverOptions& options = {});

}  // namespace colpart
