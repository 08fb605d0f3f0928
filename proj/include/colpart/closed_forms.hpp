#pragma once

#include "colpart/algebra/rational_gf.hpp"
#include "colpart/oracle.hpp"

namespace colpart {

/// Graph families with known block-count formulas.
struct FamilyParams {
  enum class Family { Tree, PerfectBinaryTree, Cycle, Complete, Bipartite, CompletePrism, StarProfile };

  Family family = Family::Tree;
  int n = 0;  // vertices, cycle length, complete size, first part, or prism length
  int m = 0;  // second bipartite part, or clique size of a prism slice
  int k = 2;
};

// Trees: every tree on n vertices has distribution k*y*((k-1)*y + 1)^(n-1).
BlockDistribution tree_distribution(int n, int k);
BigRational tree_expected(int n, int k);

// Perfect binary trees of height h (2^(h+1) - 1 vertices).
BlockDistribution pbt_distribution(int height, int k);
BigRational pbt_expected(int height, int k);

// Cycles C_n, n >= 3.
/// Number of colorings of C_n with exactly i blocks.
BigInt cycle_block_count(int n, int i, int k);
BlockDistribution cycle_distribution(int n, int k);
BigRational cycle_expected(int n, int k);

/// Closed walks of length l from a fixed vertex of K_m.
BigRational closed_walks_complete(int m, int l);
/// Walks of length l between two fixed distinct vertices of K_m.
BigRational open_walks_complete(int m, int l);

// Complete graphs K_n.
/// S(n,i) * C(k,i) * i!; zero when i is outside 1..min(n,k).
BigInt complete_block_count(int n, int i, int k);
BlockDistribution complete_distribution(int n, int k);
BigRational complete_expected(int n, int k);

BigRational bipartite_expected(int n, int m, int k);

/// Expected blocks of K_l x P_n.
BigRational complete_prism_expected(int l, int n, int k);

/// Generating function of K_3 x P_n over n, for a concrete k.
RationalGF k3_prism_gf(int k);

/// Number of reduced last-slice states of K_{1,m} x P_n with two colors.
BigInt star_profile_count(int m);

/// Expected blocks of K_{1,3} x P_n with two colors.
BigRational star_prism_expected(int n);

/// Dispatch on a family description. Distribution exists for Tree,
/// PerfectBinaryTree (n = height), Cycle, Complete and CompletePrism with
/// m = 3 (via the series of k3_prism_gf); throws InvalidArgument otherwise.
BlockDistribution family_distribution(const FamilyParams& p);
BigRational family_expected(const FamilyParams& p);

}  // namespace colpart
