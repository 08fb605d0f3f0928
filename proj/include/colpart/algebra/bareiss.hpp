#pragma once

#include <cstddef>
#include <vector>

#include "colpart/algebra/laurent_poly.hpp"
#include "colpart/algebra/rational_gf.hpp"

namespace colpart {

/// Dense row-major matrix of Laurent polynomials.
class PolyMatrix {
 public:
  PolyMatrix() = default;
  PolyMatrix(std::size_t rows, std::size_t cols) : rows_(rows), cols_(cols), data_(rows * cols) {}

  std::size_t rows() const noexcept { return rows_; }
  std::size_t cols() const noexcept { return cols_; }

  LaurentPoly2& operator()(std::size_t r, std::size_t c) { return data_[r * cols_ + c]; }
  const LaurentPoly2& operator()(std::size_t r, std::size_t c) const { return data_[r * cols_ + c]; }

  void swap_rows(std::size_t a, std::size_t b);

 private:
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<LaurentPoly2> data_;
};

struct SolverOptions {
  std::size_t max_dimension = 12;
};

/// Solves (I - x*M) t = b exactly over the fraction field of Q[x, y^{+-1}].
///
/// Fraction-free Gaussian elimination (Bareiss). Every returned entry shares
/// the denominator produced by the last pivot, which equals det(I - x*M) up
/// to sign and a power of y. Pivots are chosen by lowest total degree, then
/// fewest terms, then lowest row index.
///
/// Throws SingularSystem if no pivot exists, CapExceeded above
/// options.max_dimension, InvalidArgument on shape mismatch.
std::vector<RationalGF> bareiss_solve(const PolyMatrix& m, const std::vector<LaurentPoly2>& b,
                                      const SolverOptions& options = {});

/// Sum of weights[i] * t[i] over a solution sharing one denominator, times x.
/// This is the usual way a transfer-system solution becomes a single GF
/// when the inhomogeneous term of the recursion carries a factor of x.
RationalGF combine_solution(const std::vector<RationalGF>& t, const std::vector<LaurentPoly2>& weights);

}  // namespace colpart
