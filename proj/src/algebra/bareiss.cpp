#include "colpart/algebra/bareiss.hpp"

#include <string>
#include <tuple>
#include <utility>

#include "colpart/errors.hpp"

namespace colpart {

void PolyMatrix::swap_rows(std::size_t a, std::size_t b) {
  if (a == b) return;
  for (std::size_t c = 0; c < cols_; ++c) std::swap((*this)(a, c), (*this)(b, c));
}

std::vector<RationalGF> bareiss_solve(const PolyMatrix& m, const std::vector<LaurentPoly2>& b,
                                      const SolverOptions& options) {
  const std::size_t n = m.rows();
  if (m.cols() != n || b.size() != n) throw InvalidArgument("bareiss_solve: shape mismatch");
  if (n > options.max_dimension) {
    throw CapExceeded("bareiss_solve: dimension " + std::to_string(n) + " exceeds limit " +
                      std::to_string(options.max_dimension));
  }
  if (n == 0) return {};

  // Augmented [I - xM | b], each row scaled by a power of y so that every
  // entry is an ordinary polynomial. Row scaling does not change t.
  PolyMatrix a(n, n + 1);
  for (std::size_t r = 0; r < n; ++r) {
    for (std::size_t c = 0; c < n; ++c) {
      LaurentPoly2 e = -m(r, c).shifted(1, 0);
      if (r == c) e += LaurentPoly2(1);
      a(r, c) = std::move(e);
    }
    a(r, n) = b[r];
    int shift = 0;
    for (std::size_t c = 0; c <= n; ++c) {
      if (!a(r, c).is_zero()) shift = std::min(shift, a(r, c).min_y_exp());
    }
    if (shift < 0) {
      for (std::size_t c = 0; c <= n; ++c) a(r, c) = a(r, c).shifted(0, -shift);
    }
  }

  LaurentPoly2 prev(1);
  for (std::size_t k = 0; k < n; ++k) {
    std::size_t pivot = n;
    std::tuple<int, std::size_t> best{0, 0};
    for (std::size_t r = k; r < n; ++r) {
      if (a(r, k).is_zero()) continue;
      std::tuple<int, std::size_t> key{a(r, k).total_degree(), a(r, k).size()};
      if (pivot == n || key < best) {
        pivot = r;
        best = key;
      }
    }
    if (pivot == n) throw SingularSystem("bareiss_solve: matrix is singular");
    a.swap_rows(k, pivot);

    const LaurentPoly2& p = a(k, k);
    for (std::size_t r = k + 1; r < n; ++r) {
      const LaurentPoly2 factor = a(r, k);
      for (std::size_t c = k + 1; c <= n; ++c) {
        LaurentPoly2 v = a(r, c) * p;
        if (!factor.is_zero() && !a(k, c).is_zero()) v -= factor * a(k, c);
        a(r, c) = exact_divide(v, prev);
      }
      a(r, k) = LaurentPoly2();
    }
    prev = p;
  }

  // Cramer numerators N_i = D * t_i are polynomials; back-substitute them
  // with exact divisions by the diagonal.
  const LaurentPoly2 det = a(n - 1, n - 1);
  std::vector<LaurentPoly2> numer(n);
  for (std::size_t i = n; i-- > 0;) {
    LaurentPoly2 acc = det * a(i, n);
    for (std::size_t j = i + 1; j < n; ++j) {
      if (!a(i, j).is_zero()) acc -= a(i, j) * numer[j];
    }
    numer[i] = exact_divide(acc, a(i, i));
  }

  std::vector<RationalGF> out;
  out.reserve(n);
  for (auto& num : numer) out.emplace_back(std::move(num), det);
  return out;
}

RationalGF combine_solution(const std::vector<RationalGF>& t, const std::vector<LaurentPoly2>& weights) {
  if (t.size() != weights.size() || t.empty()) throw InvalidArgument("combine_solution: size mismatch");
  LaurentPoly2 num;
  for (std::size_t i = 0; i < t.size(); ++i) {
    if (!(t[i].den() == t[0].den())) throw InvalidArgument("combine_solution: denominators differ");
    num += weights[i] * t[i].num();
  }
  return RationalGF(num.shifted(1, 0), t[0].den());
}

}  // namespace colpart
