#pragma once

#include <vector>

#include "quasitri/common.hpp"

namespace quasitri {

/// Kronecker product with row-major pair flattening: (A ⊗ B)[(i,j),(k,l)] = A(i,k) B(j,l),
/// pair (i,j) at flat index i*cols(B)+j style. Matches the R-matrix convention
/// R^{ij}_{kl} ↦ entry (i*N+j, k*N+l).
Mat kron(const Mat& a, const Mat& b);

/// Flip operator P on C^n ⊗ C^n: P(e_i ⊗ e_j) = e_j ⊗ e_i. Satisfies P^2 = I.
Mat flip_operator(Eigen::Index n);

/// Row-major flattening of a matrix: out(i*cols+j) = M(i,j).
Vec vec_rm(const Mat& m);

/// Inverse of vec_rm for square n x n matrices.
Mat unvec_rm(const Vec& v, Eigen::Index n);

/// Least-squares expansion of vectors over the span of a fixed set of matrices.
/// The decomposition is factored once; expand() reports the max-norm residual of
/// the re-expansion so callers can detect elements that leave the span.
class SpanSolver {
 public:
  explicit SpanSolver(const std::vector<Mat>& span);

  struct Expansion {
    Vec coeffs;
    double residual;
  };

  Expansion expand(const Mat& target) const;
  Eigen::Index span_size() const { return basis_.cols(); }

 private:
  Mat basis_;  // columns are vec_rm of the span matrices
  Eigen::CompleteOrthogonalDecomposition<Mat> cod_;
};

}  // namespace quasitri
