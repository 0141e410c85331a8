#pragma once

#include <memory>
#include <vector>

#include "quasitri/common.hpp"
#include "quasitri/linalg.hpp"

namespace quasitri {

/// A finite-dimensional matrix Lie algebra: a basis X_1..X_d of n x n complex
/// matrices together with the structure constants c with [X_i, X_j] = sum_k c(i,j,k) X_k.
///
/// Construction recomputes the structure constants by least-squares re-expansion
/// of each commutator over the basis and validates closure, antisymmetry and the
/// Jacobi identity; the constants are stored and never recomputed afterwards.
class LieAlgebraRep {
 public:
  LieAlgebraRep(std::vector<Mat> basis, double closure_tol = kDefaultTol);

  int dim() const { return static_cast<int>(basis_.size()); }
  Eigen::Index n() const { return basis_.front().rows(); }
  const std::vector<Mat>& basis() const { return basis_; }
  const Mat& basis(int k) const { return basis_[static_cast<std::size_t>(k)]; }

  cplx c(int i, int j, int k) const {
    return structure_[(static_cast<std::size_t>(i) * basis_.size() + static_cast<std::size_t>(j)) *
                          basis_.size() +
                      static_cast<std::size_t>(k)];
  }

  /// Coefficients of [x, y] for coefficient vectors x, y of length dim().
  Vec bracket(const Vec& x, const Vec& y) const;

  /// Re-expansion of an n x n matrix over the basis; residual reports how far the
  /// matrix is from span{X_k}.
  SpanSolver::Expansion expand(const Mat& m) const { return span_.expand(m); }

  /// The d x d matrix A of Ad_g in this basis: g X_k g^{-1} = sum_m A(m,k) X_m.
  /// Throws NumericsError when conjugation leaves span{X_k}.
  Mat adjoint_matrix(const Mat& g, double tol = kDefaultTol) const;

  double closure_residual() const { return closure_residual_; }
  double jacobi_identity_residual() const { return jacobi_residual_; }

 private:
  std::vector<Mat> basis_;
  std::vector<cplx> structure_;
  SpanSolver span_;
  double closure_residual_ = 0.0;
  double jacobi_residual_ = 0.0;
};

using AlgebraPtr = std::shared_ptr<const LieAlgebraRep>;

}  // namespace quasitri
