#include "quasitri/lie_algebra.hpp"

#include <cmath>

namespace quasitri {

namespace {

std::vector<Mat> validated(std::vector<Mat> basis) {
  if (basis.empty()) throw InputError("LieAlgebraRep: empty basis");
  const Eigen::Index n = basis.front().rows();
  for (const Mat& x : basis) {
    if (x.rows() != n || x.cols() != n) throw InputError("LieAlgebraRep: basis matrices must be square and same size");
  }
  return basis;
}

}  // namespace

LieAlgebraRep::LieAlgebraRep(std::vector<Mat> basis, double closure_tol)
    : basis_(validated(std::move(basis))), span_(basis_) {
  const int d = dim();
  structure_.assign(static_cast<std::size_t>(d) * d * d, cplx(0, 0));

  for (int i = 0; i < d; ++i) {
    for (int j = i + 1; j < d; ++j) {
      const Mat comm = basis_[i] * basis_[j] - basis_[j] * basis_[i];
      const auto ex = span_.expand(comm);
      closure_residual_ = std::max(closure_residual_, ex.residual);
      if (ex.residual > closure_tol)
        throw InputError("LieAlgebraRep: basis not closed under commutator (residual " +
                         std::to_string(ex.residual) + ")");
      for (int k = 0; k < d; ++k) {
        const cplx v = ex.coeffs(k);
        structure_[(static_cast<std::size_t>(i) * d + j) * d + k] = v;
        structure_[(static_cast<std::size_t>(j) * d + i) * d + k] = -v;
      }
    }
  }

  // Jacobi identity of the stored constants.
  for (int i = 0; i < d; ++i)
    for (int j = 0; j < d; ++j)
      for (int k = 0; k < d; ++k)
        for (int l = 0; l < d; ++l) {
          cplx s(0, 0);
          for (int m = 0; m < d; ++m)
            s += c(i, j, m) * c(m, k, l) + c(j, k, m) * c(m, i, l) + c(k, i, m) * c(m, j, l);
          jacobi_residual_ = std::max(jacobi_residual_, std::abs(s));
        }
  if (jacobi_residual_ > closure_tol)
    throw InputError("LieAlgebraRep: structure constants violate the Jacobi identity");
}

Vec LieAlgebraRep::bracket(const Vec& x, const Vec& y) const {
  const int d = dim();
  if (x.size() != d || y.size() != d) throw InputError("bracket: coefficient vectors must have length dim");
  Vec z = Vec::Zero(d);
  for (int i = 0; i < d; ++i) {
    if (x(i) == cplx(0, 0)) continue;
    for (int j = 0; j < d; ++j) {
      const cplx xy = x(i) * y(j);
      if (xy == cplx(0, 0)) continue;
      for (int k = 0; k < d; ++k) z(k) += xy * c(i, j, k);
    }
  }
  return z;
}

Mat LieAlgebraRep::adjoint_matrix(const Mat& g, double tol) const {
  const int d = dim();
  Eigen::PartialPivLU<Mat> lu(g);
  const Mat gi = lu.inverse();
  Mat a(d, d);
  for (int k = 0; k < d; ++k) {
    const auto ex = span_.expand(Mat(g * basis_[k] * gi));
    if (ex.residual > tol)
      throw NumericsError("adjoint action leaves the algebra (residual " + std::to_string(ex.residual) + ")");
    a.col(k) = ex.coeffs;
  }
  return a;
}

}  // namespace quasitri
