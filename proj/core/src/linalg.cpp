#include "quasitri/linalg.hpp"

namespace quasitri {

Mat kron(const Mat& a, const Mat& b) {
  Mat out(a.rows() * b.rows(), a.cols() * b.cols());
  for (Eigen::Index i = 0; i < a.rows(); ++i)
    for (Eigen::Index k = 0; k < a.cols(); ++k)
      out.block(i * b.rows(), k * b.cols(), b.rows(), b.cols()) = a(i, k) * b;
  return out;
}

Mat flip_operator(Eigen::Index n) {
  Mat p = Mat::Zero(n * n, n * n);
  for (Eigen::Index i = 0; i < n; ++i)
    for (Eigen::Index j = 0; j < n; ++j) p(i * n + j, j * n + i) = cplx(1.0, 0.0);
  return p;
}

Vec vec_rm(const Mat& m) {
  Vec out(m.rows() * m.cols());
  for (Eigen::Index i = 0; i < m.rows(); ++i)
    for (Eigen::Index j = 0; j < m.cols(); ++j) out(i * m.cols() + j) = m(i, j);
  return out;
}

Mat unvec_rm(const Vec& v, Eigen::Index n) {
  Mat out(n, n);
  for (Eigen::Index i = 0; i < n; ++i)
    for (Eigen::Index j = 0; j < n; ++j) out(i, j) = v(i * n + j);
  return out;
}

SpanSolver::SpanSolver(const std::vector<Mat>& span) {
  if (span.empty()) throw InputError("SpanSolver: empty span");
  const Eigen::Index rows = span.front().size();
  basis_.resize(rows, static_cast<Eigen::Index>(span.size()));
  for (std::size_t k = 0; k < span.size(); ++k) {
    if (span[k].size() != rows) throw InputError("SpanSolver: inconsistent matrix sizes");
    basis_.col(static_cast<Eigen::Index>(k)) = vec_rm(span[k]);
  }
  cod_.setThreshold(kSvdThreshold);
  cod_.compute(basis_);
}

SpanSolver::Expansion SpanSolver::expand(const Mat& target) const {
  if (target.size() != basis_.rows()) throw InputError("SpanSolver: target size mismatch");
  const Vec t = vec_rm(target);
  Vec coeffs = cod_.solve(t);
  const double residual = max_abs(Vec(basis_ * coeffs - t));
  return {std::move(coeffs), residual};
}

}  // namespace quasitri
