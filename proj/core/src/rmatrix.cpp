#include "quasitri/rmatrix.hpp"

namespace quasitri {

namespace {

void require(const RMat& r, RConvention c, const char* who) {
  if (r.convention != c)
    throw InputError(std::string(who) + ": wrong R-matrix convention for this operation");
}

struct Legs {
  Mat r12, r13, r23;
};

Legs legs(const Mat& r, Eigen::Index n) {
  const Mat id = Mat::Identity(n, n);
  Legs out;
  out.r12 = kron(r, id);
  out.r23 = kron(id, r);
  const Mat p23 = kron(id, flip_operator(n));
  out.r13 = p23 * out.r12 * p23;
  return out;
}

}  // namespace

RMat::RMat(Eigen::Index n, Mat e, RConvention c) : N(n), entries(std::move(e)), convention(c) {
  if (N < 1 || entries.rows() != N * N || entries.cols() != N * N)
    throw InputError("RMat: entries must be N^2 x N^2");
}

RMat RMat::identity(Eigen::Index n, RConvention c) { return RMat(n, Mat::Identity(n * n, n * n), c); }

Conventions conventions(const RMat& r) {
  require(r, RConvention::kPlain, "conventions");
  Conventions out;
  out.p = flip_operator(r.N);
  out.rhat = RMat(r.N, Mat(out.p * r.entries), RConvention::kHat);
  out.r21 = RMat(r.N, Mat(out.p * out.rhat.entries * out.p), RConvention::kHat);
  return out;
}

RMat hat_from_plain(const RMat& r) {
  require(r, RConvention::kPlain, "hat_from_plain");
  return RMat(r.N, Mat(flip_operator(r.N) * r.entries), RConvention::kHat);
}

RMat plain_from_hat(const RMat& rhat) {
  require(rhat, RConvention::kHat, "plain_from_hat");
  return RMat(rhat.N, Mat(flip_operator(rhat.N) * rhat.entries), RConvention::kPlain);
}

Mat r21_of_hat(const Mat& rhat, Eigen::Index n) {
  const Mat p = flip_operator(n);
  return p * rhat * p;
}

double qybe_residual(const RMat& r) {
  require(r, RConvention::kPlain, "qybe_residual");
  const Legs l = legs(r.entries, r.N);
  return max_abs(Mat(l.r12 * l.r13 * l.r23 - l.r23 * l.r13 * l.r12));
}

double braid_residual(const RMat& rhat) {
  require(rhat, RConvention::kHat, "braid_residual");
  const Mat id = Mat::Identity(rhat.N, rhat.N);
  const Mat b12 = kron(rhat.entries, id);
  const Mat b23 = kron(id, rhat.entries);
  return max_abs(Mat(b12 * b23 * b12 - b23 * b12 * b23));
}

RMat drinfeld_rd(const RMat& r) {
  Eigen::FullPivLU<Mat> lu(r.entries);
  lu.setThreshold(kSingularityThreshold);
  if (!lu.isInvertible()) throw NumericsError("drinfeld_rd: R is singular");
  return RMat(r.N, lu.inverse(), r.convention);
}

StarReport star_report(const RMat& rhat, double tol) {
  require(rhat, RConvention::kHat, "star_report");
  const Mat& m = rhat.entries;
  const Mat id = Mat::Identity(m.rows(), m.cols());
  StarReport out{};
  out.self_adjoint_residual = max_abs(Mat(m - m.adjoint()));
  out.unitary_residual = max_abs(Mat(m * m.adjoint() - id));
  out.involutive_residual = max_abs(Mat(m * m - id));
  out.self_adjoint = out.self_adjoint_residual <= tol;
  out.unitary = out.unitary_residual <= tol;
  out.involutive = out.involutive_residual <= tol;
  return out;
}

SemiclassicalResult semiclassical_w(const RFamily& family, AlgebraPtr basis, double tol) {
  const Mat r1 = family(1.0);
  if (max_abs(Mat(r1 - Mat::Identity(r1.rows(), r1.cols()))) > tol)
    throw InputError("semiclassical_w: family must satisfy R(1) = I");

  const auto central = [&](double h) { return Mat((family(1.0 + h) - family(1.0 - h)) / (2.0 * h)); };
  const Mat d1 = central(1e-3);
  const Mat d2 = central(5e-4);
  const Mat m = (4.0 * d2 - d1) / 3.0;

  // Expand -i*M over the two-leg basis products.
  const auto& alg = *basis;
  std::vector<Mat> span;
  span.reserve(static_cast<std::size_t>(alg.dim()) * alg.dim());
  for (int k = 0; k < alg.dim(); ++k)
    for (int l = 0; l < alg.dim(); ++l) span.push_back(kron(alg.basis(k), alg.basis(l)));
  const SpanSolver solver(span);
  const auto ex = solver.expand(Mat(cplx(0, -1) * m));
  if (ex.residual > tol)
    throw NumericsError("semiclassical_w: first-order term leaves span of basis ⊗ basis");

  Mat wc(alg.dim(), alg.dim());
  for (int k = 0; k < alg.dim(); ++k)
    for (int l = 0; l < alg.dim(); ++l) wc(k, l) = ex.coeffs(k * alg.dim() + l);

  SemiclassicalResult out{m, CoefTensor2{basis, wc}, {}, {}, ex.residual, 0.0};
  auto [sym, anti] = split_sym_anti(out.w);
  out.r = anti;
  out.s = sym * cplx(0, 1);
  out.s_imag_max = out.s.max_imag_coeff();
  return out;
}

}  // namespace quasitri
