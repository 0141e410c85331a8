#include "quasitri/tensor.hpp"

namespace quasitri {

namespace {

void check_same_algebra(const CoefTensor2& a, const CoefTensor2& b) {
  if (a.algebra.get() != b.algebra.get()) throw InputError("tensors belong to different algebras");
}

// One leg-pair bracket of u on legs (p1,p2) against v on legs (q1,q2), where the
// two pairs share exactly one leg. The three cases appearing in the quadratic
// obstructions:
//   (12,13): T^{abc} = sum_{ik} u^{ib} v^{kc} c(i,k,a)
//   (12,23): T^{abc} = sum_{ik} u^{ai} v^{kc} c(i,k,b)
//   (13,23): T^{abc} = sum_{ik} u^{ai} v^{bk} c(i,k,c)
enum class LegPair { k12_13, k12_23, k13_23 };

CoefTensor3 leg_bracket(LegPair which, const CoefTensor2& u, const CoefTensor2& v) {
  const auto& alg = *u.algebra;
  const int d = alg.dim();
  CoefTensor3 out = CoefTensor3::zero(u.algebra);
  for (int i = 0; i < d; ++i)
    for (int k = 0; k < d; ++k)
      for (int m = 0; m < d; ++m) {
        const cplx cik = alg.c(i, k, m);
        if (cik == cplx(0, 0)) continue;
        switch (which) {
          case LegPair::k12_13:
            for (int b = 0; b < d; ++b)
              for (int c = 0; c < d; ++c) out.at(m, b, c) += u.coeffs(i, b) * v.coeffs(k, c) * cik;
            break;
          case LegPair::k12_23:
            for (int a = 0; a < d; ++a)
              for (int c = 0; c < d; ++c) out.at(a, m, c) += u.coeffs(a, i) * v.coeffs(k, c) * cik;
            break;
          case LegPair::k13_23:
            for (int a = 0; a < d; ++a)
              for (int b = 0; b < d; ++b) out.at(a, b, m) += u.coeffs(a, i) * v.coeffs(b, k) * cik;
            break;
        }
      }
  return out;
}

CoefTensor3 sum3(const CoefTensor3& a, const CoefTensor3& b, const CoefTensor3& c) {
  return {a.algebra, a.coeffs + b.coeffs + c.coeffs};
}

}  // namespace

CoefTensor2::CoefTensor2(AlgebraPtr alg, Mat c) : algebra(std::move(alg)), coeffs(std::move(c)) {
  const int d = algebra->dim();
  if (coeffs.rows() != d || coeffs.cols() != d) throw InputError("CoefTensor2: coefficient shape mismatch");
}

Mat CoefTensor2::matrix_form() const {
  const auto& alg = *algebra;
  const Eigen::Index n = alg.n();
  Mat out = Mat::Zero(n * n, n * n);
  for (int k = 0; k < alg.dim(); ++k)
    for (int l = 0; l < alg.dim(); ++l)
      if (coeffs(k, l) != cplx(0, 0)) out += coeffs(k, l) * kron(alg.basis(k), alg.basis(l));
  return out;
}

bool CoefTensor2::is_antisymmetric(double tol) const {
  return max_abs(Mat(coeffs + coeffs.transpose())) <= tol;
}

bool CoefTensor2::is_symmetric(double tol) const {
  return max_abs(Mat(coeffs - coeffs.transpose())) <= tol;
}

double CoefTensor2::max_imag_coeff() const { return coeffs.imag().cwiseAbs().maxCoeff(); }

CoefTensor3::CoefTensor3(AlgebraPtr alg, Vec c) : algebra(std::move(alg)), coeffs(std::move(c)) {
  const Eigen::Index d = algebra->dim();
  if (coeffs.size() != d * d * d) throw InputError("CoefTensor3: coefficient size mismatch");
}

CoefTensor3 CoefTensor3::zero(AlgebraPtr alg) {
  const Eigen::Index d = alg->dim();
  return {std::move(alg), Vec::Zero(d * d * d)};
}

cplx CoefTensor3::at(int a, int b, int c) const {
  const int d = algebra->dim();
  return coeffs((static_cast<Eigen::Index>(a) * d + b) * d + c);
}

cplx& CoefTensor3::at(int a, int b, int c) {
  const int d = algebra->dim();
  return coeffs((static_cast<Eigen::Index>(a) * d + b) * d + c);
}

Mat CoefTensor3::matrix_form() const {
  const auto& alg = *algebra;
  const Eigen::Index n = alg.n();
  const int d = alg.dim();
  Mat out = Mat::Zero(n * n * n, n * n * n);
  for (int a = 0; a < d; ++a)
    for (int b = 0; b < d; ++b) {
      const Mat ab = kron(alg.basis(a), alg.basis(b));
      for (int c = 0; c < d; ++c)
        if (at(a, b, c) != cplx(0, 0)) out += at(a, b, c) * kron(ab, alg.basis(c));
    }
  return out;
}

std::pair<CoefTensor2, CoefTensor2> split_sym_anti(const CoefTensor2& t) {
  const Mat sym = 0.5 * (t.coeffs + t.coeffs.transpose());
  const Mat anti = 0.5 * (t.coeffs - t.coeffs.transpose());
  return {CoefTensor2{t.algebra, sym}, CoefTensor2{t.algebra, anti}};
}

CoefTensor2 adjoint_action2(const Mat& g, const CoefTensor2& t, double tol) {
  const Mat a = t.algebra->adjoint_matrix(g, tol);
  return {t.algebra, Mat(a * t.coeffs * a.transpose())};
}

double ad_invariance_residual(const CoefTensor2& t) {
  const auto& alg = *t.algebra;
  const Eigen::Index n = alg.n();
  const Mat m = t.matrix_form();
  const Mat id = Mat::Identity(n, n);
  double res = 0.0;
  for (int k = 0; k < alg.dim(); ++k) {
    const Mat d = kron(alg.basis(k), id) + kron(id, alg.basis(k));
    res = std::max(res, max_abs(Mat(d * m - m * d)));
  }
  return res;
}

CoefTensor3 cybe(const CoefTensor2& w) {
  return sum3(leg_bracket(LegPair::k12_13, w, w), leg_bracket(LegPair::k12_23, w, w),
              leg_bracket(LegPair::k13_23, w, w));
}

std::pair<CoefTensor3, CoefTensor3> mixed_obstructions(const CoefTensor2& r, const CoefTensor2& w,
                                                       double tol) {
  check_same_algebra(r, w);
  if (!r.is_antisymmetric(tol)) throw InputError("mixed_obstructions: r must be antisymmetric");
  CoefTensor3 t1 = sum3(leg_bracket(LegPair::k12_13, r, w), leg_bracket(LegPair::k12_23, r, w),
                        leg_bracket(LegPair::k13_23, w, w));
  CoefTensor3 t2 = sum3(leg_bracket(LegPair::k12_13, w, w), leg_bracket(LegPair::k12_23, w, r),
                        leg_bracket(LegPair::k13_23, w, r));
  return {std::move(t1), std::move(t2)};
}

}  // namespace quasitri
