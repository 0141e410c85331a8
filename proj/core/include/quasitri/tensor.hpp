#pragma once

#include <utility>

#include "quasitri/lie_algebra.hpp"

namespace quasitri {

/// Element of g ⊗ g by basis coefficients: t = sum_{kl} coeffs(k,l) X_k ⊗ X_l.
struct CoefTensor2 {
  AlgebraPtr algebra;
  Mat coeffs;  // dim x dim

  CoefTensor2() = default;
  CoefTensor2(AlgebraPtr alg, Mat c);

  /// The n^2 x n^2 matrix sum coeffs(k,l) X_k ⊗ X_l.
  Mat matrix_form() const;

  double max_abs_coeff() const { return max_abs(coeffs); }
  bool is_antisymmetric(double tol = kDefaultTol) const;
  bool is_symmetric(double tol = kDefaultTol) const;
  /// Largest imaginary part over the coefficients (reality predicate helper).
  double max_imag_coeff() const;

  CoefTensor2 operator+(const CoefTensor2& o) const { return {algebra, coeffs + o.coeffs}; }
  CoefTensor2 operator-(const CoefTensor2& o) const { return {algebra, coeffs - o.coeffs}; }
  CoefTensor2 operator*(cplx s) const { return {algebra, s * coeffs}; }
};

/// Element of g ⊗ g ⊗ g by basis coefficients, stored flat with index ((a*d)+b)*d+c.
struct CoefTensor3 {
  AlgebraPtr algebra;
  Vec coeffs;

  CoefTensor3() = default;
  CoefTensor3(AlgebraPtr alg, Vec c);
  static CoefTensor3 zero(AlgebraPtr alg);

  cplx at(int a, int b, int c) const;
  cplx& at(int a, int b, int c);

  /// The n^3 x n^3 matrix sum coeffs(a,b,c) X_a ⊗ X_b ⊗ X_c.
  Mat matrix_form() const;
  double max_abs_coeff() const { return max_abs(coeffs); }
};

/// (symmetric part, antisymmetric part); the parts sum to the input.
std::pair<CoefTensor2, CoefTensor2> split_sym_anti(const CoefTensor2& t);

/// (Ad_g ⊗ Ad_g) t, computed by conjugating each basis leg and re-expanding.
/// Throws NumericsError when conjugation leaves the algebra.
CoefTensor2 adjoint_action2(const Mat& g, const CoefTensor2& t, double tol = kDefaultTol);

/// max_m ‖[X_m ⊗ 1 + 1 ⊗ X_m, matrix_form(t)]‖_max; zero iff t is ad-invariant.
double ad_invariance_residual(const CoefTensor2& t);

/// [w12,w13] + [w12,w23] + [w13,w23] as an element of g ⊗ g ⊗ g.
CoefTensor3 cybe(const CoefTensor2& w);

/// The two mixed obstruction tensors
///   T1 = [r12,w13] + [r12,w23] + [w13,w23]
///   T2 = [w12,w13] + [w12,r23] + [w13,r23].
/// Requires r antisymmetric.
std::pair<CoefTensor3, CoefTensor3> mixed_obstructions(const CoefTensor2& r, const CoefTensor2& w,
                                                       double tol = kDefaultTol);

}  // namespace quasitri
