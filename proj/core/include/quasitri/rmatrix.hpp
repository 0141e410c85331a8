#pragma once

#include <functional>

#include "quasitri/tensor.hpp"

namespace quasitri {

enum class RConvention { kPlain, kHat };

/// An N^2 x N^2 matrix on V ⊗ V with entry R^{ij}_{kl} at row i*N+j, column k*N+l.
struct RMat {
  Eigen::Index N = 0;
  Mat entries;
  RConvention convention = RConvention::kPlain;

  RMat() = default;
  RMat(Eigen::Index n, Mat e, RConvention c);

  static RMat identity(Eigen::Index n, RConvention c = RConvention::kPlain);
};

/// The derived matrices of a plain R: the flip P, R̂ = PR and R̂_21 = P R̂ P.
struct Conventions {
  Mat p;
  RMat rhat;
  RMat r21;
};
Conventions conventions(const RMat& r);

RMat hat_from_plain(const RMat& r);
RMat plain_from_hat(const RMat& rhat);
Mat r21_of_hat(const Mat& rhat, Eigen::Index n);

/// ‖R12 R13 R23 - R23 R13 R12‖_max on V ⊗ V ⊗ V (plain convention).
double qybe_residual(const RMat& r);

/// ‖R̂12 R̂23 R̂12 - R̂23 R̂12 R̂23‖_max (hat convention); vanishes exactly when
/// qybe_residual(P R̂) does.
double braid_residual(const RMat& rhat);

/// R_D := R^{-1}; throws NumericsError for singular input.
RMat drinfeld_rd(const RMat& r);

struct StarReport {
  double self_adjoint_residual;  // ‖R̂ - R̂†‖
  double unitary_residual;       // ‖R̂ R̂† - I‖
  double involutive_residual;    // ‖R̂² - I‖
  bool self_adjoint;
  bool unitary;
  bool involutive;
};
StarReport star_report(const RMat& rhat, double tol = kDefaultTol);

/// A parameterized family q ↦ R(q) in the plain convention.
using RFamily = std::function<Mat(double)>;

struct SemiclassicalResult {
  Mat first_order;  // dR/dq at q = 1
  CoefTensor2 w;    // -i * first_order re-expanded over basis ⊗ basis
  CoefTensor2 r;    // antisymmetric part of w
  CoefTensor2 s;    // i * symmetric part of w
  double expansion_residual;
  double s_imag_max;  // reality check on s
};

/// First order of R(q) = I + (q-1) M + O((q-1)^2) by Richardson-extrapolated
/// central differences; requires R(1) = I. The deformation scale q-1 is
/// normalized to 1 in the returned tensors.
SemiclassicalResult semiclassical_w(const RFamily& family, AlgebraPtr basis,
                                    double tol = kDefaultTol);

}  // namespace quasitri
