#pragma once

#include <complex>
#include <stdexcept>
#include <string>

#include <Eigen/Dense>

namespace quasitri {

using cplx = std::complex<double>;
using Mat = Eigen::MatrixXcd;
using Vec = Eigen::VectorXcd;

inline constexpr double kDefaultTol = 1e-9;
inline constexpr double kSingularityThreshold = 1e-12;
inline constexpr double kSvdThreshold = 1e-12;  // relative to largest singular value

/// Bad user-supplied data (files, dimensions, violated preconditions).
struct InputError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

/// Numerically meaningless situation (element leaves the algebra, singular matrix).
struct NumericsError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

inline double max_abs(const Mat& m) {
  return m.size() == 0 ? 0.0 : m.cwiseAbs().maxCoeff();
}

inline double max_abs(const Vec& v) {
  return v.size() == 0 ? 0.0 : v.cwiseAbs().maxCoeff();
}

}  // namespace quasitri
