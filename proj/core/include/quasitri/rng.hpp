#pragma once

#include <cstdint>

#include "quasitri/tensor.hpp"

namespace quasitri {

/// Deterministic, platform-independent random stream. Streams are split from a
/// master seed per sample index, so results do not depend on evaluation order.
class SampleRng {
 public:
  explicit SampleRng(std::uint64_t seed, std::uint64_t stream = 0);

  std::uint64_t next_u64();
  /// Uniform in [-1, 1].
  double uniform_signed();
  /// Uniform in [lo, hi].
  double uniform(double lo, double hi);

  SampleRng split(std::uint64_t stream) const;

 private:
  std::uint64_t state_;
};

/// exp(sum c_k X_k) with coefficients uniform in [-1, 1]; always invertible.
Mat random_group_point(const LieAlgebraRep& alg, SampleRng& rng);

CoefTensor2 random_tensor2(const AlgebraPtr& alg, SampleRng& rng);
CoefTensor2 random_antisym_tensor2(const AlgebraPtr& alg, SampleRng& rng);

}  // namespace quasitri
