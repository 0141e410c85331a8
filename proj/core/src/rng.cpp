#include "quasitri/rng.hpp"

#include <unsupported/Eigen/MatrixFunctions>

namespace quasitri {

namespace {

std::uint64_t splitmix64(std::uint64_t& x) {
  x += 0x9E3779B97F4A7C15ull;
  std::uint64_t z = x;
  z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ull;
  z = (z ^ (z >> 27)) * 0x94D049BB133111EBull;
  return z ^ (z >> 31);
}

}  // namespace

SampleRng::SampleRng(std::uint64_t seed, std::uint64_t stream) {
  state_ = seed;
  (void)splitmix64(state_);
  state_ ^= 0xA076'1D64'78BD'642Full * (stream + 1);
  (void)splitmix64(state_);
}

std::uint64_t SampleRng::next_u64() { return splitmix64(state_); }

double SampleRng::uniform_signed() { return 2.0 * uniform(0.0, 1.0) - 1.0; }

double SampleRng::uniform(double lo, double hi) {
  const double u = static_cast<double>(next_u64() >> 11) * 0x1.0p-53;
  return lo + (hi - lo) * u;
}

SampleRng SampleRng::split(std::uint64_t stream) const {
  SampleRng out = *this;
  out.state_ ^= 0xD6E8'FEB8'6659'FD93ull * (stream + 1);
  (void)out.next_u64();
  return out;
}

Mat random_group_point(const LieAlgebraRep& alg, SampleRng& rng) {
  Mat x = Mat::Zero(alg.n(), alg.n());
  for (int k = 0; k < alg.dim(); ++k) x += cplx(rng.uniform_signed(), 0.0) * alg.basis(k);
  return x.exp();
}

CoefTensor2 random_tensor2(const AlgebraPtr& alg, SampleRng& rng) {
  const int d = alg->dim();
  Mat c(d, d);
  for (int i = 0; i < d; ++i)
    for (int j = 0; j < d; ++j) c(i, j) = cplx(rng.uniform_signed(), 0.0);
  return {alg, std::move(c)};
}

CoefTensor2 random_antisym_tensor2(const AlgebraPtr& alg, SampleRng& rng) {
  const int d = alg->dim();
  Mat c = Mat::Zero(d, d);
  for (int i = 0; i < d; ++i)
    for (int j = i + 1; j < d; ++j) {
      const cplx v(rng.uniform_signed(), 0.0);
      c(i, j) = v;
      c(j, i) = -v;
    }
  return {alg, std::move(c)};
}

}  // namespace quasitri
