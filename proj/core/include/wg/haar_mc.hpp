#pragma once

#include <Eigen/Dense>

#include <complex>
#include <cstdint>
#include <vector>

#include "wg/integrator.hpp"

namespace wg {

// Splittable counter-based generator: the stream for sample k is a pure
// function of (seed, k), so parallel workers can draw independent streams
// without coordination and results do not depend on scheduling.
class CounterRng {
 public:
  CounterRng(std::uint64_t seed, std::uint64_t stream);

  std::uint64_t next_u64();
  double next_unit();      // [0, 1), 53-bit
  double next_gaussian();  // standard normal via the polar method

 private:
  std::uint64_t state_;
  double spare_ = 0.0;
  bool has_spare_ = false;
};

// Haar samplers. The unitary and orthogonal matrices come from Gaussian
// matrices via QR with the R-diagonal phase (resp. sign) absorbed; both
// satisfy max|U^dag U - 1| < 1e-12 at the supported sizes. The symplectic
// sampler builds a 2N x 2N unitary with the quaternionic block structure
// [[A, B], [-conj(B), conj(A)]] by structure-preserving Gram-Schmidt and
// verifies unitarity and U^T J U = J to 1e-10 on every draw (one retry, then
// numerical_failure_error).
Eigen::MatrixXcd sample_unitary(int N, CounterRng& rng);
Eigen::MatrixXd sample_orthogonal(int N, CounterRng& rng);
Eigen::MatrixXcd sample_symplectic(int N, CounterRng& rng);

struct SampleEstimate {
  std::complex<double> mean;
  double stderr_value = 0.0;  // sqrt(sample variance / samples)
  long long samples = 0;
  std::uint64_t seed = 0;
};

// Monte-Carlo estimate of a moment. samples >= 1000. threads == 0 picks the
// hardware concurrency; the result is bit-identical for a fixed (spec,
// samples, seed) regardless of the worker count, because samples are
// accumulated in fixed-size chunks reduced in chunk order.
SampleEstimate estimate_moment(const MomentSpec& spec, long long samples,
                               std::uint64_t seed, int threads = 0);

// Same, evaluating several moments of one group/dimension against a shared
// sample stream; entry i is bit-identical to estimate_moment(specs[i], ...).
std::vector<SampleEstimate> estimate_moments(const std::vector<MomentSpec>& specs,
                                             long long samples,
                                             std::uint64_t seed,
                                             int threads = 0);

}  // namespace wg
