#include "wg/haar_mc.hpp"

#include <atomic>
#include <cmath>
#include <stdexcept>
#include <thread>

#include "wg/errors.hpp"

namespace wg {

namespace {

inline std::uint64_t mix64(std::uint64_t z) {
  z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
  z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
  return z ^ (z >> 31);
}

}  // namespace

CounterRng::CounterRng(std::uint64_t seed, std::uint64_t stream)
    : state_(mix64(seed ^ mix64(stream * 0x9e3779b97f4a7c15ULL +
                                0x2545f4914f6cdd1dULL))) {}

std::uint64_t CounterRng::next_u64() {
  state_ += 0x9e3779b97f4a7c15ULL;
  return mix64(state_);
}

double CounterRng::next_unit() {
  return static_cast<double>(next_u64() >> 11) * 0x1.0p-53;
}

double CounterRng::next_gaussian() {
  if (has_spare_) {
    has_spare_ = false;
    return spare_;
  }
  double u, v, s;
  do {
    u = 2.0 * next_unit() - 1.0;
    v = 2.0 * next_unit() - 1.0;
    s = u * u + v * v;
  } while (s >= 1.0 || s == 0.0);
  const double scale = std::sqrt(-2.0 * std::log(s) / s);
  spare_ = v * scale;
  has_spare_ = true;
  return u * scale;
}

namespace {

Eigen::MatrixXcd gaussian_complex(int rows, int cols, CounterRng& rng) {
  Eigen::MatrixXcd m(rows, cols);
  for (int j = 0; j < cols; ++j)
    for (int i = 0; i < rows; ++i) {
      const double re = rng.next_gaussian();
      const double im = rng.next_gaussian();
      m(i, j) = std::complex<double>(re, im);
    }
  return m;
}

void check_dimension(int N) {
  if (N < 1) throw std::invalid_argument("sampler: N must be positive");
}

}  // namespace

Eigen::MatrixXcd sample_unitary(int N, CounterRng& rng) {
  check_dimension(N);
  const Eigen::MatrixXcd a = gaussian_complex(N, N, rng);
  Eigen::HouseholderQR<Eigen::MatrixXcd> qr(a);
  Eigen::MatrixXcd u = qr.householderQ();
  const Eigen::MatrixXcd& r = qr.matrixQR();
  for (int j = 0; j < N; ++j) {
    const std::complex<double> d = r(j, j);
    const double mag = std::abs(d);
    u.col(j) *= mag > 0 ? d / mag : 1.0;
  }
  return u;
}

Eigen::MatrixXd sample_orthogonal(int N, CounterRng& rng) {
  check_dimension(N);
  Eigen::MatrixXd a(N, N);
  for (int j = 0; j < N; ++j)
    for (int i = 0; i < N; ++i) a(i, j) = rng.next_gaussian();
  Eigen::HouseholderQR<Eigen::MatrixXd> qr(a);
  Eigen::MatrixXd q = qr.householderQ();
  const Eigen::MatrixXd& r = qr.matrixQR();
  for (int j = 0; j < N; ++j)
    if (r(j, j) < 0) q.col(j) = -q.col(j);
  return q;
}

namespace {

constexpr double kSymplecticTol = 1e-10;

// Quaternionic partner of a column: (x, y) -> (-conj(y), conj(x)).
Eigen::VectorXcd partner(const Eigen::VectorXcd& v, int N) {
  Eigen::VectorXcd w(2 * N);
  w.head(N) = -v.tail(N).conjugate();
  w.tail(N) = v.head(N).conjugate();
  return w;
}

bool try_sample_symplectic(int N, CounterRng& rng, Eigen::MatrixXcd& out) {
  const Eigen::MatrixXcd a = gaussian_complex(N, N, rng);
  const Eigen::MatrixXcd b = gaussian_complex(N, N, rng);

  Eigen::MatrixXcd u(2 * N, 2 * N);
  for (int j = 0; j < N; ++j) {
    Eigen::VectorXcd v(2 * N);
    v.head(N) = a.col(j);
    v.tail(N) = -b.col(j).conjugate();
    for (int pass = 0; pass < 2; ++pass)
      for (int i = 0; i < j; ++i) {
        v -= u.col(i) * (u.col(i).dot(v));
        v -= u.col(N + i) * (u.col(N + i).dot(v));
      }
    const double norm = v.norm();
    if (!(norm > 0)) return false;
    v /= norm;
    u.col(j) = v;
    u.col(N + j) = partner(v, N);
  }

  const double unitarity =
      (u.adjoint() * u - Eigen::MatrixXcd::Identity(2 * N, 2 * N))
          .cwiseAbs()
          .maxCoeff();
  if (unitarity > kSymplecticTol) return false;

  // J U with J = [[0, 1], [-1, 0]] in N x N blocks.
  Eigen::MatrixXcd ju(2 * N, 2 * N);
  ju.topRows(N) = u.bottomRows(N);
  ju.bottomRows(N) = -u.topRows(N);
  Eigen::MatrixXcd form = u.transpose() * ju;
  form.topRightCorner(N, N) -= Eigen::MatrixXcd::Identity(N, N);
  form.bottomLeftCorner(N, N) += Eigen::MatrixXcd::Identity(N, N);
  if (form.cwiseAbs().maxCoeff() > kSymplecticTol) return false;

  out = std::move(u);
  return true;
}

}  // namespace

Eigen::MatrixXcd sample_symplectic(int N, CounterRng& rng) {
  check_dimension(N);
  Eigen::MatrixXcd u;
  for (int attempt = 0; attempt < 2; ++attempt)
    if (try_sample_symplectic(N, rng, u)) return u;
  throw numerical_failure_error(
      "sample_symplectic: structure residual above tolerance twice");
}

namespace {

std::complex<double> evaluate_monomial(const MomentSpec& spec,
                                       const Eigen::MatrixXcd& mc,
                                       const Eigen::MatrixXd& mr) {
  std::complex<double> value = 1.0;
  switch (spec.group) {
    case GroupKind::Unitary:
      for (std::size_t k = 0; k < spec.a.size(); ++k)
        value *= mc(spec.a[k] - 1, spec.b[k] - 1);
      for (std::size_t k = 0; k < spec.d.size(); ++k)
        value *= std::conj(mc(spec.d[k] - 1, spec.c[k] - 1));
      return value;
    case GroupKind::Orthogonal: {
      double real = 1.0;
      for (std::size_t k = 0; k < spec.a.size(); ++k)
        real *= mr(spec.a[k] - 1, spec.b[k] - 1);
      return real;
    }
    case GroupKind::Symplectic:
      for (std::size_t k = 0; k < spec.a.size(); ++k)
        value *= mc(spec.a[k] - 1, spec.b[k] - 1);
      return value;
  }
  return value;
}

constexpr long long kChunk = 4096;

}  // namespace

std::vector<SampleEstimate> estimate_moments(const std::vector<MomentSpec>& specs,
                                             long long samples,
                                             std::uint64_t seed, int threads) {
  if (specs.empty())
    throw std::invalid_argument("estimate_moments: no specs");
  for (const MomentSpec& spec : specs) {
    spec.validate();
    if (spec.group != specs[0].group || spec.dimension != specs[0].dimension)
      throw std::invalid_argument(
          "estimate_moments: specs must share group and dimension");
  }
  if (samples < 1000)
    throw std::invalid_argument("estimate_moments: need samples >= 1000");

  const GroupKind group = specs[0].group;
  const int N = specs[0].dimension;
  const std::size_t ns = specs.size();
  const long long chunks = (samples + kChunk - 1) / kChunk;

  int workers = threads > 0 ? threads
                            : static_cast<int>(std::thread::hardware_concurrency());
  if (workers < 1) workers = 1;
  workers = static_cast<int>(std::min<long long>(workers, chunks));

  // Per-chunk partial sums, reduced in chunk order afterwards so the result
  // does not depend on the worker count.
  std::vector<std::vector<std::complex<double>>> chunk_sum(
      chunks, std::vector<std::complex<double>>(ns, 0.0));
  std::vector<std::vector<double>> chunk_abs2(chunks,
                                              std::vector<double>(ns, 0.0));

  std::atomic<long long> next_chunk{0};
  auto worker = [&] {
    Eigen::MatrixXcd mc;
    Eigen::MatrixXd mr;
    for (;;) {
      const long long c = next_chunk.fetch_add(1);
      if (c >= chunks) return;
      const long long lo = c * kChunk;
      const long long hi = std::min(samples, lo + kChunk);
      auto& sums = chunk_sum[c];
      auto& abs2 = chunk_abs2[c];
      for (long long k = lo; k < hi; ++k) {
        CounterRng rng(seed, static_cast<std::uint64_t>(k));
        switch (group) {
          case GroupKind::Unitary:
            mc = sample_unitary(N, rng);
            break;
          case GroupKind::Orthogonal:
            mr = sample_orthogonal(N, rng);
            break;
          case GroupKind::Symplectic:
            mc = sample_symplectic(N, rng);
            break;
        }
        for (std::size_t s = 0; s < ns; ++s) {
          const std::complex<double> z = evaluate_monomial(specs[s], mc, mr);
          sums[s] += z;
          abs2[s] += std::norm(z);
        }
      }
    }
  };

  std::vector<std::thread> pool;
  pool.reserve(workers > 1 ? workers : 0);
  if (workers == 1) {
    worker();
  } else {
    for (int t = 0; t < workers; ++t) pool.emplace_back(worker);
    for (std::thread& t : pool) t.join();
  }

  std::vector<SampleEstimate> out(ns);
  for (std::size_t s = 0; s < ns; ++s) {
    std::complex<double> total = 0.0;
    double total_abs2 = 0.0;
    for (long long c = 0; c < chunks; ++c) {
      total += chunk_sum[c][s];
      total_abs2 += chunk_abs2[c][s];
    }
    const double m = static_cast<double>(samples);
    const std::complex<double> mean = total / m;
    double variance = 0.0;
    if (samples > 1)
      variance = std::max(0.0, (total_abs2 - m * std::norm(mean)) / (m - 1.0));
    const double err = std::sqrt(variance / m);
    if (!std::isfinite(mean.real()) || !std::isfinite(mean.imag()) ||
        !std::isfinite(err))
      throw numerical_failure_error("estimate_moments: non-finite accumulation");
    out[s] = SampleEstimate{mean, err, samples, seed};
  }
  return out;
}

SampleEstimate estimate_moment(const MomentSpec& spec, long long samples,
                               std::uint64_t seed, int threads) {
  return estimate_moments({spec}, samples, seed, threads)[0];
}

}  // namespace wg
