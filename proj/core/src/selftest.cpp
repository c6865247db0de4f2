#include "wg/selftest.hpp"

#include <chrono>
#include <filesystem>
#include <fstream>
#include <functional>
#include <random>

#include "wg/character_oracle.hpp"
#include "wg/characters.hpp"
#include "wg/errors.hpp"
#include "wg/hyperoctahedral.hpp"
#include "wg/integrator.hpp"
#include "wg/jack.hpp"
#include "wg/spherical.hpp"
#include "wg/symfunc.hpp"

namespace wg {

namespace {

using Rng = std::mt19937_64;

Permutation random_permutation(int n, Rng& gen) {
  std::vector<int> img(n);
  for (int i = 0; i < n; ++i) img[i] = i + 1;
  for (int i = n - 1; i > 0; --i) {
    const int j = static_cast<int>(gen() % (i + 1));
    std::swap(img[i], img[j]);
  }
  return Permutation(std::move(img));
}

Rational random_rational(Rng& gen) {
  const long long num = 1 + static_cast<long long>(gen() % 4);
  const long long den = 1 + static_cast<long long>(gen() % 3);
  const bool negative = gen() & 1;
  return make_rational(negative ? -num : num, den);
}

// chi table for S_n as a dense matrix in partitions_of(n) order.
std::vector<std::vector<long long>> dense_characters(int n) {
  preload_characters(n);
  const auto& parts = partitions_of(n);
  std::vector<std::vector<long long>> chi(parts.size(),
                                          std::vector<long long>(parts.size()));
  for (std::size_t i = 0; i < parts.size(); ++i)
    for (std::size_t j = 0; j < parts.size(); ++j)
      chi[i][j] = character(parts[i], parts[j]);
  return chi;
}

// ---- suites ----------------------------------------------------------

std::string suite_character_orthogonality(int level, Rng& gen) {
  for (int n = 1; n <= std::min(level, 6); ++n) {
    const auto chi = dense_characters(n);
    const auto& parts = partitions_of(n);
    const auto perms = all_permutations(n);
    std::vector<Permutation> sigmas{Permutation::identity(n)};
    sigmas.push_back(random_permutation(n, gen));
    sigmas.push_back(random_permutation(n, gen));

    std::vector<int> tau_type(perms.size());
    for (std::size_t t = 0; t < perms.size(); ++t)
      tau_type[t] = partition_index(n, perms[t].cycle_type());

    for (const Permutation& sigma : sigmas) {
      std::vector<int> prod_type(perms.size());
      for (std::size_t t = 0; t < perms.size(); ++t)
        prod_type[t] = partition_index(n, compose(perms[t], sigma).cycle_type());

      for (std::size_t im = 0; im < parts.size(); ++im)
        for (std::size_t il = 0; il < parts.size(); ++il) {
          long long lhs = 0;
          for (std::size_t t = 0; t < perms.size(); ++t)
            lhs += chi[im][tau_type[t]] * chi[il][prod_type[t]];
          Rational rhs = 0;
          if (im == il)
            rhs = Rational(factorial(n)) *
                  make_rational(chi[il][partition_index(n, sigma.cycle_type())]) /
                  make_rational(irrep_dimension(parts[il]));
          if (make_rational(lhs) != rhs)
            return "n=" + std::to_string(n) + " mu=" + parts[im].to_string() +
                   " lambda=" + parts[il].to_string() +
                   " sigma=" + sigma.to_string();
        }
    }
  }
  return {};
}

std::string suite_character_oracle(int level) {
  for (int n = 1; n <= std::min(level, 6); ++n) {
    const auto& parts = partitions_of(n);
    for (const Partition& lambda : parts)
      for (const Partition& mu : parts)
        if (character(lambda, mu) != character_oracle(lambda, mu))
          return "n=" + std::to_string(n) + " lambda=" + lambda.to_string() +
                 " mu=" + mu.to_string();
  }
  return {};
}

std::string suite_zonal_orthogonality(int level, Rng& gen) {
  for (int n = 1; n <= std::min(level, 4); ++n) {
    const auto& parts = partitions_of(n);
    const auto reps = matchings(n);
    const Rational scale =
        Rational(factorial(2 * n)) / Rational(int_pow(2, n) * factorial(n));

    for (int rep = 0; rep < 3; ++rep) {
      const Permutation sigma = random_permutation(2 * n, gen);
      std::vector<Partition> tau_types, prod_types;
      tau_types.reserve(reps.size());
      prod_types.reserve(reps.size());
      for (const Matching& m : reps) {
        tau_types.push_back(coset_type(m.perm()));
        prod_types.push_back(coset_type(compose(m.perm().inverse(), sigma)));
      }
      const Partition sigma_type = coset_type(sigma);

      for (const Partition& lambda : parts)
        for (const Partition& mu : parts) {
          Rational lhs = 0;
          for (std::size_t t = 0; t < reps.size(); ++t)
            lhs += zonal_spherical_class(lambda, tau_types[t]) *
                   zonal_spherical_class(mu, prod_types[t]);
          Rational rhs = 0;
          if (lambda == mu)
            rhs = scale * zonal_spherical_class(lambda, sigma_type) /
                  make_rational(irrep_dimension(lambda.doubled()));
          if (lhs != rhs)
            return "n=" + std::to_string(n) + " lambda=" + lambda.to_string() +
                   " mu=" + mu.to_string() + " sigma=" + sigma.to_string();
        }
    }
  }
  return {};
}

std::string suite_zonal_completeness(int level, Rng& gen) {
  for (int n = 1; n <= std::min(level, 4); ++n) {
    const auto& parts = partitions_of(n);
    std::vector<Permutation> samples;
    for (const Partition& type : parts)
      samples.push_back(doubled_perm(Permutation::with_cycle_type(type)));
    samples.push_back(random_permutation(2 * n, gen));
    samples.push_back(random_permutation(2 * n, gen));

    for (const Permutation& sigma : samples)
      for (const Permutation& tau : samples) {
        const Partition st = coset_type(sigma), tt = coset_type(tau);
        Rational lhs = 0;
        for (const Partition& lambda : parts)
          lhs += make_rational(irrep_dimension(lambda.doubled())) *
                 zonal_spherical_class(lambda, st) *
                 zonal_spherical_class(lambda, tt);
        Rational rhs = 0;
        if (st == tt)
          rhs = Rational(factorial(2 * n)) / make_rational(double_coset_size(tt));
        if (lhs != rhs)
          return "n=" + std::to_string(n) + " sigma=" + sigma.to_string() +
                 " tau=" + tau.to_string();
      }
  }
  return {};
}

std::string suite_twisted_orthogonality(int level, Rng& gen) {
  for (int n = 1; n <= std::min(level, 3); ++n) {
    const auto& parts = partitions_of(n);
    const auto reps = matchings(n);
    const Rational scale =
        Rational(factorial(2 * n)) / Rational(int_pow(2, n) * factorial(n));

    for (int rep = 0; rep < 3; ++rep) {
      const Permutation sigma = random_permutation(2 * n, gen);
      for (const Partition& lambda : parts)
        for (const Partition& mu : parts) {
          Rational lhs = 0;
          for (const Matching& m : reps)
            lhs += twisted_spherical(lambda, m.perm()) *
                   twisted_spherical(mu, compose(m.perm().inverse(), sigma));
          Rational rhs = 0;
          if (lambda == mu)
            rhs = scale * twisted_spherical(lambda, sigma) /
                  make_rational(irrep_dimension(lambda.interleaved()));
          if (lhs != rhs)
            return "n=" + std::to_string(n) + " lambda=" + lambda.to_string() +
                   " mu=" + mu.to_string() + " sigma=" + sigma.to_string();
        }
    }
  }
  return {};
}

std::string suite_twisted_completeness(int level, Rng& gen) {
  for (int n = 1; n <= std::min(level, 3); ++n) {
    const auto& parts = partitions_of(n);
    std::vector<Permutation> samples;
    for (const Partition& type : parts)
      samples.push_back(doubled_perm(Permutation::with_cycle_type(type)));
    samples.push_back(random_permutation(2 * n, gen));
    samples.push_back(random_permutation(2 * n, gen));

    for (const Permutation& sigma : samples)
      for (const Permutation& tau : samples) {
        Rational lhs = 0;
        for (const Partition& lambda : parts)
          lhs += make_rational(irrep_dimension(lambda.interleaved())) *
                 twisted_spherical(lambda, sigma) *
                 twisted_spherical(lambda, tau);
        Rational rhs = 0;
        const Partition st = coset_type(sigma), tt = coset_type(tau);
        if (st == tt) {
          rhs = Rational(factorial(2 * n)) / make_rational(double_coset_size(st));
          if (sigma.sign() * tau.sign() < 0) rhs = -rhs;
        }
        if (lhs != rhs)
          return "n=" + std::to_string(n) + " sigma=" + sigma.to_string() +
                 " tau=" + tau.to_string();
      }
  }
  return {};
}

// Shared helpers for the delta-sum identities.

Rational unitary_delta_sum(const Permutation& tau, const Permutation& sigma,
                           const std::vector<Rational>& y) {
  const int n = tau.degree();
  const int N = static_cast<int>(y.size());
  std::vector<int> j(n, 1), m(n, 1);
  Rational total = 0;
  for (;;) {
    // m is forced by delta_tau: m[tau(k)] = j[k].
    for (int k = 1; k <= n; ++k) m[tau(k) - 1] = j[k - 1];
    bool ok = true;
    for (int k = 1; k <= n && ok; ++k) ok = j[k - 1] == m[sigma(k) - 1];
    if (ok) {
      Rational term = 1;
      for (int k = 0; k < n; ++k) term *= y[j[k] - 1] * y[m[k] - 1];
      total += term;
    }
    int k = n - 1;
    while (k >= 0 && j[k] == N) j[k--] = 1;
    if (k < 0) break;
    ++j[k];
  }
  return total;
}

Rational paired_delta_sum(const Permutation& tau, const Permutation& sigma,
                          const std::vector<Rational>& y, int N,
                          bool symplectic) {
  const int deg = tau.degree();
  const int bound = symplectic ? 2 * N : N;
  std::vector<int> j(deg, 1);
  Rational total = 0;
  for (;;) {
    const int dt = symplectic ? delta_pairing_symplectic(tau, j, N)
                              : delta_pairing(tau, j, N);
    if (dt != 0) {
      const int ds = symplectic ? delta_pairing_symplectic(sigma, j, N)
                                : delta_pairing(sigma, j, N);
      if (ds != 0) {
        Rational term(dt * ds);
        for (int k = 0; k < deg; ++k) term *= y[j[k] - 1];
        total += term;
      }
    }
    int k = deg - 1;
    while (k >= 0 && j[k] == bound) j[k--] = 1;
    if (k < 0) break;
    ++j[k];
  }
  return total;
}

std::string suite_delta_power_sums(int level, Rng& gen) {
  for (int n = 1; n <= std::min(level, 3); ++n) {
    for (const int N : {2, 4}) {
      std::vector<Rational> y;
      for (int i = 0; i < N; ++i) y.push_back(random_rational(gen));
      std::vector<Rational> x;
      for (int i = 0; i < N; ++i) x.push_back(y[i] * y[i]);

      // Unitary deltas against p_{cycle type}.
      for (int rep = 0; rep < 3; ++rep) {
        const Permutation tau = random_permutation(n, gen);
        const Permutation sigma = random_permutation(n, gen);
        const Rational lhs = unitary_delta_sum(tau, sigma, y);
        const Rational rhs =
            power_sum(compose(tau.inverse(), sigma).cycle_type(), x);
        if (lhs != rhs)
          return "unitary n=" + std::to_string(n) + " N=" + std::to_string(N) +
                 " tau=" + tau.to_string() + " sigma=" + sigma.to_string();
      }

      // Orthogonal pairing deltas against p_{coset type}.
      for (int rep = 0; rep < 3; ++rep) {
        const Permutation tau = random_permutation(2 * n, gen);
        const Permutation sigma = random_permutation(2 * n, gen);
        const Rational lhs = paired_delta_sum(tau, sigma, y, N, false);
        const Rational rhs =
            power_sum(coset_type(compose(tau.inverse(), sigma)), x);
        if (lhs != rhs)
          return "orthogonal n=" + std::to_string(n) +
                 " N=" + std::to_string(N) + " tau=" + tau.to_string() +
                 " sigma=" + sigma.to_string();
      }

      // Symplectic deltas: doubled index range with y repeated.
      std::vector<Rational> ysp(y);
      ysp.insert(ysp.end(), y.begin(), y.end());
      for (int rep = 0; rep < 3; ++rep) {
        const Permutation tau = random_permutation(2 * n, gen);
        const Permutation sigma = random_permutation(2 * n, gen);
        const Rational lhs = paired_delta_sum(tau, sigma, ysp, N, true);
        const Partition type = coset_type(compose(tau.inverse(), sigma));
        Rational rhs = power_sum(type, x);
        Rational factor = int_pow(-2, type.length());
        if (n % 2) factor = -factor;
        if (tau.sign() * sigma.sign() < 0) factor = -factor;
        rhs *= factor;
        if (lhs != rhs)
          return "symplectic n=" + std::to_string(n) +
                 " N=" + std::to_string(N) + " tau=" + tau.to_string() +
                 " sigma=" + sigma.to_string();
      }
    }
  }
  return {};
}

std::string suite_jack_schur(int level) {
  for (int n = 1; n <= std::min(level, 6); ++n)
    for (const Partition& lambda : partitions_of(n))
      for (int N = 1; N <= 6; ++N) {
        const Rational direct = jack_at_ones(lambda, JackAlpha::Schur, N);
        const Rational via_schur = Rational(factorial(n)) *
                                   schur_at_ones(lambda, N) /
                                   make_rational(irrep_dimension(lambda));
        if (direct != via_schur)
          return "lambda=" + lambda.to_string() + " N=" + std::to_string(N);
      }
  return {};
}

std::string suite_integrator_sum_rules(int level) {
  // Unitary: sum_b <U_ab conj(U_a'b)> = delta_aa'.
  for (int N = 1; N <= std::min(4, level + 1); ++N)
    for (int a = 1; a <= N; ++a)
      for (int ap = 1; ap <= N; ++ap) {
        Rational total = 0;
        for (int bcol = 1; bcol <= N; ++bcol) {
          MomentSpec spec{GroupKind::Unitary, N, {a}, {bcol}, {bcol}, {ap}};
          total += integrate_unitary(spec);
        }
        if (total != Rational(a == ap ? 1 : 0))
          return "unitary N=" + std::to_string(N) + " a=" + std::to_string(a) +
                 " a'=" + std::to_string(ap);
      }

  // Orthogonal: sum_b <O_ab O_a'b> = delta_aa'.
  for (int N = 1; N <= std::min(4, level + 1); ++N)
    for (int a = 1; a <= N; ++a)
      for (int ap = 1; ap <= N; ++ap) {
        Rational total = 0;
        for (int bcol = 1; bcol <= N; ++bcol) {
          MomentSpec spec{GroupKind::Orthogonal, N, {a, ap}, {bcol, bcol}, {}, {}};
          total += integrate_orthogonal(spec);
        }
        if (total != Rational(a == ap ? 1 : 0))
          return "orthogonal N=" + std::to_string(N) + " a=" + std::to_string(a) +
                 " a'=" + std::to_string(ap);
      }

  // Symplectic: sum_b <S_ab (S^D)_ba'> = delta_aa' with
  // (S^D)_ba' = sgn(b) sgn(a') S_{swap(a'), swap(b)}.
  for (int N = 1; N <= std::min(3, level); ++N) {
    auto swap_half = [N](int i) { return i <= N ? i + N : i - N; };
    auto half_sign = [N](int i) { return i <= N ? 1 : -1; };
    for (int a = 1; a <= 2 * N; ++a)
      for (int ap = 1; ap <= 2 * N; ++ap) {
        Rational total = 0;
        for (int bcol = 1; bcol <= 2 * N; ++bcol) {
          MomentSpec spec{GroupKind::Symplectic,
                          N,
                          {a, swap_half(ap)},
                          {bcol, swap_half(bcol)},
                          {},
                          {}};
          total += make_rational(half_sign(bcol) * half_sign(ap)) *
                   integrate_symplectic(spec);
        }
        if (total != Rational(a == ap ? 1 : 0))
          return "symplectic N=" + std::to_string(N) + " a=" + std::to_string(a) +
                 " a'=" + std::to_string(ap);
      }
  }
  return {};
}

std::string suite_character_cache(const std::string& dir) {
  namespace fs = std::filesystem;
  if (!fs::exists(dir)) return {};  // nothing to verify is a pass
  for (const auto& entry : fs::directory_iterator(dir)) {
    const std::string name = entry.path().filename().string();
    if (name.rfind("characters_n", 0) != 0 || entry.path().extension() != ".txt")
      continue;
    std::ifstream in(entry.path());
    if (!in) return name + ": cannot open";
    if (auto problem = verify_character_snapshot(in))
      return name + ": " + *problem;
  }
  return {};
}

}  // namespace

std::vector<SelfTestResult> run_selftests(const SelfTestOptions& options) {
  if (options.level < 1)
    throw std::invalid_argument("selftest: level must be positive");
  if (options.level > kMaxSelfTestLevel)
    throw unsupported_scale_error("selftest: level > 6 not supported");

  Rng gen(options.seed);
  std::vector<std::pair<std::string, std::function<std::string()>>> suites;
  const int level = options.level;

  suites.emplace_back("character-orthogonality",
                      [&] { return suite_character_orthogonality(level, gen); });
  suites.emplace_back("character-oracle",
                      [&] { return suite_character_oracle(level); });
  suites.emplace_back("zonal-orthogonality",
                      [&] { return suite_zonal_orthogonality(level, gen); });
  suites.emplace_back("zonal-completeness",
                      [&] { return suite_zonal_completeness(level, gen); });
  suites.emplace_back("twisted-orthogonality",
                      [&] { return suite_twisted_orthogonality(level, gen); });
  suites.emplace_back("twisted-completeness",
                      [&] { return suite_twisted_completeness(level, gen); });
  suites.emplace_back("delta-power-sums",
                      [&] { return suite_delta_power_sums(level, gen); });
  suites.emplace_back("jack-schur", [&] { return suite_jack_schur(level); });
  suites.emplace_back("integrator-sum-rules",
                      [&] { return suite_integrator_sum_rules(level); });
  if (!options.cache_dir.empty())
    suites.emplace_back("character-cache",
                        [&] { return suite_character_cache(options.cache_dir); });

  std::vector<SelfTestResult> results;
  results.reserve(suites.size());
  for (auto& [name, fn] : suites) {
    const auto start = std::chrono::steady_clock::now();
    std::string detail;
    bool passed = false;
    try {
      detail = fn();
      passed = detail.empty();
    } catch (const std::exception& e) {
      detail = e.what();
    }
    const std::chrono::duration<double> elapsed =
        std::chrono::steady_clock::now() - start;
    results.push_back(SelfTestResult{name, passed, detail, elapsed.count()});
  }
  return results;
}

}  // namespace wg
