#include "wg/spherical.hpp"

#include <map>
#include <mutex>
#include <shared_mutex>
#include <stdexcept>
#include <vector>

#include "wg/characters.hpp"
#include "wg/hyperoctahedral.hpp"

namespace wg {

namespace {

class SphericalCache {
 public:
  static SphericalCache& instance() {
    static SphericalCache* cache = new SphericalCache;
    return *cache;
  }

  Rational zonal(int n, const Partition& lambda, const Partition& type) {
    return lookup(n, lambda, type, /*twisted=*/false);
  }

  Rational twisted_signed(int n, const Partition& lambda, const Partition& type) {
    return lookup(n, lambda, type, /*twisted=*/true);
  }

 private:
  struct Level {
    // [type][lambda], filled one coset type at a time.
    std::vector<std::vector<Rational>> zonal, twisted_signed;
    std::vector<char> filled;
  };

  Rational lookup(int n, const Partition& lambda, const Partition& type,
                  bool twisted) {
    const int il = partition_index(n, lambda);
    const int it = partition_index(n, type);
    {
      std::shared_lock lock(mu_);
      auto found = levels_.find(n);
      if (found != levels_.end() && found->second.filled[it]) {
        const Level& lvl = found->second;
        return twisted ? lvl.twisted_signed[it][il] : lvl.zonal[it][il];
      }
    }
    std::unique_lock lock(mu_);
    Level& lvl = levels_[n];
    if (lvl.filled.empty()) {
      const std::size_t types = partitions_of(n).size();
      lvl.zonal.resize(types);
      lvl.twisted_signed.resize(types);
      lvl.filled.assign(types, 0);
    }
    if (!lvl.filled[it]) fill_type(n, it, lvl);
    return twisted ? lvl.twisted_signed[it][il] : lvl.zonal[it][il];
  }

  // One pass over H_n computes both function families for every lambda at
  // once; characters are prefetched into dense rows first.
  void fill_type(int n, int type_index, Level& lvl) {
    const auto& lambdas = partitions_of(n);
    const auto& classes = partitions_of(2 * n);
    const std::size_t nl = lambdas.size();
    const std::size_t nc = classes.size();

    preload_characters(2 * n);
    std::vector<std::vector<long long>> chi_doubled(nl), chi_paired(nl);
    for (std::size_t i = 0; i < nl; ++i) {
      chi_doubled[i].resize(nc);
      chi_paired[i].resize(nc);
      for (std::size_t c = 0; c < nc; ++c) {
        chi_doubled[i][c] = character(lambdas[i].doubled(), classes[c]);
        chi_paired[i][c] = character(lambdas[i].interleaved(), classes[c]);
      }
    }

    const Partition& type = lambdas[type_index];
    const Permutation rep = doubled_perm(Permutation::with_cycle_type(type));
    const int rep_sign = rep.sign();

    std::vector<long long> acc_zonal(nl, 0), acc_twisted(nl, 0);
    std::vector<int> product(2 * n);
    for_each_hyperoctahedral(n, [&](const std::vector<int>& xi, int parity) {
      for (int k = 0; k < 2 * n; ++k) product[k] = rep(xi[k]);
      const std::size_t c = cycle_type_index(product);
      for (std::size_t i = 0; i < nl; ++i) {
        acc_zonal[i] += chi_doubled[i][c];
        acc_twisted[i] += parity * chi_paired[i][c];
      }
    });

    const Rational order = make_rational(hyperoctahedral_order(n));
    lvl.zonal[type_index].resize(nl);
    lvl.twisted_signed[type_index].resize(nl);
    for (std::size_t i = 0; i < nl; ++i) {
      Rational z = make_rational(acc_zonal[i]);
      Rational t = make_rational(static_cast<long long>(rep_sign) * acc_twisted[i]);
      lvl.zonal[type_index][i] = z / order;
      lvl.twisted_signed[type_index][i] = t / order;
    }
    lvl.filled[type_index] = 1;
  }

  // Cycle type of an image list, as an index into partitions_of(degree).
  std::size_t cycle_type_index(const std::vector<int>& images) {
    const int deg = static_cast<int>(images.size());
    std::vector<int> lengths;
    std::vector<char> seen(deg, 0);
    for (int i = 0; i < deg; ++i) {
      if (seen[i]) continue;
      int len = 0, j = i;
      while (!seen[j]) {
        seen[j] = 1;
        j = images[j] - 1;
        ++len;
      }
      lengths.push_back(len);
    }
    std::sort(lengths.rbegin(), lengths.rend());
    return partition_index(deg, Partition(std::move(lengths)));
  }

  std::map<int, Level> levels_;
  std::shared_mutex mu_;
};

void check_degrees(const Partition& lambda, const Permutation& tau) {
  if (tau.degree() != 2 * lambda.sum() || lambda.sum() == 0)
    throw std::invalid_argument("spherical: need deg(tau) = 2|lambda| > 0");
}

}  // namespace

Rational zonal_spherical(const Partition& lambda, const Permutation& tau) {
  check_degrees(lambda, tau);
  return SphericalCache::instance().zonal(lambda.sum(), lambda, coset_type(tau));
}

Rational twisted_spherical(const Partition& lambda, const Permutation& tau) {
  check_degrees(lambda, tau);
  const Rational signed_value = SphericalCache::instance().twisted_signed(
      lambda.sum(), lambda, coset_type(tau));
  return tau.sign() < 0 ? Rational(-signed_value) : signed_value;
}

Rational zonal_spherical_class(const Partition& lambda,
                               const Partition& coset_type) {
  if (lambda.sum() != coset_type.sum() || lambda.sum() == 0)
    throw std::invalid_argument("spherical: |lambda| != |coset type|");
  return SphericalCache::instance().zonal(lambda.sum(), lambda, coset_type);
}

Rational twisted_spherical_signed(const Partition& lambda,
                                  const Partition& coset_type) {
  if (lambda.sum() != coset_type.sum() || lambda.sum() == 0)
    throw std::invalid_argument("spherical: |lambda| != |coset type|");
  return SphericalCache::instance().twisted_signed(lambda.sum(), lambda,
                                                   coset_type);
}

}  // namespace wg
