#include "wg/weingarten.hpp"

#include <map>
#include <mutex>
#include <shared_mutex>
#include <stdexcept>
#include <tuple>

#include "wg/characters.hpp"
#include "wg/errors.hpp"
#include "wg/hyperoctahedral.hpp"
#include "wg/jack.hpp"
#include "wg/spherical.hpp"

namespace wg {

std::string to_string(GroupKind group) {
  switch (group) {
    case GroupKind::Unitary:
      return "u";
    case GroupKind::Orthogonal:
      return "o";
    case GroupKind::Symplectic:
      return "sp";
  }
  throw std::invalid_argument("group: unknown kind");
}

GroupKind group_from_string(const std::string& s) {
  if (s == "u") return GroupKind::Unitary;
  if (s == "o") return GroupKind::Orthogonal;
  if (s == "sp") return GroupKind::Symplectic;
  throw std::invalid_argument("group: expected one of u, o, sp");
}

namespace {

// Class values memoized per (group, n, class index, N); the symplectic sign
// lives outside this cache.
class WeingartenCache {
 public:
  static WeingartenCache& instance() {
    static WeingartenCache* cache = new WeingartenCache;
    return *cache;
  }

  template <typename ComputeFn>
  Rational get(GroupKind group, int n, int class_index, int N,
               ComputeFn&& compute) {
    const Key key{static_cast<int>(group), n, class_index, N};
    {
      std::shared_lock lock(mu_);
      auto it = values_.find(key);
      if (it != values_.end()) return it->second;
    }
    Rational value = compute();
    std::unique_lock lock(mu_);
    return values_.emplace(key, std::move(value)).first->second;
  }

 private:
  using Key = std::tuple<int, int, int, int>;
  std::map<Key, Rational> values_;
  std::shared_mutex mu_;
};

void check_dimension(int N) {
  if (N < 1) throw std::invalid_argument("weingarten: N must be positive");
}

Rational compute_unitary(const Partition& type, int N) {
  const int n = type.sum();
  Rational sum = 0;
  for (const Partition& lambda : partitions_of(n)) {
    if (lambda.length() > N) continue;
    const Rational jack = jack_at_ones(lambda, JackAlpha::Schur, N);
    sum += make_rational(irrep_dimension(lambda)) / jack *
           make_rational(character(lambda, type));
  }
  return sum / Rational(factorial(n));
}

Rational compute_orthogonal(const Partition& type, int N) {
  const int n = type.sum();
  Rational sum = 0;
  for (const Partition& lambda : partitions_of(n)) {
    if (lambda.length() > N) continue;
    const Rational jack = jack_at_ones(lambda, JackAlpha::Zonal, N);
    sum += make_rational(irrep_dimension(lambda.doubled())) / jack *
           zonal_spherical_class(lambda, type);
  }
  const Rational prefactor =
      Rational(int_pow(2, n) * factorial(n)) / Rational(factorial(2 * n));
  return prefactor * sum;
}

Rational compute_symplectic_class(const Partition& type, int N) {
  const int n = type.sum();
  Rational sum = 0;
  for (const Partition& lambda : partitions_of(n)) {
    if (lambda.length() > N) continue;
    const Rational jack = jack_at_ones(lambda, JackAlpha::HalfZonal, N);
    sum += make_rational(irrep_dimension(lambda.interleaved())) / jack *
           twisted_spherical_signed(lambda, type);
  }
  return Rational(factorial(n)) / Rational(factorial(2 * n)) * sum;
}

}  // namespace

Rational wg_unitary(const Partition& cycle_type, int N) {
  check_dimension(N);
  const int n = cycle_type.sum();
  if (n < 1) throw std::invalid_argument("wg_unitary: empty cycle type");
  return WeingartenCache::instance().get(
      GroupKind::Unitary, n, partition_index(n, cycle_type), N,
      [&] { return compute_unitary(cycle_type, N); });
}

Rational wg_unitary(const Permutation& sigma, int N) {
  if (sigma.degree() == 0)
    throw std::invalid_argument("wg_unitary: empty permutation");
  return wg_unitary(sigma.cycle_type(), N);
}

Rational wg_orthogonal(const Partition& coset_type, int N) {
  check_dimension(N);
  const int n = coset_type.sum();
  if (n < 1) throw std::invalid_argument("wg_orthogonal: empty coset type");
  if (n > kMaxPairOrder)
    throw unsupported_scale_error("wg_orthogonal: n > 8 not supported");
  return WeingartenCache::instance().get(
      GroupKind::Orthogonal, n, partition_index(n, coset_type), N,
      [&] { return compute_orthogonal(coset_type, N); });
}

Rational wg_orthogonal(const Permutation& tau, int N) {
  return wg_orthogonal(coset_type(tau), N);
}

Rational wg_symplectic_class(const Partition& type, int N) {
  check_dimension(N);
  const int n = type.sum();
  if (n < 1) throw std::invalid_argument("wg_symplectic: empty coset type");
  if (n > kMaxPairOrder)
    throw unsupported_scale_error("wg_symplectic: n > 8 not supported");
  return WeingartenCache::instance().get(
      GroupKind::Symplectic, n, partition_index(n, type), N,
      [&] { return compute_symplectic_class(type, N); });
}

Rational wg_symplectic(const Permutation& tau, int N) {
  const Rational class_value = wg_symplectic_class(coset_type(tau), N);
  return tau.sign() < 0 ? Rational(-class_value) : class_value;
}

const WeingartenEntry& WeingartenTable::at(const Partition& label) const {
  return entries.at(partition_index(n, label));
}

WeingartenTable wg_table(GroupKind group, int n, int N) {
  check_dimension(N);
  if (n < 1) throw std::invalid_argument("wg_table: n must be positive");
  const int bound = group == GroupKind::Unitary ? kMaxUnitaryTableOrder
                                                : kMaxPairedTableOrder;
  if (n > bound)
    throw unsupported_scale_error(
        "wg_table: n exceeds the supported scale (" + std::to_string(bound) +
        " for group " + to_string(group) + ")");

  preload_characters(group == GroupKind::Unitary ? n : 2 * n);

  WeingartenTable table{group, n, N, {}};
  const auto& labels = partitions_of(n);
  table.entries.reserve(labels.size());

  if (group == GroupKind::Symplectic) {
    // First matching of each coset type, in enumeration order.
    std::map<Partition, Permutation> reps;
    for (const Matching& m : matchings(n)) {
      const Partition type = coset_type(m.perm());
      reps.try_emplace(type, m.perm());
    }
    for (const Partition& label : labels) {
      const Permutation& rep = reps.at(label);
      WeingartenEntry entry{label, wg_symplectic(rep, N), rep, rep.sign()};
      table.entries.push_back(std::move(entry));
    }
    return table;
  }

  for (const Partition& label : labels) {
    const Rational value = group == GroupKind::Unitary
                               ? wg_unitary(label, N)
                               : wg_orthogonal(label, N);
    table.entries.push_back(WeingartenEntry{label, value, std::nullopt, 1});
  }
  return table;
}

}  // namespace wg
