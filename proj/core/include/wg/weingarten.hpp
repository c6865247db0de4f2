#pragma once

#include <optional>
#include <string>
#include <vector>

#include "wg/partition.hpp"
#include "wg/permutation.hpp"
#include "wg/rational.hpp"

namespace wg {

enum class GroupKind { Unitary, Orthogonal, Symplectic };

std::string to_string(GroupKind group);            // "u", "o", "sp"
GroupKind group_from_string(const std::string& s);

// Enumeration bounds for full tables (and the CLI's single-value command).
inline constexpr int kMaxUnitaryTableOrder = 8;
inline constexpr int kMaxPairedTableOrder = 6;  // orthogonal and symplectic

// Weingarten function of U(N) at a permutation of degree n; depends only on
// the cycle type. N >= 1.
Rational wg_unitary(const Partition& cycle_type, int N);
Rational wg_unitary(const Permutation& sigma, int N);

// Weingarten function of O(N) at a degree-2n permutation; depends only on
// the coset type.
Rational wg_orthogonal(const Partition& coset_type, int N);
Rational wg_orthogonal(const Permutation& tau, int N);

// Weingarten function of Sp(2N) at a degree-2n permutation. Covariant with
// sgn under the hyperoctahedral action; the class form is normalized to the
// sign-positive convention, i.e. wg_symplectic(tau) =
// sgn(tau) * wg_symplectic_class(coset_type(tau)).
Rational wg_symplectic(const Permutation& tau, int N);
Rational wg_symplectic_class(const Partition& coset_type, int N);

struct WeingartenEntry {
  Partition label;  // cycle type (unitary) or coset type
  Rational value;
  // Symplectic only: canonical matching the value is evaluated at, with its
  // sign; the sign-positive class value is rep_sign * value.
  std::optional<Permutation> representative;
  int rep_sign = 1;
};

struct WeingartenTable {
  GroupKind group;
  int n = 0;
  int N = 0;
  std::vector<WeingartenEntry> entries;  // in partitions_of(n) order

  const WeingartenEntry& at(const Partition& label) const;
};

// Full table for order n; preloads the character cache for S_n (unitary) or
// S_2n (orthogonal, symplectic) first. Scale bounds: n <= 8 for unitary,
// n <= 6 otherwise.
WeingartenTable wg_table(GroupKind group, int n, int N);

}  // namespace wg
