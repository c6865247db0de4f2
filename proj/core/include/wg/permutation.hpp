#pragma once

#include <string>
#include <vector>

#include "wg/partition.hpp"

namespace wg {

// Permutation of {1, ..., n} stored as its image list.
class Permutation {
 public:
  Permutation() = default;  // degree 0
  explicit Permutation(std::vector<int> images);

  static Permutation identity(int n);

  // Accepts an image list "2,1,4,3" or cycle notation "(1 2)(3 4)"; cycles
  // multiply right to left. `degree` extends the permutation with fixed
  // points beyond the largest mentioned element (0 means deduce).
  static Permutation parse(const std::string& text, int degree = 0);

  // Canonical representative of a cycle type: consecutive cycles, e.g.
  // (3,2) -> (1 2 3)(4 5).
  static Permutation with_cycle_type(const Partition& type);

  int degree() const { return static_cast<int>(images_.size()); }
  int operator()(int k) const { return images_[k - 1]; }  // 1-based
  const std::vector<int>& images() const { return images_; }

  Permutation inverse() const;
  Partition cycle_type() const;
  int sign() const;
  bool is_identity() const;

  std::string to_string() const;        // "2,1,4,3"
  std::string to_cycle_string() const;  // "(1 2)(3 4)", "()" for the identity

  friend bool operator==(const Permutation& a, const Permutation& b) = default;
  friend auto operator<=>(const Permutation& a, const Permutation& b) {
    return a.images_ <=> b.images_;
  }

 private:
  std::vector<int> images_;
};

// (p * q)(k) = p(q(k)): q acts first.
Permutation compose(const Permutation& p, const Permutation& q);

// All n! permutations in lexicographic image-list order, identity first.
std::vector<Permutation> all_permutations(int n);

}  // namespace wg
