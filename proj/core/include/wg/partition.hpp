#pragma once

#include <compare>
#include <string>
#include <vector>

#include "wg/rational.hpp"

namespace wg {

// Integer partition: weakly decreasing positive parts. Default-constructed is
// the empty partition of 0.
class Partition {
 public:
  Partition() = default;
  explicit Partition(std::vector<int> parts);

  // Parses "3,1,1"; whitespace around commas is tolerated.
  static Partition parse(const std::string& text);

  int sum() const { return sum_; }
  int length() const { return static_cast<int>(parts_.size()); }
  bool empty() const { return parts_.empty(); }
  const std::vector<int>& parts() const { return parts_; }
  int part(int i) const { return parts_[i]; }  // 0-based

  Partition doubled() const;      // (2*l1, 2*l2, ...)
  Partition interleaved() const;  // (l1, l1, l2, l2, ...)
  Partition conjugate() const;

  std::string to_string() const;  // "3,1,1"

  friend bool operator==(const Partition& a, const Partition& b) = default;
  // Lexicographic on the parts vector, so sorting descending gives the order
  // partitions_of uses.
  friend auto operator<=>(const Partition& a, const Partition& b) {
    return a.parts_ <=> b.parts_;
  }

 private:
  std::vector<int> parts_;
  int sum_ = 0;
};

// All partitions of n in descending lexicographic order: (n) first, (1^n)
// last. Cached; the returned reference stays valid for the process lifetime.
// n < 1 is an invalid argument.
const std::vector<Partition>& partitions_of(int n);

// Position of p within partitions_of(n); p must be a partition of n.
int partition_index(int n, const Partition& p);

// Order of the centralizer of the class mu: prod_i i^{m_i} m_i!.
Int centralizer_order(const Partition& mu);

// |C_mu| = n! / z_mu for mu a partition of n.
long long conjugacy_class_size(const Partition& mu);

// Dimension of the irreducible representation labeled by lambda, by the hook
// length formula.
long long irrep_dimension(const Partition& lambda);

}  // namespace wg
