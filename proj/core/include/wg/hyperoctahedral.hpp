#pragma once

#include <cstdint>
#include <iterator>
#include <span>
#include <vector>

#include "wg/errors.hpp"
#include "wg/permutation.hpp"

namespace wg {

// Modules for permutations of {1, ..., 2n} organized around the fixed pairing
// {1,2}{3,4}...{2n-1,2n}. The hyperoctahedral group H_n is its stabilizer in
// S_2n (order 2^n n!); matchings are the canonical coset representatives
// satisfying sigma(2i-1) < sigma(2i) and sigma(1) < sigma(3) < ... .

inline constexpr int kMaxPairOrder = 8;  // enumeration bound on n

long long hyperoctahedral_order(int n);  // 2^n n!

// Streams H_n in a fixed order: block permutations in lexicographic order,
// within-pair swap masks counting up. fn receives (images, swap parity).
template <typename F>
void for_each_hyperoctahedral(int n, F&& fn) {
  if (n < 1 || n > kMaxPairOrder)
    throw unsupported_scale_error("hyperoctahedral: need 1 <= n <= 8");
  std::vector<int> block(n);
  for (int i = 0; i < n; ++i) block[i] = i + 1;
  std::vector<int> images(2 * n);
  do {
    for (std::uint32_t mask = 0; mask < (1u << n); ++mask) {
      for (int i = 0; i < n; ++i) {
        const int t = block[i];
        if (mask >> i & 1) {
          images[2 * i] = 2 * t;
          images[2 * i + 1] = 2 * t - 1;
        } else {
          images[2 * i] = 2 * t - 1;
          images[2 * i + 1] = 2 * t;
        }
      }
      const int parity = __builtin_popcount(mask) & 1 ? -1 : 1;
      fn(static_cast<const std::vector<int>&>(images), parity);
    }
  } while (std::next_permutation(block.begin(), block.end()));
}

// Input-iterator range over H_n as Permutation values, same order as
// for_each_hyperoctahedral.
class HyperoctahedralElements {
 public:
  explicit HyperoctahedralElements(int n);

  class iterator {
   public:
    using iterator_category = std::input_iterator_tag;
    using value_type = Permutation;
    using difference_type = std::ptrdiff_t;

    Permutation operator*() const;
    iterator& operator++();
    friend bool operator==(const iterator& a, const iterator& b) {
      return a.done_ == b.done_ && (a.done_ || (a.block_ == b.block_ && a.mask_ == b.mask_));
    }

   private:
    friend class HyperoctahedralElements;
    iterator(int n, bool done);
    int n_ = 0;
    std::vector<int> block_;
    std::uint32_t mask_ = 0;
    bool done_ = true;
  };

  iterator begin() const { return iterator(n_, false); }
  iterator end() const { return iterator(n_, true); }
  long long size() const { return hyperoctahedral_order(n_); }

 private:
  int n_;
};

// Canonical pairing representative in S_2n.
class Matching {
 public:
  explicit Matching(Permutation perm);

  static bool is_canonical(const Permutation& perm);

  const Permutation& perm() const { return perm_; }

  friend bool operator==(const Matching& a, const Matching& b) = default;

 private:
  Permutation perm_;
};

// All (2n-1)!! canonical matchings, in the order produced by pairing the
// smallest free element with each larger free element ascending.
std::vector<Matching> matchings(int n);

// Coset type of tau in S_2n: join the fixed pairing with its tau-image and
// halve the component sizes; a partition of n.
Partition coset_type(const Permutation& tau);

// Number of elements of S_2n sharing the given coset type:
// 4^n n! |C_type| / 2^l(type).
long long double_coset_size(const Partition& type);

// Embeds pi in S_n as a degree-2n permutation whose coset type is the cycle
// type of pi: 2i-1 -> 2i, 2i -> 2 pi(i) - 1.
Permutation doubled_perm(const Permutation& pi);

// prod_k [ indices[tau(2k-1)] == indices[tau(2k)] ]; indices are 1-based
// values in 1..N checked on entry. Invariant under tau -> tau * xi, xi in H_n.
int delta_pairing(const Permutation& tau, std::span<const int> indices, int N);

// Skew-symmetric analogue on 1..2N: each tau-pair (a, b) contributes
// [b == a + N] - [a == b + N]; covariant with the swap parity of xi.
int delta_pairing_symplectic(const Permutation& tau,
                             std::span<const int> indices, int N);

}  // namespace wg
