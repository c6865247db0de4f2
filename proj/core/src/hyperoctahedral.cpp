#include "wg/hyperoctahedral.hpp"

#include <algorithm>
#include <numeric>
#include <stdexcept>

namespace wg {

long long hyperoctahedral_order(int n) {
  if (n < 1) throw std::invalid_argument("hyperoctahedral_order: n must be positive");
  long long r = 1;
  for (int i = 1; i <= n; ++i) r *= 2LL * i;
  return r;
}

HyperoctahedralElements::HyperoctahedralElements(int n) : n_(n) {
  if (n < 1 || n > kMaxPairOrder)
    throw unsupported_scale_error("hyperoctahedral: need 1 <= n <= 8");
}

HyperoctahedralElements::iterator::iterator(int n, bool done)
    : n_(n), done_(done) {
  if (!done_) {
    block_.resize(n_);
    std::iota(block_.begin(), block_.end(), 1);
  }
}

Permutation HyperoctahedralElements::iterator::operator*() const {
  std::vector<int> images(2 * n_);
  for (int i = 0; i < n_; ++i) {
    const int t = block_[i];
    if (mask_ >> i & 1) {
      images[2 * i] = 2 * t;
      images[2 * i + 1] = 2 * t - 1;
    } else {
      images[2 * i] = 2 * t - 1;
      images[2 * i + 1] = 2 * t;
    }
  }
  return Permutation(std::move(images));
}

HyperoctahedralElements::iterator& HyperoctahedralElements::iterator::operator++() {
  if (done_) return *this;
  if (++mask_ < (1u << n_)) return *this;
  mask_ = 0;
  if (!std::next_permutation(block_.begin(), block_.end())) done_ = true;
  return *this;
}

Matching::Matching(Permutation perm) : perm_(std::move(perm)) {
  if (!is_canonical(perm_))
    throw std::invalid_argument("matching: not a canonical pairing representative");
}

bool Matching::is_canonical(const Permutation& perm) {
  const int deg = perm.degree();
  if (deg == 0 || deg % 2) return false;
  const int n = deg / 2;
  for (int i = 1; i <= n; ++i)
    if (perm(2 * i - 1) >= perm(2 * i)) return false;
  for (int i = 1; i < n; ++i)
    if (perm(2 * i - 1) >= perm(2 * i + 1)) return false;
  return true;
}

namespace {

void build_matchings(int n, std::vector<int>& images, std::vector<bool>& used,
                     int pair, std::vector<Matching>& out) {
  if (pair == n) {
    out.push_back(Matching(Permutation(images)));
    return;
  }
  int a = 0;
  while (used[a]) ++a;
  used[a] = true;
  for (int b = a + 1; b < 2 * n; ++b) {
    if (used[b]) continue;
    used[b] = true;
    images[2 * pair] = a + 1;
    images[2 * pair + 1] = b + 1;
    build_matchings(n, images, used, pair + 1, out);
    used[b] = false;
  }
  used[a] = false;
}

}  // namespace

std::vector<Matching> matchings(int n) {
  if (n < 1 || n > kMaxPairOrder)
    throw unsupported_scale_error("matchings: need 1 <= n <= 8");
  std::vector<Matching> out;
  std::vector<int> images(2 * n);
  std::vector<bool> used(2 * n, false);
  build_matchings(n, images, used, 0, out);
  return out;
}

Partition coset_type(const Permutation& tau) {
  const int deg = tau.degree();
  if (deg == 0 || deg % 2)
    throw std::invalid_argument("coset_type: degree must be even and positive");
  const int n = deg / 2;

  std::vector<int> parent(deg);
  std::iota(parent.begin(), parent.end(), 0);
  auto find = [&](int x) {
    while (parent[x] != x) x = parent[x] = parent[parent[x]];
    return x;
  };
  auto unite = [&](int a, int b) { parent[find(a)] = find(b); };

  for (int i = 0; i < n; ++i) {
    unite(2 * i, 2 * i + 1);
    unite(tau(2 * i + 1) - 1, tau(2 * i + 2) - 1);
  }

  std::vector<int> size(deg, 0);
  for (int v = 0; v < deg; ++v) ++size[find(v)];
  std::vector<int> parts;
  for (int v = 0; v < deg; ++v)
    if (size[v] > 0) parts.push_back(size[v] / 2);
  std::sort(parts.rbegin(), parts.rend());
  return Partition(std::move(parts));
}

long long double_coset_size(const Partition& type) {
  const int n = type.sum();
  if (n < 1) throw std::invalid_argument("double_coset_size: empty type");
  Int size = int_pow(4, n) * factorial(n);
  size *= make_int(conjugacy_class_size(type));
  size /= int_pow(2, type.length());
  if (!size.fits_slong_p())
    throw unsupported_scale_error("double_coset_size: value overflows");
  return size.get_si();
}

Permutation doubled_perm(const Permutation& pi) {
  const int n = pi.degree();
  if (n == 0) throw std::invalid_argument("doubled_perm: empty permutation");
  std::vector<int> images(2 * n);
  for (int i = 1; i <= n; ++i) {
    images[2 * i - 2] = 2 * i;
    images[2 * i - 1] = 2 * pi(i) - 1;
  }
  return Permutation(std::move(images));
}

namespace {

void check_pairing_args(const Permutation& tau, std::span<const int> indices,
                        int N, int bound) {
  if (N < 1) throw std::invalid_argument("delta_pairing: N must be positive");
  const int deg = tau.degree();
  if (deg == 0 || deg % 2)
    throw std::invalid_argument("delta_pairing: degree must be even");
  if (static_cast<int>(indices.size()) != deg)
    throw std::invalid_argument("delta_pairing: index list length mismatch");
  for (int v : indices)
    if (v < 1 || v > bound)
      throw std::invalid_argument("delta_pairing: index out of range");
}

}  // namespace

int delta_pairing(const Permutation& tau, std::span<const int> indices, int N) {
  check_pairing_args(tau, indices, N, N);
  const int n = tau.degree() / 2;
  for (int k = 1; k <= n; ++k)
    if (indices[tau(2 * k - 1) - 1] != indices[tau(2 * k) - 1]) return 0;
  return 1;
}

int delta_pairing_symplectic(const Permutation& tau,
                             std::span<const int> indices, int N) {
  check_pairing_args(tau, indices, N, 2 * N);
  const int n = tau.degree() / 2;
  int value = 1;
  for (int k = 1; k <= n; ++k) {
    const int a = indices[tau(2 * k - 1) - 1];
    const int b = indices[tau(2 * k) - 1];
    if (b == a + N) continue;
    if (a == b + N)
      value = -value;
    else
      return 0;
  }
  return value;
}

}  // namespace wg
