#include "wg/character_oracle.hpp"

#include <algorithm>
#include <map>
#include <stdexcept>
#include <vector>

#include "wg/errors.hpp"
#include "wg/rational.hpp"

namespace wg {

namespace {

constexpr int kOracleLimit = 7;

// Counts semistandard tableaux of the given shape with entries in 1..n, per
// weight; only weights that are already partitions are recorded (those are
// the Kostka numbers).
void count_tableaux(const Partition& shape, int n, int row, int col,
                    std::vector<std::vector<int>>& entries,
                    std::vector<int>& weight,
                    std::map<std::vector<int>, long long>& kostka) {
  if (row == shape.length()) {
    std::vector<int> sorted(weight);
    std::sort(sorted.rbegin(), sorted.rend());
    if (sorted == weight) kostka[weight] += 1;
    return;
  }
  int next_row = row, next_col = col + 1;
  if (next_col == shape.part(row)) {
    next_row = row + 1;
    next_col = 0;
  }
  int lo = 1;
  if (col > 0) lo = std::max(lo, entries[row][col - 1]);
  if (row > 0 && col < shape.part(row - 1)) lo = std::max(lo, entries[row - 1][col] + 1);
  for (int v = lo; v <= n; ++v) {
    entries[row][col] = v;
    ++weight[v - 1];
    count_tableaux(shape, n, next_row, next_col, entries, weight, kostka);
    --weight[v - 1];
  }
}

std::map<std::vector<int>, long long> kostka_row(const Partition& shape, int n) {
  std::vector<std::vector<int>> entries(shape.length());
  for (int i = 0; i < shape.length(); ++i) entries[i].assign(shape.part(i), 0);
  std::vector<int> weight(n, 0);
  std::map<std::vector<int>, long long> kostka;
  if (shape.length() == 0)
    kostka[weight] = 1;
  else
    count_tableaux(shape, n, 0, 0, entries, weight, kostka);
  return kostka;
}

// Expands p_mu in n variables by brute force over index tuples, collecting
// coefficients per exponent vector.
std::map<std::vector<int>, long long> power_sum_monomials(const Partition& mu,
                                                          int n) {
  std::map<std::vector<int>, long long> coeffs;
  const int l = mu.length();
  std::vector<int> idx(l, 0);
  for (;;) {
    std::vector<int> expo(n, 0);
    for (int k = 0; k < l; ++k) expo[idx[k]] += mu.part(k);
    coeffs[expo] += 1;
    int k = l - 1;
    while (k >= 0 && idx[k] == n - 1) idx[k--] = 0;
    if (k < 0) break;
    ++idx[k];
  }
  return coeffs;
}

std::vector<int> padded_parts(const Partition& p, int n) {
  std::vector<int> v(p.parts());
  v.resize(n, 0);
  return v;
}

}  // namespace

long long character_oracle(const Partition& lambda, const Partition& mu) {
  if (lambda.sum() != mu.sum())
    throw std::invalid_argument("character_oracle: |lambda| != |mu|");
  const int n = lambda.sum();
  if (n == 0) return 1;
  if (n > kOracleLimit)
    throw unsupported_scale_error("character_oracle: n > 7 not supported");

  const auto& parts = partitions_of(n);
  const int m = static_cast<int>(parts.size());

  // K[i][j] = K_{parts[i], parts[j]}; upper triangular with unit diagonal in
  // the descending-lexicographic order since K is supported on dominance.
  std::vector<std::vector<long long>> K(m, std::vector<long long>(m, 0));
  for (int i = 0; i < m; ++i) {
    auto row = kostka_row(parts[i], n);
    for (int j = 0; j < m; ++j) {
      auto it = row.find(padded_parts(parts[j], n));
      if (it != row.end()) K[i][j] = it->second;
    }
  }

  const auto pmu = power_sum_monomials(mu, n);
  std::vector<Rational> b(m, 0);
  for (int j = 0; j < m; ++j) {
    auto it = pmu.find(padded_parts(parts[j], n));
    if (it != pmu.end()) b[j] = make_rational(it->second);
  }

  // Solve b = chi * K by forward substitution.
  std::vector<Rational> chi(m, 0);
  for (int j = 0; j < m; ++j) {
    Rational acc = b[j];
    for (int i = 0; i < j; ++i) acc -= chi[i] * make_int(K[i][j]);
    chi[j] = acc;  // K[j][j] == 1
  }

  const Rational v = chi[partition_index(n, lambda)];
  if (v.get_den() != 1)
    throw std::logic_error("character_oracle: non-integer solution");
  return static_cast<long long>(v.get_num().get_si());
}

}  // namespace wg
