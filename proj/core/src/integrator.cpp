#include "wg/integrator.hpp"

#include <json.hpp>

#include <stdexcept>

#include "wg/hyperoctahedral.hpp"

namespace wg {

namespace {

using nlohmann::json;

void check_indices(const std::vector<int>& list, int bound, const char* name) {
  for (int v : list)
    if (v < 1 || v > bound)
      throw std::invalid_argument(std::string("moment spec: index in '") +
                                  name + "' out of range");
}

}  // namespace

void MomentSpec::validate() const {
  if (dimension < 1)
    throw std::invalid_argument("moment spec: N must be positive");
  if (group == GroupKind::Unitary) {
    if (a.size() != b.size() || c.size() != d.size())
      throw std::invalid_argument(
          "moment spec: need |a| == |b| and |c| == |d|");
    check_indices(a, dimension, "a");
    check_indices(b, dimension, "b");
    check_indices(c, dimension, "c");
    check_indices(d, dimension, "d");
    return;
  }
  if (!c.empty() || !d.empty())
    throw std::invalid_argument(
        "moment spec: c and d apply to the unitary group only");
  if (a.size() != b.size())
    throw std::invalid_argument("moment spec: need |a| == |b|");
  const int bound =
      group == GroupKind::Orthogonal ? dimension : 2 * dimension;
  check_indices(a, bound, "a");
  check_indices(b, bound, "b");
}

MomentSpec MomentSpec::parse(const std::string& json_text) {
  json doc;
  try {
    doc = json::parse(json_text);
  } catch (const json::exception& e) {
    throw std::invalid_argument(std::string("moment spec: ") + e.what());
  }
  MomentSpec spec;
  try {
    spec.group = group_from_string(doc.at("group").get<std::string>());
    spec.dimension = doc.at("N").get<int>();
    spec.a = doc.at("a").get<std::vector<int>>();
    spec.b = doc.at("b").get<std::vector<int>>();
    if (spec.group == GroupKind::Unitary) {
      spec.c = doc.at("c").get<std::vector<int>>();
      spec.d = doc.at("d").get<std::vector<int>>();
    } else if (doc.contains("c") || doc.contains("d")) {
      throw std::invalid_argument(
          "moment spec: c and d apply to the unitary group only");
    }
  } catch (const json::exception& e) {
    throw std::invalid_argument(std::string("moment spec: ") + e.what());
  }
  spec.validate();
  return spec;
}

std::string MomentSpec::to_json() const {
  nlohmann::ordered_json doc;
  doc["group"] = to_string(group);
  doc["N"] = dimension;
  doc["a"] = a;
  doc["b"] = b;
  if (group == GroupKind::Unitary) {
    doc["c"] = c;
    doc["d"] = d;
  }
  return doc.dump();
}

Rational integrate_unitary(const MomentSpec& spec) {
  spec.validate();
  if (spec.group != GroupKind::Unitary)
    throw std::invalid_argument("integrate_unitary: wrong group");
  if (spec.a.size() != spec.d.size()) return 0;  // unbalanced conjugation
  const int n = static_cast<int>(spec.a.size());
  if (n == 0) return 1;

  // sum_{sigma,tau} Wg(tau^-1 sigma) [a = d o sigma] [b = c o tau]
  const auto perms = all_permutations(n);
  std::vector<const Permutation*> row, col;
  for (const Permutation& p : perms) {
    bool row_ok = true, col_ok = true;
    for (int k = 1; k <= n; ++k) {
      row_ok = row_ok && spec.a[k - 1] == spec.d[p(k) - 1];
      col_ok = col_ok && spec.b[k - 1] == spec.c[p(k) - 1];
    }
    if (row_ok) row.push_back(&p);
    if (col_ok) col.push_back(&p);
  }

  Rational total = 0;
  for (const Permutation* tau : col) {
    const Permutation tau_inv = tau->inverse();
    for (const Permutation* sigma : row)
      total += wg_unitary(compose(tau_inv, *sigma), spec.dimension);
  }
  return total;
}

namespace {

Rational integrate_paired(const MomentSpec& spec) {
  const int len = static_cast<int>(spec.a.size());
  if (len % 2) return 0;  // odd moments vanish
  if (len == 0) return 1;
  const int n = len / 2;
  const bool symplectic = spec.group == GroupKind::Symplectic;

  const auto pairings = matchings(n);
  std::vector<std::pair<const Permutation*, int>> row, col;
  for (const Matching& m : pairings) {
    const int da = symplectic
                       ? delta_pairing_symplectic(m.perm(), spec.a, spec.dimension)
                       : delta_pairing(m.perm(), spec.a, spec.dimension);
    const int db = symplectic
                       ? delta_pairing_symplectic(m.perm(), spec.b, spec.dimension)
                       : delta_pairing(m.perm(), spec.b, spec.dimension);
    if (da != 0) row.emplace_back(&m.perm(), da);
    if (db != 0) col.emplace_back(&m.perm(), db);
  }

  Rational total = 0;
  for (const auto& [tau, da] : row) {
    const Permutation tau_inv = tau->inverse();
    for (const auto& [sigma, db] : col) {
      const Permutation product = compose(tau_inv, *sigma);
      if (symplectic) {
        Rational w = wg_symplectic(product, spec.dimension);
        total += Rational(da * db) * w;
      } else {
        total += wg_orthogonal(coset_type(product), spec.dimension);
      }
    }
  }
  return total;
}

}  // namespace

Rational integrate_orthogonal(const MomentSpec& spec) {
  spec.validate();
  if (spec.group != GroupKind::Orthogonal)
    throw std::invalid_argument("integrate_orthogonal: wrong group");
  return integrate_paired(spec);
}

Rational integrate_symplectic(const MomentSpec& spec) {
  spec.validate();
  if (spec.group != GroupKind::Symplectic)
    throw std::invalid_argument("integrate_symplectic: wrong group");
  return integrate_paired(spec);
}

Rational integrate(const MomentSpec& spec) {
  switch (spec.group) {
    case GroupKind::Unitary:
      return integrate_unitary(spec);
    case GroupKind::Orthogonal:
      return integrate_orthogonal(spec);
    case GroupKind::Symplectic:
      return integrate_symplectic(spec);
  }
  throw std::invalid_argument("integrate: unknown group");
}

}  // namespace wg
