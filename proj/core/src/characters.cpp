#include "wg/characters.hpp"

#include <algorithm>
#include <istream>
#include <mutex>
#include <ostream>
#include <sstream>
#include <stdexcept>

namespace wg {

namespace {

// Beta-numbers lambda_i + (l - i), strictly decreasing.
std::vector<int> beta_set(const Partition& lambda) {
  const int l = lambda.length();
  std::vector<int> beta(l);
  for (int i = 0; i < l; ++i) beta[i] = lambda.part(i) + (l - 1 - i);
  return beta;
}

Partition partition_from_beta(std::vector<int> beta) {
  std::sort(beta.rbegin(), beta.rend());
  const int l = static_cast<int>(beta.size());
  std::vector<int> parts;
  for (int i = 0; i < l; ++i) {
    int p = beta[i] - (l - 1 - i);
    if (p > 0) parts.push_back(p);
  }
  return Partition(std::move(parts));
}

Partition drop_first_part(const Partition& mu) {
  std::vector<int> rest(mu.parts().begin() + 1, mu.parts().end());
  return Partition(std::move(rest));
}

}  // namespace

CharacterTable::Level& CharacterTable::level(int n) {
  auto it = levels_.find(n);
  if (it != levels_.end()) return it->second;
  Level lvl;
  lvl.parts = partitions_of(n);
  const std::size_t p = lvl.parts.size();
  lvl.values.assign(p * p, 0);
  lvl.have.assign(p * p, 0);
  return levels_.emplace(n, std::move(lvl)).first->second;
}

long long CharacterTable::value(const Partition& lambda, const Partition& mu) {
  if (lambda.sum() != mu.sum())
    throw std::invalid_argument("character: |lambda| != |mu|");
  const int n = lambda.sum();
  if (n == 0) return 1;

  const std::size_t p = partitions_of(n).size();
  const std::size_t cell =
      static_cast<std::size_t>(partition_index(n, lambda)) * p +
      partition_index(n, mu);
  {
    std::shared_lock lock(mu_);
    auto it = levels_.find(n);
    if (it != levels_.end() && it->second.have[cell])
      return it->second.values[cell];
  }

  const long long result = compute(lambda, mu);

  {
    std::unique_lock lock(mu_);
    Level& lvl = level(n);
    lvl.values[cell] = result;
    lvl.have[cell] = 1;
  }
  return result;
}

// Removes a ribbon of length mu_1 from lambda in every legal way; each removal
// flips a beta-number b to b - r and contributes (-1)^height with height the
// number of beta-numbers strictly between them.
long long CharacterTable::compute(const Partition& lambda, const Partition& mu) {
  const int r = mu.part(0);
  const Partition rest = drop_first_part(mu);
  const std::vector<int> beta = beta_set(lambda);

  long long total = 0;
  for (std::size_t i = 0; i < beta.size(); ++i) {
    const int target = beta[i] - r;
    if (target < 0) continue;
    if (std::find(beta.begin(), beta.end(), target) != beta.end()) continue;
    int height = 0;
    for (int b : beta)
      if (b > target && b < beta[i]) ++height;
    std::vector<int> next(beta);
    next[i] = target;
    const long long sub = value(partition_from_beta(std::move(next)), rest);
    total += (height & 1) ? -sub : sub;
  }
  return total;
}

void CharacterTable::preload(int n) {
  const auto& parts = partitions_of(n);
  for (const Partition& lambda : parts)
    for (const Partition& mu : parts) value(lambda, mu);
}

void CharacterTable::save(std::ostream& out, int n) {
  preload(n);
  const auto& parts = partitions_of(n);
  out << "n=" << n << "\n";
  for (const Partition& lambda : parts)
    for (const Partition& mu : parts)
      out << lambda.to_string() << ";" << mu.to_string() << ";"
          << value(lambda, mu) << "\n";
}

int CharacterTable::load(std::istream& in) {
  std::string line;
  if (!std::getline(in, line) || line.rfind("n=", 0) != 0)
    throw std::invalid_argument("character snapshot: missing n= header");
  int n = 0;
  try {
    n = std::stoi(line.substr(2));
  } catch (const std::exception&) {
    throw std::invalid_argument("character snapshot: bad n= header");
  }
  if (n < 1 || n > 20)
    throw std::invalid_argument("character snapshot: degree out of range");

  const auto& parts = partitions_of(n);
  const std::size_t p = parts.size();
  std::vector<long long> values(p * p, 0);
  std::vector<char> have(p * p, 0);

  while (std::getline(in, line)) {
    if (line.empty()) continue;
    std::istringstream row(line);
    std::string ls, ms, vs;
    if (!std::getline(row, ls, ';') || !std::getline(row, ms, ';') ||
        !std::getline(row, vs))
      throw std::invalid_argument("character snapshot: malformed row");
    Partition lambda = Partition::parse(ls);
    Partition mu = Partition::parse(ms);
    if (lambda.sum() != n || mu.sum() != n)
      throw std::invalid_argument("character snapshot: row size mismatch");
    long long v = 0;
    std::size_t pos = 0;
    try {
      v = std::stoll(vs, &pos);
    } catch (const std::exception&) {
      throw std::invalid_argument("character snapshot: bad value");
    }
    if (pos != vs.size())
      throw std::invalid_argument("character snapshot: bad value");
    const std::size_t cell =
        static_cast<std::size_t>(partition_index(n, lambda)) * p +
        partition_index(n, mu);
    values[cell] = v;
    have[cell] = 1;
  }
  for (char h : have)
    if (!h) throw std::invalid_argument("character snapshot: incomplete table");

  std::unique_lock lock(mu_);
  Level& lvl = level(n);
  lvl.values = std::move(values);
  lvl.have = std::move(have);
  return n;
}

CharacterTable& character_table() {
  static CharacterTable* instance = new CharacterTable;
  return *instance;
}

long long character(const Partition& lambda, const Partition& mu) {
  return character_table().value(lambda, mu);
}

void preload_characters(int n) { character_table().preload(n); }

std::optional<std::string> verify_character_snapshot(std::istream& in) {
  CharacterTable loaded;
  int n = 0;
  try {
    n = loaded.load(in);
  } catch (const std::exception& e) {
    return std::string(e.what());
  }
  CharacterTable fresh;
  const auto& parts = partitions_of(n);
  for (const Partition& lambda : parts)
    for (const Partition& mu : parts) {
      const long long got = loaded.value(lambda, mu);
      const long long want = fresh.value(lambda, mu);
      if (got != want)
        return "chi_(" + lambda.to_string() + ")(" + mu.to_string() +
               ") = " + std::to_string(got) + ", recomputed " +
               std::to_string(want);
    }
  return std::nullopt;
}

std::string character_cache_filename(int n) {
  return "characters_n" + std::to_string(n) + ".txt";
}

}  // namespace wg
