#pragma once

#include <iosfwd>
#include <map>
#include <optional>
#include <shared_mutex>
#include <string>
#include <vector>

#include "wg/partition.hpp"

namespace wg {

// Memoized table of symmetric group characters chi_lambda(mu), computed by
// the Murnaghan-Nakayama ribbon recursion on beta-numbers. Values fit in
// long long comfortably for every degree this library enumerates (<= 16).
//
// Thread safety: concurrent readers are fine; a miss recomputes outside the
// lock and the insert is idempotent.
class CharacterTable {
 public:
  CharacterTable() = default;
  CharacterTable(const CharacterTable&) = delete;
  CharacterTable& operator=(const CharacterTable&) = delete;

  // chi_lambda(mu); |lambda| must equal |mu|.
  long long value(const Partition& lambda, const Partition& mu);

  // Fills every (lambda, mu) pair for S_n.
  void preload(int n);

  // Plain-text snapshot of the full S_n table: a header line "n=<n>" followed
  // by one "<lambda>;<mu>;<value>" line per pair in enumeration order.
  void save(std::ostream& out, int n);

  // Loads a snapshot produced by save(); returns the degree it declares.
  // Structural problems raise std::invalid_argument.
  int load(std::istream& in);

 private:
  struct Level {
    std::vector<Partition> parts;
    std::vector<long long> values;  // row-major [lambda][mu]
    std::vector<char> have;
  };

  Level& level(int n);
  long long compute(const Partition& lambda, const Partition& mu);

  std::map<int, Level> levels_;
  mutable std::shared_mutex mu_;
};

// Process-wide table used by the free functions below and by the higher
// modules.
CharacterTable& character_table();

long long character(const Partition& lambda, const Partition& mu);
void preload_characters(int n);

// Recomputes a snapshot in a fresh table and compares; returns a description
// of the first mismatch, or nothing if the file is intact.
std::optional<std::string> verify_character_snapshot(std::istream& in);

// Conventional file name for the on-disk cache of the S_n table.
std::string character_cache_filename(int n);

}  // namespace wg
