#include <doctest.h>

#include <sstream>
#include <stdexcept>

#include "wg/character_oracle.hpp"
#include "wg/characters.hpp"
#include "wg/errors.hpp"
#include "wg/partition.hpp"
#include "wg/permutation.hpp"
#include "wg/rational.hpp"

using namespace wg;

TEST_CASE("character values by hand") {
  CHECK(character(Partition({2, 1}), Partition({3})) == -1);
  CHECK(character(Partition({2, 1}), Partition({1, 1, 1})) == 2);
  CHECK(character(Partition({2, 1}), Partition({2, 1})) == 0);
  CHECK(character(Partition({2}), Partition({2})) == 1);
  CHECK(character(Partition({1, 1}), Partition({2})) == -1);
  CHECK(character(Partition({1}), Partition({1})) == 1);

  CHECK_THROWS_AS(character(Partition({2}), Partition({3})),
                  std::invalid_argument);
}

TEST_CASE("special rows") {
  for (int n = 1; n <= 7; ++n) {
    const Partition ones(std::vector<int>(n, 1));
    const Partition row({n});
    for (const Partition& mu : partitions_of(n)) {
      // trivial representation
      CHECK(character(row, mu) == 1);
      // sign representation
      CHECK(character(ones, mu) ==
            Permutation::with_cycle_type(mu).sign());
    }
    for (const Partition& lambda : partitions_of(n))
      CHECK(character(lambda, ones) == irrep_dimension(lambda));
  }
}

TEST_CASE("row orthogonality") {
  // sum_mu |C_mu| chi_lambda(mu) chi_nu(mu) = n! delta
  for (int n = 2; n <= 6; ++n) {
    const auto& parts = partitions_of(n);
    for (const Partition& lambda : parts)
      for (const Partition& nu : parts) {
        Int total = 0;
        for (const Partition& mu : parts)
          total += make_int(conjugacy_class_size(mu)) *
                   make_int(character(lambda, mu)) *
                   make_int(character(nu, mu));
        CHECK(total == (lambda == nu ? factorial(n) : Int(0)));
      }
  }
}

TEST_CASE("column orthogonality") {
  // sum_lambda chi_lambda(mu) chi_lambda(nu) = delta * n!/|C_mu|
  for (int n = 2; n <= 6; ++n) {
    const auto& parts = partitions_of(n);
    for (const Partition& mu : parts)
      for (const Partition& nu : parts) {
        Int total = 0;
        for (const Partition& lambda : parts)
          total += make_int(character(lambda, mu)) *
                   make_int(character(lambda, nu));
        const Int expected =
            mu == nu ? factorial(n) / make_int(conjugacy_class_size(mu))
                     : Int(0);
        CHECK(total == expected);
      }
  }
}

TEST_CASE("murnaghan-nakayama matches the transition-matrix oracle") {
  for (int n = 1; n <= 6; ++n)
    for (const Partition& lambda : partitions_of(n))
      for (const Partition& mu : partitions_of(n))
        CHECK(character(lambda, mu) == character_oracle(lambda, mu));

  CHECK(character_oracle(Partition({2, 1}), Partition({1, 1, 1})) == 2);
  CHECK(character_oracle(Partition({1, 1}), Partition({2})) == -1);
  CHECK_THROWS_AS(
      character_oracle(Partition({8}), Partition({8})),
      unsupported_scale_error);
}

TEST_CASE("snapshot save, load, verify") {
  CharacterTable table;
  std::ostringstream out;
  table.save(out, 4);
  const std::string snapshot = out.str();
  CHECK(snapshot.rfind("n=4\n", 0) == 0);

  SUBCASE("round trip") {
    CharacterTable fresh;
    std::istringstream in(snapshot);
    CHECK(fresh.load(in) == 4);
    for (const Partition& lambda : partitions_of(4))
      for (const Partition& mu : partitions_of(4))
        CHECK(fresh.value(lambda, mu) == character(lambda, mu));
  }

  SUBCASE("verification accepts an intact snapshot") {
    std::istringstream in(snapshot);
    CHECK(!verify_character_snapshot(in).has_value());
  }

  SUBCASE("verification reports a corrupted value") {
    std::string bad = snapshot;
    const auto pos = bad.find(";-1\n");
    REQUIRE(pos != std::string::npos);
    bad.replace(pos, 4, ";-7\n");
    std::istringstream in(bad);
    const auto mismatch = verify_character_snapshot(in);
    REQUIRE(mismatch.has_value());
    CHECK(mismatch->find("-7") != std::string::npos);
  }

  SUBCASE("structural damage is an error") {
    CharacterTable fresh;
    std::istringstream missing_header("3;3;1\n");
    CHECK_THROWS_AS(fresh.load(missing_header), std::invalid_argument);

    // truncated: drop the last line
    std::string truncated = snapshot;
    truncated.erase(truncated.rfind('\n', truncated.size() - 2) + 1);
    std::istringstream in(truncated);
    CHECK_THROWS_AS(fresh.load(in), std::invalid_argument);
  }
}

TEST_CASE("cache file naming") {
  CHECK(character_cache_filename(6) == "characters_n6.txt");
  CHECK(character_cache_filename(12) == "characters_n12.txt");
}
