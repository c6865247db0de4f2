#include <doctest.h>

#include <random>
#include <stdexcept>

#include "wg/errors.hpp"
#include "wg/hyperoctahedral.hpp"
#include "wg/partition.hpp"
#include "wg/permutation.hpp"
#include "wg/rational.hpp"
#include "wg/weingarten.hpp"

using namespace wg;

TEST_CASE("group kind names") {
  CHECK(to_string(GroupKind::Unitary) == "u");
  CHECK(to_string(GroupKind::Orthogonal) == "o");
  CHECK(to_string(GroupKind::Symplectic) == "sp");
  CHECK(group_from_string("u") == GroupKind::Unitary);
  CHECK(group_from_string("o") == GroupKind::Orthogonal);
  CHECK(group_from_string("sp") == GroupKind::Symplectic);
  CHECK_THROWS_AS(group_from_string("su"), std::invalid_argument);
}

TEST_CASE("unitary weingarten values") {
  for (int N = 1; N <= 8; ++N)
    CHECK(wg_unitary(Partition({1}), N) == make_rational(1, N));

  for (int N = 2; N <= 7; ++N) {
    CHECK(wg_unitary(Partition({1, 1}), N) ==
          make_rational(1, 1LL * N * N - 1));
    CHECK(wg_unitary(Partition({2}), N) ==
          make_rational(-1, 1LL * N * (N * N - 1)));
  }
  CHECK(wg_unitary(Partition({1, 1}), 3) == make_rational(1, 8));
  CHECK(wg_unitary(Partition({2}), 3) == make_rational(-1, 24));

  // permutation form matches the class form
  CHECK(wg_unitary(Permutation::parse("(1 2)", 3), 4) ==
        wg_unitary(Partition({2, 1}), 4));
}

TEST_CASE("unitary weingarten is a class function") {
  std::mt19937_64 gen(0x77);
  for (int n = 2; n <= 5; ++n) {
    const auto perms = all_permutations(n);
    std::uniform_int_distribution<size_t> pick(0, perms.size() - 1);
    for (int trial = 0; trial < 5; ++trial) {
      const Permutation& sigma = perms[pick(gen)];
      const Permutation& pi = perms[pick(gen)];
      const Permutation conj = compose(compose(pi, sigma), pi.inverse());
      CHECK(wg_unitary(conj, 4) == wg_unitary(sigma, 4));
    }
  }
}

TEST_CASE("orthogonal weingarten values") {
  for (int N = 1; N <= 6; ++N)
    CHECK(wg_orthogonal(Partition({1}), N) == make_rational(1, N));

  for (int N = 2; N <= 6; ++N) {
    CHECK(wg_orthogonal(Partition({1, 1}), N) ==
          make_rational(N + 1, 1LL * N * (N - 1) * (N + 2)));
    CHECK(wg_orthogonal(Partition({2}), N) ==
          make_rational(-1, 1LL * N * (N - 1) * (N + 2)));
  }
  CHECK(wg_orthogonal(Partition({1, 1}), 3) == make_rational(2, 15));
  CHECK(wg_orthogonal(Partition({2}), 3) == make_rational(-1, 30));

  // N = 1 restricts the lambda-sum to the single row shape
  CHECK(wg_orthogonal(Partition({1, 1}), 1) == make_rational(1, 9));
  CHECK(wg_orthogonal(Partition({2}), 1) == make_rational(1, 9));

  // permutation form: tau of degree 2n, class read off its coset type
  CHECK(wg_orthogonal(Permutation::parse("(2 3)", 4), 3) ==
        make_rational(-1, 30));
}

TEST_CASE("orthogonal weingarten is constant on double cosets") {
  const int n = 3, N = 5;
  const Permutation tau = Permutation::parse("(2 3)(4 6)", 6);
  const Rational base = wg_orthogonal(tau, N);
  std::mt19937_64 gen(0x99);
  std::vector<Permutation> elements;
  for_each_hyperoctahedral(n, [&](const std::vector<int>& images, int) {
    elements.push_back(Permutation(images));
  });
  std::uniform_int_distribution<size_t> pick(0, elements.size() - 1);
  for (int trial = 0; trial < 8; ++trial) {
    const Permutation& h1 = elements[pick(gen)];
    const Permutation& h2 = elements[pick(gen)];
    CHECK(wg_orthogonal(compose(compose(h1, tau), h2), N) == base);
  }
}

TEST_CASE("symplectic weingarten values") {
  for (int N = 1; N <= 6; ++N) {
    CHECK(wg_symplectic(Permutation::identity(2), N) ==
          make_rational(1, 2 * N));
    CHECK(wg_symplectic(Permutation::parse("(1 2)"), N) ==
          make_rational(-1, 2 * N));
    CHECK(wg_symplectic_class(Partition({1}), N) == make_rational(1, 2 * N));
  }
  for (int N = 2; N <= 6; ++N)
    CHECK(wg_symplectic(Permutation::identity(4), N) ==
          make_rational(2 * N - 1, 4LL * N * (2 * N + 1) * (N - 1)));
  CHECK(wg_symplectic(Permutation::identity(4), 2) == make_rational(3, 40));
}

TEST_CASE("symplectic weingarten is sign-covariant") {
  const int n = 3, N = 4;
  const Permutation tau = Permutation::parse("(1 4 2)(3 6)", 6);
  const Rational base = wg_symplectic(tau, N);
  for_each_hyperoctahedral(n, [&](const std::vector<int>& images,
                                  int parity) {
    const Permutation xi(images);
    const Rational expect = parity < 0 ? Rational(-base) : base;
    CHECK(wg_symplectic(compose(tau, xi), N) == expect);
    CHECK(wg_symplectic(compose(xi, tau), N) == expect);
  });
}

TEST_CASE("tables") {
  SUBCASE("unitary") {
    const WeingartenTable t = wg_table(GroupKind::Unitary, 2, 3);
    REQUIRE(t.entries.size() == 2);
    CHECK(t.at(Partition({1, 1})).value == make_rational(1, 8));
    CHECK(t.at(Partition({2})).value == make_rational(-1, 24));
    CHECK(!t.entries[0].representative.has_value());
    CHECK_THROWS_AS(t.at(Partition({3})), std::invalid_argument);
  }
  SUBCASE("unitary singleton") {
    const WeingartenTable t = wg_table(GroupKind::Unitary, 1, 5);
    REQUIRE(t.entries.size() == 1);
    CHECK(t.entries[0].value == make_rational(1, 5));
  }
  SUBCASE("orthogonal") {
    const WeingartenTable t = wg_table(GroupKind::Orthogonal, 2, 3);
    CHECK(t.at(Partition({1, 1})).value == make_rational(2, 15));
    CHECK(t.at(Partition({2})).value == make_rational(-1, 30));
  }
  SUBCASE("symplectic entries carry a representative and its sign") {
    const WeingartenTable t = wg_table(GroupKind::Symplectic, 2, 2);
    for (const WeingartenEntry& e : t.entries) {
      REQUIRE(e.representative.has_value());
      CHECK(Matching::is_canonical(*e.representative));
      CHECK(coset_type(*e.representative) == e.label);
      CHECK(e.representative->sign() == e.rep_sign);
      CHECK(e.value == wg_symplectic(*e.representative, 2));
      // sign-positive class value
      const Rational normalized =
          e.rep_sign < 0 ? Rational(-e.value) : e.value;
      CHECK(normalized == wg_symplectic_class(e.label, 2));
    }
  }
  SUBCASE("entries match the single-value operations across groups") {
    for (int n = 1; n <= 4; ++n) {
      const WeingartenTable tu = wg_table(GroupKind::Unitary, n, 3);
      const WeingartenTable to = wg_table(GroupKind::Orthogonal, n, 3);
      for (size_t i = 0; i < tu.entries.size(); ++i) {
        CHECK(tu.entries[i].value == wg_unitary(tu.entries[i].label, 3));
        CHECK(to.entries[i].value ==
              wg_orthogonal(to.entries[i].label, 3));
      }
    }
  }
}

TEST_CASE("scale bounds") {
  CHECK_THROWS_AS(wg_table(GroupKind::Unitary, 9, 3),
                  unsupported_scale_error);
  CHECK_THROWS_AS(wg_table(GroupKind::Orthogonal, 7, 3),
                  unsupported_scale_error);
  CHECK_THROWS_AS(wg_table(GroupKind::Symplectic, 7, 3),
                  unsupported_scale_error);
  CHECK_THROWS_AS(wg_unitary(Partition({1}), 0), std::invalid_argument);
  CHECK_THROWS_AS(wg_orthogonal(Partition({1}), -1), std::invalid_argument);
}
