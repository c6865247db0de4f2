#include <doctest.h>

#include <algorithm>
#include <filesystem>
#include <fstream>
#include <stdexcept>

#include "wg/characters.hpp"
#include "wg/errors.hpp"
#include "wg/selftest.hpp"

using namespace wg;
namespace fs = std::filesystem;

namespace {

bool suite_present(const std::vector<SelfTestResult>& results,
                   const std::string& name) {
  return std::any_of(results.begin(), results.end(),
                     [&](const SelfTestResult& r) { return r.suite == name; });
}

const SelfTestResult& suite(const std::vector<SelfTestResult>& results,
                            const std::string& name) {
  for (const SelfTestResult& r : results)
    if (r.suite == name) return r;
  throw std::out_of_range("no suite " + name);
}

}  // namespace

TEST_CASE("all suites pass at level 3") {
  SelfTestOptions options;
  options.level = 3;
  const auto results = run_selftests(options);
  REQUIRE(!results.empty());
  for (const SelfTestResult& r : results) {
    INFO(r.suite << ": " << r.detail);
    CHECK(r.passed);
    CHECK(r.seconds >= 0.0);
  }
  for (const char* name :
       {"character-orthogonality", "character-oracle", "zonal-orthogonality",
        "zonal-completeness", "twisted-orthogonality", "twisted-completeness",
        "delta-power-sums", "jack-schur", "integrator-sum-rules"})
    CHECK(suite_present(results, name));
  // no cache directory configured, so no cache suite
  CHECK(!suite_present(results, "character-cache"));
}

TEST_CASE("level bounds") {
  SelfTestOptions options;
  options.level = 0;
  CHECK_THROWS_AS(run_selftests(options), std::invalid_argument);
  options.level = kMaxSelfTestLevel + 1;
  CHECK_THROWS_AS(run_selftests(options), unsupported_scale_error);
}

TEST_CASE("cache suite verifies snapshot files") {
  const fs::path dir =
      fs::temp_directory_path() / "wg_selftest_cache_test";
  fs::remove_all(dir);
  fs::create_directories(dir);

  SelfTestOptions options;
  options.level = 2;
  options.cache_dir = dir.string();

  SUBCASE("intact snapshot passes") {
    std::ofstream out(dir / character_cache_filename(3));
    character_table().save(out, 3);
    out.close();
    const auto results = run_selftests(options);
    CHECK(suite(results, "character-cache").passed);
  }

  SUBCASE("corrupted snapshot is reported") {
    {
      std::ofstream out(dir / character_cache_filename(3));
      character_table().save(out, 3);
    }
    // flip a character value
    std::ifstream in(dir / character_cache_filename(3));
    std::string content((std::istreambuf_iterator<char>(in)),
                        std::istreambuf_iterator<char>());
    in.close();
    const auto pos = content.find(";1\n");
    REQUIRE(pos != std::string::npos);
    content.replace(pos, 3, ";9\n");
    std::ofstream out(dir / character_cache_filename(3), std::ios::trunc);
    out << content;
    out.close();

    const auto results = run_selftests(options);
    const SelfTestResult& r = suite(results, "character-cache");
    CHECK(!r.passed);
    CHECK(r.detail.find("characters_n3.txt") != std::string::npos);
  }

  SUBCASE("empty directory passes") {
    const auto results = run_selftests(options);
    CHECK(suite(results, "character-cache").passed);
  }

  fs::remove_all(dir);
}
