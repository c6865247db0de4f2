// wg: exact Weingarten calculus for U(N), O(N) and Sp(2N).
//
// Subcommands: value (one Weingarten value), table (all classes of one
// order), integrate (a monomial Haar moment, optionally with a Monte-Carlo
// estimate), selftest (identity suites), cache (character snapshots).
//
// stdout carries exactly one result object per run (JSON; rationals as
// decimal num/den strings); diagnostics go to stderr. Exit codes: 0 ok,
// 1 failed selftest/verification, 2 bad usage or malformed input,
// 3 unsupported scale, 4 Monte-Carlo numerical failure.

#include <algorithm>
#include <cctype>
#include <complex>
#include <cstdint>
#include <cstdlib>
#include <exception>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "wg/characters.hpp"
#include "wg/errors.hpp"
#include "wg/haar_mc.hpp"
#include "wg/integrator.hpp"
#include "wg/selftest.hpp"
#include "wg/weingarten.hpp"

namespace fs = std::filesystem;
using json = nlohmann::ordered_json;

namespace {

json rational_json(const wg::Rational& q) {
  return json{{"num", wg::numerator_string(q)},
              {"den", wg::denominator_string(q)}};
}

bool is_snapshot_name(const std::string& name) {
  // characters_n<digits>.txt
  if (name.rfind("characters_n", 0) != 0) return false;
  if (name.size() < 17 || name.substr(name.size() - 4) != ".txt") return false;
  const std::string digits = name.substr(12, name.size() - 16);
  if (digits.empty()) return false;
  for (char c : digits)
    if (!std::isdigit(static_cast<unsigned char>(c))) return false;
  return true;
}

// Pulls every intact snapshot in the cache directory into the process-wide
// character table. Files that fail to parse are skipped here; `wg selftest`
// and `wg cache verify` are the integrity checks.
void load_snapshots(const std::string& cache_dir) {
  if (cache_dir.empty() || !fs::is_directory(cache_dir)) return;
  for (const auto& entry : fs::directory_iterator(cache_dir)) {
    if (!entry.is_regular_file()) continue;
    if (!is_snapshot_name(entry.path().filename().string())) continue;
    std::ifstream in(entry.path());
    try {
      wg::character_table().load(in);
    } catch (const std::exception& e) {
      std::cerr << "warning: ignoring cache file " << entry.path().string()
                << ": " << e.what() << "\n";
    }
  }
}

void save_snapshot(const std::string& cache_dir, int n) {
  fs::create_directories(cache_dir);
  const fs::path path = fs::path(cache_dir) / wg::character_cache_filename(n);
  std::ofstream out(path);
  if (!out) throw std::runtime_error("cannot write " + path.string());
  wg::character_table().save(out, n);
}

int max_order(wg::GroupKind group) {
  return group == wg::GroupKind::Unitary ? wg::kMaxUnitaryTableOrder
                                         : wg::kMaxPairedTableOrder;
}

void check_scale(wg::GroupKind group, int n) {
  if (n < 1) throw std::invalid_argument("order n must be >= 1");
  if (n > max_order(group))
    throw wg::unsupported_scale_error(
        "order " + std::to_string(n) + " exceeds the supported bound " +
        std::to_string(max_order(group)) + " for group " +
        wg::to_string(group));
}

// --- value ---------------------------------------------------------------

// The class label is a partition of n; for Sp it may instead be an explicit
// permutation of degree 2n (image list or cycle notation), in which case the
// printed value carries that permutation's sign. The two readings are never
// ambiguous: a partition label sums to n, a degree-2n image list cannot.
wg::Rational value_at_label(wg::GroupKind group, int n, int N,
                            const std::string& label) {
  std::optional<wg::Partition> type;
  try {
    wg::Partition p = wg::Partition::parse(label);
    if (p.sum() == n) type = std::move(p);
  } catch (const std::invalid_argument&) {
  }

  if (type) {
    switch (group) {
      case wg::GroupKind::Unitary: return wg_unitary(*type, N);
      case wg::GroupKind::Orthogonal: return wg_orthogonal(*type, N);
      case wg::GroupKind::Symplectic: return wg_symplectic_class(*type, N);
    }
  }
  if (group == wg::GroupKind::Symplectic) {
    wg::Permutation tau = wg::Permutation::parse(label, 2 * n);
    if (tau.degree() != 2 * n)
      throw std::invalid_argument("class permutation must have degree 2n = " +
                                  std::to_string(2 * n));
    return wg_symplectic(tau, N);
  }
  throw std::invalid_argument("class '" + label +
                              "' is not a partition of n = " +
                              std::to_string(n));
}

int cmd_value(const std::string& group_name, int n, int N,
              const std::string& label) {
  const wg::GroupKind group = wg::group_from_string(group_name);
  if (N < 1) throw std::invalid_argument("dimension N must be >= 1");
  check_scale(group, n);
  std::cout << rational_json(value_at_label(group, n, N, label)).dump()
            << "\n";
  return 0;
}

// --- table ---------------------------------------------------------------

int cmd_table(const std::string& group_name, int n, int N,
              const std::string& cache_dir, bool no_cache) {
  const wg::GroupKind group = wg::group_from_string(group_name);
  if (N < 1) throw std::invalid_argument("dimension N must be >= 1");

  const bool use_cache = !no_cache && !cache_dir.empty();
  if (use_cache) load_snapshots(cache_dir);

  const wg::WeingartenTable table = wg::wg_table(group, n, N);

  json entries = json::array();
  for (const wg::WeingartenEntry& e : table.entries) {
    json row{{"class", e.label.to_string()}};
    row["num"] = wg::numerator_string(e.value);
    row["den"] = wg::denominator_string(e.value);
    if (e.representative) {
      row["representative"] = e.representative->to_string();
      row["rep_sign"] = e.rep_sign;
    }
    entries.push_back(std::move(row));
  }
  json out{{"group", wg::to_string(group)},
           {"n", n},
           {"N", N},
           {"entries", std::move(entries)}};
  std::cout << out.dump() << "\n";

  if (use_cache) {
    const int char_n = group == wg::GroupKind::Unitary ? n : 2 * n;
    const fs::path path =
        fs::path(cache_dir) / wg::character_cache_filename(char_n);
    if (!fs::exists(path)) save_snapshot(cache_dir, char_n);
  }
  return 0;
}

// --- integrate -----------------------------------------------------------

int cmd_integrate(const std::string& spec_file, const std::string& spec_inline,
                  long long mc_samples, std::uint64_t seed, int threads,
                  const std::string& cache_dir, bool no_cache) {
  if (spec_file.empty() == spec_inline.empty())
    throw std::invalid_argument(
        "provide exactly one of a spec file or --spec");
  std::string text = spec_inline;
  if (!spec_file.empty()) {
    std::ifstream in(spec_file);
    if (!in) throw std::invalid_argument("cannot read " + spec_file);
    std::ostringstream buf;
    buf << in.rdbuf();
    text = buf.str();
  }

  if (!no_cache) load_snapshots(cache_dir);

  const wg::MomentSpec spec = wg::MomentSpec::parse(text);
  const wg::Rational exact = wg::integrate(spec);

  json out = rational_json(exact);
  if (mc_samples > 0) {
    const wg::SampleEstimate est =
        wg::estimate_moment(spec, mc_samples, seed, threads);
    const double diff = std::abs(est.mean - std::complex<double>(exact.get_d()));
    out["estimate"] = json{{"mean", json{{"re", est.mean.real()},
                                         {"im", est.mean.imag()}}},
                           {"stderr", est.stderr_value},
                           {"samples", est.samples},
                           {"seed", est.seed}};
    out["sigma_ratio"] = diff == 0.0 ? 0.0 : diff / est.stderr_value;
  }
  std::cout << out.dump() << "\n";
  return 0;
}

// --- selftest ------------------------------------------------------------

int cmd_selftest(int level, std::uint64_t seed, const std::string& cache_dir,
                 bool no_cache) {
  wg::SelfTestOptions options;
  options.level = level;
  options.seed = seed;
  if (!no_cache) options.cache_dir = cache_dir;

  const std::vector<wg::SelfTestResult> results = wg::run_selftests(options);
  bool all_passed = true;
  for (const wg::SelfTestResult& r : results) {
    std::ostringstream line;
    line << (r.passed ? "PASS" : "FAIL") << " " << r.suite;
    if (!r.passed) line << ": " << r.detail;
    line.setf(std::ios::fixed);
    line.precision(2);
    line << " (" << r.seconds << "s)";
    std::cout << line.str() << "\n";
    all_passed = all_passed && r.passed;
  }
  return all_passed ? 0 : 1;
}

// --- cache ---------------------------------------------------------------

int cmd_cache_write(int n, const std::string& cache_dir) {
  if (cache_dir.empty())
    throw std::invalid_argument(
        "cache write needs --cache-dir or WG_CACHE_DIR");
  if (n < 1) throw std::invalid_argument("order n must be >= 1");
  wg::preload_characters(n);
  save_snapshot(cache_dir, n);
  const fs::path path = fs::path(cache_dir) / wg::character_cache_filename(n);
  json out{{"action", "write"}, {"n", n}, {"file", path.string()}};
  std::cout << out.dump() << "\n";
  return 0;
}

int cmd_cache_verify(const std::string& cache_dir) {
  if (cache_dir.empty())
    throw std::invalid_argument(
        "cache verify needs --cache-dir or WG_CACHE_DIR");
  json files = json::array();
  bool all_ok = true;
  if (fs::is_directory(cache_dir)) {
    std::vector<fs::path> paths;
    for (const auto& entry : fs::directory_iterator(cache_dir)) {
      if (!entry.is_regular_file()) continue;
      if (is_snapshot_name(entry.path().filename().string()))
        paths.push_back(entry.path());
    }
    std::sort(paths.begin(), paths.end());
    for (const fs::path& path : paths) {
      std::ifstream in(path);
      std::optional<std::string> mismatch;
      try {
        mismatch = wg::verify_character_snapshot(in);
      } catch (const std::exception& e) {
        mismatch = e.what();
      }
      json row{{"file", path.filename().string()}, {"ok", !mismatch}};
      if (mismatch) row["detail"] = *mismatch;
      all_ok = all_ok && !mismatch;
      files.push_back(std::move(row));
    }
  }
  json out{{"action", "verify"}, {"files", std::move(files)}};
  std::cout << out.dump() << "\n";
  return all_ok ? 0 : 1;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Exact Weingarten functions and Haar-moment integration for "
               "U(N), O(N) and Sp(2N)"};
  app.require_subcommand(1);

  std::string cache_dir;
  if (const char* env = std::getenv("WG_CACHE_DIR")) cache_dir = env;
  bool no_cache = false;
  app.add_option("--cache-dir", cache_dir,
                 "directory for character-table snapshots "
                 "(default: $WG_CACHE_DIR)");
  app.add_flag("--no-cache", no_cache, "ignore the on-disk cache");

  std::string group_name;
  int n = 0;
  int N = 0;

  // value
  auto* value = app.add_subcommand(
      "value", "One Weingarten value. --class is a partition of n; for sp it "
               "may be a permutation of degree 2n instead (the value is "
               "sign-covariant: a partition label means the sign-positive "
               "canonical representative).");
  std::string class_label;
  value->add_option("--group", group_name, "u, o or sp")->required();
  value->add_option("--n", n, "order (number of factor pairs)")->required();
  value->add_option("--N", N, "dimension (half-dimension for sp)")->required();
  value->add_option("--class", class_label, "cycle/coset type, e.g. 2,1")
      ->required();

  // table
  auto* table = app.add_subcommand(
      "table", "All Weingarten values of one order, one entry per class.");
  table->add_option("--group", group_name, "u, o or sp")->required();
  table->add_option("--n", n, "order")->required();
  table->add_option("--N", N, "dimension (half-dimension for sp)")->required();

  // integrate
  auto* integrate = app.add_subcommand(
      "integrate", "Exact Haar moment of a product of matrix entries, from a "
                   "JSON spec; --mc adds a Monte-Carlo estimate.");
  std::string spec_file, spec_inline;
  long long mc_samples = 0;
  std::uint64_t seed = 42;
  int threads = 0;
  integrate->add_option("file", spec_file, "spec file, e.g. "
                        R"({"group":"u","N":3,"a":[1],"b":[1],"c":[1],"d":[1]})");
  integrate->add_option("--spec", spec_inline, "inline JSON spec");
  integrate->add_option("--mc", mc_samples, "Monte-Carlo sample count");
  integrate->add_option("--seed", seed, "Monte-Carlo seed (default 42)");
  integrate->add_option("--threads", threads,
                        "Monte-Carlo worker threads (0 = hardware)");

  // selftest
  auto* selftest = app.add_subcommand(
      "selftest", "Exact identity suites; one PASS/FAIL line per suite.");
  int level = 4;
  std::uint64_t st_seed = 0x5eedba5eULL;
  selftest->add_option("--level", level,
                       "degree bound per suite, 1..6 (default 4)");
  selftest->add_option("--seed", st_seed, "seed for randomized picks");

  // cache
  auto* cache = app.add_subcommand(
      "cache", "Write or verify character-table snapshots.");
  cache->require_subcommand(1);
  auto* cache_write = cache->add_subcommand(
      "write", "compute the full S_n character table and write its snapshot");
  int cache_n = 0;
  cache_write->add_option("--n", cache_n, "symmetric group degree")
      ->required();
  auto* cache_verify = cache->add_subcommand(
      "verify", "recompute and compare every snapshot in the cache directory");

  // Let the global --cache-dir/--no-cache appear after the subcommand too.
  for (CLI::App* sub : {value, table, integrate, selftest, cache, cache_write,
                        cache_verify})
    sub->fallthrough();

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  }

  try {
    if (*value) return cmd_value(group_name, n, N, class_label);
    if (*table) return cmd_table(group_name, n, N, cache_dir, no_cache);
    if (*integrate)
      return cmd_integrate(spec_file, spec_inline, mc_samples, seed, threads,
                           cache_dir, no_cache);
    if (*selftest) return cmd_selftest(level, st_seed, cache_dir, no_cache);
    if (*cache_write) return cmd_cache_write(cache_n, cache_dir);
    if (*cache_verify) return cmd_cache_verify(cache_dir);
  } catch (const wg::unsupported_scale_error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 3;
  } catch (const wg::numerical_failure_error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 4;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  }
  return 0;
}
