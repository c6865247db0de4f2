// Product acceptance gate. Runs seven end-to-end checks and prints exactly
// one PASS/FAIL line per criterion; exits nonzero if any fail.
//
//   1. exact small-moment suite across dimensions        (< 10 s)
//   2. orthogonality/delta identity suites, exact        (< 60 s)
//   3. Monte-Carlo concordance, 4 stderr at 1e6 samples  (< 300 s)
//   4. edge dimensions: U(1) and O(1) moments equal 1
//   5. independent oracles: characters and Jack at alpha = 1
//   6. scale targets through the installed CLI           (30 s / 120 s each)
//   7. byte-level determinism of CLI output and estimates

#include <chrono>
#include <complex>
#include <cstdint>
#include <cstdio>
#include <cstdlib>
#include <cstring>
#include <filesystem>
#include <iostream>
#include <sstream>
#include <string>
#include <sys/wait.h>
#include <vector>

#include "wg/character_oracle.hpp"
#include "wg/characters.hpp"
#include "wg/haar_mc.hpp"
#include "wg/integrator.hpp"
#include "wg/jack.hpp"
#include "wg/partition.hpp"
#include "wg/rational.hpp"
#include "wg/selftest.hpp"
#include "wg/symfunc.hpp"

using namespace wg;

namespace {

using clock_type = std::chrono::steady_clock;

double seconds_since(clock_type::time_point start) {
  return std::chrono::duration<double>(clock_type::now() - start).count();
}

int failures = 0;

void report(int id, const std::string& name, bool ok, double secs,
            const std::string& detail) {
  std::ostringstream line;
  line << (ok ? "PASS" : "FAIL") << " criterion " << id << ": " << name;
  line.setf(std::ios::fixed);
  line.precision(2);
  line << " (" << secs << "s)";
  if (!ok && !detail.empty()) line << " -- " << detail;
  std::cout << line.str() << std::endl;
  if (!ok) ++failures;
}

MomentSpec unitary_spec(int N, std::vector<int> a, std::vector<int> b,
                        std::vector<int> c, std::vector<int> d) {
  MomentSpec s;
  s.group = GroupKind::Unitary;
  s.dimension = N;
  s.a = std::move(a);
  s.b = std::move(b);
  s.c = std::move(c);
  s.d = std::move(d);
  return s;
}

MomentSpec paired_spec(GroupKind group, int N, std::vector<int> a,
                       std::vector<int> b) {
  MomentSpec s;
  s.group = group;
  s.dimension = N;
  s.a = std::move(a);
  s.b = std::move(b);
  return s;
}

// The dimension-indexed moment families checked exactly (criterion 1) and
// against sampling (criterion 3).
std::vector<MomentSpec> unitary_family(int N) {
  return {
      unitary_spec(N, {1}, {1}, {1}, {1}),              // 1/N
      unitary_spec(N, {1, 2}, {1, 2}, {1, 2}, {1, 2}),  // 1/(N^2-1)
      unitary_spec(N, {1, 2}, {1, 2}, {2, 1}, {1, 2}),  // -1/(N(N^2-1))
      unitary_spec(N, {1, 1}, {1, 2}, {1, 2}, {1, 1}),  // 1/(N(N+1))
  };
}

std::vector<Rational> unitary_expected(int N) {
  return {
      make_rational(1, N),
      make_rational(1, 1LL * N * N - 1),
      make_rational(-1, 1LL * N * (N * N - 1)),
      make_rational(1, 1LL * N * (N + 1)),
  };
}

std::vector<MomentSpec> orthogonal_family(int N) {
  return {
      paired_spec(GroupKind::Orthogonal, N, {1, 1}, {1, 1}),
      paired_spec(GroupKind::Orthogonal, N, {1, 1, 1, 1}, {1, 1, 1, 1}),
      paired_spec(GroupKind::Orthogonal, N, {1, 1, 2, 2}, {1, 1, 2, 2}),
      paired_spec(GroupKind::Orthogonal, N, {1, 1, 2, 2}, {1, 2, 1, 2}),
  };
}

std::vector<Rational> orthogonal_expected(int N) {
  const long long base = 1LL * N * (N - 1) * (N + 2);
  return {
      make_rational(1, N),
      make_rational(3, 1LL * N * (N + 2)),
      make_rational(N + 1, base),
      make_rational(-1, base),
  };
}

std::vector<MomentSpec> symplectic_family(int N) {
  return {
      paired_spec(GroupKind::Symplectic, N, {1, N + 1}, {1, N + 1}),
      paired_spec(GroupKind::Symplectic, N, {1, N + 1, 2, N + 2},
                  {1, N + 1, 2, N + 2}),
  };
}

std::vector<Rational> symplectic_expected(int N) {
  return {
      make_rational(1, 2 * N),
      make_rational(2 * N - 1, 4LL * N * (2 * N + 1) * (N - 1)),
  };
}

// --- criteria ------------------------------------------------------------

void criterion_exact_moments() {
  const auto start = clock_type::now();
  std::string detail;
  auto check_family = [&](const std::vector<MomentSpec>& specs,
                          const std::vector<Rational>& expected) {
    for (size_t i = 0; i < specs.size(); ++i) {
      const Rational got = integrate(specs[i]);
      if (got != expected[i] && detail.empty())
        detail = "spec " + specs[i].to_json() + ": got " + to_string(got) +
                 ", want " + to_string(expected[i]);
    }
  };
  for (int N : {2, 3, 4, 7}) check_family(unitary_family(N), unitary_expected(N));
  for (int N : {3, 4, 5})
    check_family(orthogonal_family(N), orthogonal_expected(N));
  for (int N : {2, 3})
    check_family(symplectic_family(N), symplectic_expected(N));
  const double secs = seconds_since(start);
  const bool ok = detail.empty() && secs < 10.0;
  if (detail.empty() && secs >= 10.0) detail = "exceeded 10 s budget";
  report(1, "exact small-moment suite", ok, secs, detail);
}

void criterion_identity_suites() {
  const auto start = clock_type::now();
  SelfTestOptions options;
  options.level = kMaxSelfTestLevel;  // characters to degree 6
  std::string detail;
  try {
    const auto results = run_selftests(options);
    for (const char* name :
         {"character-orthogonality", "zonal-orthogonality",
          "zonal-completeness", "twisted-orthogonality",
          "twisted-completeness", "delta-power-sums"}) {
      bool found = false;
      for (const SelfTestResult& r : results)
        if (r.suite == name) {
          found = true;
          if (!r.passed && detail.empty())
            detail = r.suite + ": " + r.detail;
        }
      if (!found && detail.empty())
        detail = std::string("suite missing: ") + name;
    }
  } catch (const std::exception& e) {
    detail = e.what();
  }
  const double secs = seconds_since(start);
  const bool ok = detail.empty() && secs < 60.0;
  if (detail.empty() && secs >= 60.0) detail = "exceeded 60 s budget";
  report(2, "orthogonality and delta-sum identity suites", ok, secs, detail);
}

void criterion_mc_concordance() {
  const auto start = clock_type::now();
  std::string detail;
  double worst = 0.0;
  auto check_batch = [&](const std::vector<MomentSpec>& specs,
                         const std::vector<Rational>& expected,
                         long long samples, std::uint64_t seed) {
    const auto estimates = estimate_moments(specs, samples, seed);
    for (size_t i = 0; i < specs.size(); ++i) {
      const double exact = expected[i].get_d();
      const double err =
          std::abs(estimates[i].mean - std::complex<double>(exact));
      const double ratio = err / estimates[i].stderr_value;
      worst = std::max(worst, ratio);
      if (err >= 4.0 * estimates[i].stderr_value && detail.empty()) {
        std::ostringstream os;
        os << "spec " << specs[i].to_json() << ": |exact - mean| = " << err
           << " vs 4 stderr = " << 4.0 * estimates[i].stderr_value;
        detail = os.str();
      }
    }
  };
  for (int N : {2, 3, 4, 7})
    check_batch(unitary_family(N), unitary_expected(N), 1000000,
                0x5eed0100 + N);
  for (int N : {3, 4, 5})
    check_batch(orthogonal_family(N), orthogonal_expected(N), 1000000,
                0x5eed0200 + N);
  check_batch(symplectic_family(2), symplectic_expected(2), 1000000,
              0x5eed0302);
  check_batch(symplectic_family(3), symplectic_expected(3), 100000,
              0x5eed0303);
  const double secs = seconds_since(start);
  const bool ok = detail.empty() && secs < 300.0;
  if (detail.empty() && secs >= 300.0) detail = "exceeded 300 s budget";
  std::ostringstream note;
  note.setf(std::ios::fixed);
  note.precision(2);
  note << "worst deviation " << worst << " stderr";
  report(3, "Monte-Carlo concordance, " + note.str(), ok, secs, detail);
}

void criterion_edge_dimensions() {
  const auto start = clock_type::now();
  std::string detail;
  for (int n = 1; n <= 4 && detail.empty(); ++n) {
    const std::vector<int> ones_n(n, 1);
    const MomentSpec u = unitary_spec(1, ones_n, ones_n, ones_n, ones_n);
    if (integrate(u) != 1)
      detail = "U(1) moment of order " + std::to_string(n) + ": got " +
               to_string(integrate(u));
    const std::vector<int> ones_2n(2 * n, 1);
    const MomentSpec o = paired_spec(GroupKind::Orthogonal, 1, ones_2n, ones_2n);
    if (detail.empty() && integrate(o) != 1)
      detail = "O(1) moment of order " + std::to_string(2 * n) + ": got " +
               to_string(integrate(o));
  }
  report(4, "U(1) and O(1) edge moments equal 1", detail.empty(),
         seconds_since(start), detail);
}

void criterion_oracles() {
  const auto start = clock_type::now();
  std::string detail;
  for (int n = 1; n <= 6 && detail.empty(); ++n)
    for (const Partition& lambda : partitions_of(n)) {
      for (const Partition& mu : partitions_of(n))
        if (character(lambda, mu) != character_oracle(lambda, mu)) {
          detail = "chi_" + lambda.to_string() + "(" + mu.to_string() +
                   ") disagrees with the oracle";
          break;
        }
      if (!detail.empty()) break;
    }
  for (int n = 1; n <= 6 && detail.empty(); ++n)
    for (const Partition& lambda : partitions_of(n))
      for (int N = 1; N <= 6; ++N) {
        const Rational expected = Rational(factorial(n)) *
                                  schur_at_ones(lambda, N) /
                                  make_rational(irrep_dimension(lambda));
        if (jack_at_ones(lambda, JackAlpha::Schur, N) != expected) {
          detail = "Jack(1) at " + lambda.to_string() +
                   ", N=" + std::to_string(N);
          break;
        }
      }
  report(5, "character and Jack oracles agree", detail.empty(),
         seconds_since(start), detail);
}

// --- CLI-driving criteria ------------------------------------------------

std::string cli_path() {
  if (const char* env = std::getenv("WG_CLI")) return env;
#ifdef WG_CLI_DEFAULT_PATH
  return WG_CLI_DEFAULT_PATH;
#else
  return {};
#endif
}

struct RunResult {
  int status = -1;
  std::string out;
  double secs = 0.0;
};

RunResult run_cli(const std::string& args) {
  const std::string cmd =
      "env -u WG_CACHE_DIR " + cli_path() + " " + args + " 2>/dev/null";
  const auto start = clock_type::now();
  RunResult r;
  FILE* pipe = popen(cmd.c_str(), "r");
  if (!pipe) return r;
  char buf[65536];
  size_t got;
  while ((got = fread(buf, 1, sizeof buf, pipe)) > 0) r.out.append(buf, got);
  const int rc = pclose(pipe);
  r.secs = seconds_since(start);
  r.status = WIFEXITED(rc) ? WEXITSTATUS(rc) : -1;
  return r;
}

void criterion_scale_targets() {
  const auto start = clock_type::now();
  std::string detail;
  const struct {
    const char* args;
    double budget;
  } targets[] = {
      {"table --group u --n 8 --N 10", 30.0},
      {"table --group o --n 5 --N 6", 120.0},
      {"table --group sp --n 5 --N 6", 120.0},
  };
  if (cli_path().empty() || !std::filesystem::exists(cli_path())) {
    detail = "wg binary not found";
  } else {
    for (const auto& t : targets) {
      const RunResult r = run_cli(t.args);
      if (r.status != 0 || r.out.empty() || r.out.front() != '{') {
        detail = std::string(t.args) + ": bad run (exit " +
                 std::to_string(r.status) + ")";
        break;
      }
      if (r.secs >= t.budget) {
        std::ostringstream os;
        os.setf(std::ios::fixed);
        os.precision(2);
        os << t.args << ": " << r.secs << "s over the " << t.budget
           << "s budget";
        detail = os.str();
        break;
      }
    }
  }
  report(6, "scale targets through the CLI", detail.empty(),
         seconds_since(start), detail);
}

void criterion_determinism() {
  const auto start = clock_type::now();
  std::string detail;

  if (cli_path().empty() || !std::filesystem::exists(cli_path())) {
    detail = "wg binary not found";
  } else {
    const char* exact_cmds[] = {
        "value --group u --n 5 --N 6 --class 3,1,1",
        "table --group sp --n 4 --N 5",
        "selftest --level 3",
    };
    for (const char* cmd : exact_cmds) {
      const RunResult a = run_cli(cmd);
      const RunResult b = run_cli(cmd);
      if (a.status != 0 || a.out != b.out || a.out.empty()) {
        detail = std::string(cmd) + ": runs differ";
        break;
      }
    }
    if (detail.empty()) {
      const std::string mc =
          "integrate --spec "
          R"('{"group":"u","N":4,"a":[1,2],"b":[1,2],"c":[1,2],"d":[1,2]}')"
          " --mc 50000 --seed 99 --threads 2";
      const RunResult a = run_cli(mc);
      const RunResult b = run_cli(mc);
      if (a.status != 0 || a.out != b.out) detail = "MC runs differ";
    }
  }
  if (detail.empty()) {
    // library-level estimates, bit for bit
    const MomentSpec spec =
        paired_spec(GroupKind::Symplectic, 2, {1, 3}, {1, 3});
    const SampleEstimate a = estimate_moment(spec, 50000, 7, 1);
    const SampleEstimate b = estimate_moment(spec, 50000, 7, 4);
    if (std::memcmp(&a.mean, &b.mean, sizeof a.mean) != 0 ||
        std::memcmp(&a.stderr_value, &b.stderr_value, sizeof a.stderr_value) !=
            0)
      detail = "estimate bits differ across worker counts";
  }
  report(7, "byte-identical reruns", detail.empty(), seconds_since(start),
         detail);
}

}  // namespace

int main() {
  criterion_exact_moments();
  criterion_identity_suites();
  criterion_mc_concordance();
  criterion_edge_dimensions();
  criterion_oracles();
  criterion_scale_targets();
  criterion_determinism();

  if (failures == 0) {
    std::cout << "all 7 criteria passed" << std::endl;
    return 0;
  }
  std::cout << failures << " criteria failed" << std::endl;
  return 1;
}
