// Acceptance gate: one line per criterion, each with its tolerance and
// runtime budget spelled out inline.  Exits nonzero if any criterion fails.

#include <chrono>
#include <cmath>
#include <cstdio>
#include <numbers>
#include <string>
#include <vector>

#include "cli_runner.hpp"
#include "hyperball/asymptotics.hpp"
#include "hyperball/geometry.hpp"
#include "hyperball/montecarlo.hpp"
#include "hyperball/specfun.hpp"
#include "hyperball/table.hpp"

using namespace hyperball;

namespace {

int failures = 0;

class Timer {
 public:
  Timer() : start_(std::chrono::steady_clock::now()) {}
  double seconds() const {
    return std::chrono::duration<double>(std::chrono::steady_clock::now() -
                                         start_)
        .count();
  }

 private:
  std::chrono::steady_clock::time_point start_;
};

void report(int id, const char* name, bool ok, double seconds) {
  std::printf("%s  criterion %2d: %s  (%.2fs)\n", ok ? "PASS" : "FAIL", id,
              name, seconds);
  std::fflush(stdout);
  if (!ok) ++failures;
}

// 1. Limit constant: prints 2.0663656 to 8 significant digits and the gap
//    at n = 1e6 is at most 2e-6.  Runtime < 1 s.
void criterion_1() {
  Timer timer;
  const double limit = growth_limit().value();
  const std::string printed = Table::format_real(limit);
  bool ok = printed.rfind("2.0663656", 0) == 0;
  ok = ok && std::fabs(growth_ratio(Dimension(1000000)).value() - limit) <= 2e-6;
  const double elapsed = timer.seconds();
  report(1, "limit constant and large-n gap", ok && elapsed < 1.0, elapsed);
}

// 2. Product and closed volume forms agree within 1e-10 for n in [3, 1e4]
//    and r in {0.5, sqrt(n)/2, 1, 2}.  Runtime < 30 s.
void criterion_2() {
  Timer timer;
  double worst = 0.0;
  for (std::int64_t n = 3; n <= 10000; ++n) {
    const Dimension dim(n);
    const double rc = circumscribed_radius(dim).value();
    for (const double r : {0.5, rc, 1.0, 2.0}) {
      const double a = log_ball_volume_product(dim, Radius(r)).log();
      const double b = log_ball_volume(dim, Radius(r)).log();
      worst = std::max(worst, std::fabs(a - b));
    }
  }
  const double elapsed = timer.seconds();
  report(2, "product and closed forms agree", worst <= 1e-10 && elapsed < 30.0,
         elapsed);
}

// 3. The literal-formula ratio at n equals the volume-quotient ratio at n-1
//    within 1e-9 relative, for every n in [3, 1e4].
void criterion_3() {
  Timer timer;
  double worst = 0.0;
  for (std::int64_t n = 3; n <= 10000; ++n) {
    const double lhs = growth_ratio_formula(Dimension(n)).value();
    const double rhs = growth_ratio(Dimension(n - 1)).value();
    worst = std::max(worst, std::fabs(lhs / rhs - 1.0));
  }
  report(3, "formula ratio matches shifted volume ratio", worst <= 1e-9,
         timer.seconds());
}

// 4. Low-dimension anchors: growth_ratio(2) = sqrt(3) and growth_ratio(3) =
//    pi/sqrt(3), both to 1e-12 relative.
void criterion_4() {
  Timer timer;
  const double g2 = growth_ratio(Dimension(2)).value();
  const double g3 = growth_ratio(Dimension(3)).value();
  const bool ok =
      std::fabs(g2 / std::sqrt(3.0) - 1.0) <= 1e-12 &&
      std::fabs(g3 / (std::numbers::pi / std::sqrt(3.0)) - 1.0) <= 1e-12;
  report(4, "low-dimension anchors", ok, timer.seconds());
}

// 5. Convergence fit over {1e2, 1e3, 1e4, 1e5}: order in [-1.05, -0.95] and
//    constant within 1.033 +/- 0.02.
void criterion_5() {
  Timer timer;
  std::vector<Dimension> dims;
  for (const std::int64_t n : {100, 1000, 10000, 100000}) dims.emplace_back(n);
  const ConvergenceReport rep = convergence_scan(dims);
  const bool ok = rep.fitted_order >= -1.05 && rep.fitted_order <= -0.95 &&
                  std::fabs(rep.fitted_constant - 1.033) <= 0.02;
  report(5, "convergence order and constant", ok, timer.seconds());
}

// 6. growth_ratio strictly increases and stays below the limit over the
//    whole range n in [2, 1e5].
void criterion_6() {
  Timer timer;
  const double limit = growth_limit().value();
  double prev = growth_ratio(Dimension(2)).value();
  bool ok = prev > 0.0 && prev < limit;
  for (std::int64_t n = 3; n <= 100000 && ok; ++n) {
    const double g = growth_ratio(Dimension(n)).value();
    ok = g > prev && g < limit;
    prev = g;
  }
  report(6, "monotone approach from below", ok, timer.seconds());
}

// 7. Fixed radius r = 1: the volume peaks at n = 5, has dropped below -90
//    in log terms by n = 100, and decreases strictly for n >= 6.
void criterion_7() {
  Timer timer;
  const Radius one(1.0);
  bool ok = peak_dimension(one, Dimension(1000)).peak_n == 5;
  ok = ok && log_ball_volume(Dimension(100), one).log() < -90.0;
  double prev = log_ball_volume(Dimension(6), one).log();
  for (std::int64_t n = 7; n <= 10000 && ok; ++n) {
    const double lv = log_ball_volume(Dimension(n), one).log();
    ok = lv < prev;
    prev = lv;
  }
  report(7, "fixed-radius decay and peak", ok, timer.seconds());
}

// 8. Monte Carlo cross-check: estimates at the circumscribed radius sit
//    within 3 standard errors of the closed form for n in [2, 8] at 1e6
//    samples, and at n = 4 at least 17 of 20 seeds land within 2 standard
//    errors.  Runtime < 60 s.
void criterion_8() {
  Timer timer;
  bool ok = true;
  for (std::int64_t n = 2; n <= 8; ++n) {
    const Dimension dim(n);
    const Radius r = circumscribed_radius(dim);
    const double analytic = std::exp(log_ball_volume(dim, r).log());
    const McEstimate est = mc_ball_volume(dim, r, 1000000, 42);
    ok = ok && std::fabs(est.volume_estimate - analytic) <= 3.0 * est.std_error;
  }
  const double analytic4 = std::exp(log_ball_volume(Dimension(4), Radius(1.0)).log());
  int within = 0;
  for (std::uint64_t seed = 1; seed <= 20; ++seed) {
    const McEstimate est = mc_ball_volume(Dimension(4), Radius(1.0), 100000, seed);
    if (std::fabs(est.volume_estimate - analytic4) <= 2.0 * est.std_error)
      ++within;
  }
  ok = ok && within >= 17;
  const double elapsed = timer.seconds();
  report(8, "Monte Carlo cross-check", ok && elapsed < 60.0, elapsed);
}

// 9. Circumscription geometry: every cube vertex sits on the sphere within
//    1e-12 for n in [1, 20]; sampled cube points are always inside the ball
//    for n in {3, 10, 50}.
void criterion_9() {
  Timer timer;
  bool ok = true;
  for (std::int64_t n = 1; n <= 20; ++n)
    ok = ok && vertex_on_sphere_check(Dimension(n)) <= 1e-12;
  ok = ok && cube_inside_ball_check(Dimension(3), 100000, 7) == 1.0;
  ok = ok && cube_inside_ball_check(Dimension(10), 100000, 7) == 1.0;
  ok = ok && cube_inside_ball_check(Dimension(50), 10000, 7) == 1.0;
  report(9, "circumscription geometry", ok, timer.seconds());
}

// 10. Figure reproduction through the CLI: 500 rows, strictly increasing g,
//     g = 1.7320508 +/- 1e-6 at the start, 2.0254 +/- 0.002 at the end, and
//     byte-identical output on a second run.
void criterion_10(const std::string& cli) {
  Timer timer;
  bool ok = true;
  try {
    const testutil::RunResult first =
        testutil::run_command("'" + cli + "' figure");
    const testutil::RunResult second =
        testutil::run_command("'" + cli + "' figure");
    ok = first.exit_code == 0 && second.exit_code == 0 &&
         first.output == second.output;
    const Table t = Table::from_csv(first.output);
    ok = ok && t.rows().size() == 500;
    auto as_real = [](const Table::Cell& cell) {
      return std::holds_alternative<std::int64_t>(cell)
                 ? static_cast<double>(std::get<std::int64_t>(cell))
                 : std::get<double>(cell);
    };
    double prev = 0.0;
    for (const auto& row : t.rows()) {
      const double g = as_real(row[1]);
      ok = ok && g > prev;
      prev = g;
    }
    ok = ok && std::fabs(as_real(t.rows().front()[1]) - 1.7320508) <= 1e-6;
    ok = ok && std::fabs(as_real(t.rows().back()[1]) - 2.0254) <= 0.002;
  } catch (const std::exception&) {
    ok = false;
  }
  report(10, "figure output reproduction", ok, timer.seconds());
}

// 11. log_gamma matches the exact half-integer recurrence to 1e-12 relative
//     for arguments m/2, m in [1, 2000].
void criterion_11() {
  Timer timer;
  std::vector<long double> ref(2001);
  ref[1] = 0.5L * logl(3.14159265358979323846264338327950288L);
  ref[2] = 0.0L;
  for (int m = 3; m <= 2000; ++m) ref[m] = ref[m - 2] + logl(0.5L * (m - 2));
  double worst = 0.0;
  for (int m = 1; m <= 2000; ++m) {
    const double expected = static_cast<double>(ref[m]);
    const double got = log_gamma(RealArg(0.5 * m));
    worst = std::max(worst, std::fabs(got - expected) /
                                std::max(1.0, std::fabs(expected)));
  }
  report(11, "log-gamma half-integer oracle", worst <= 1e-12, timer.seconds());
}

}  // namespace

int main(int argc, char** argv) {
  if (argc < 2) {
    std::fprintf(stderr, "usage: acceptance <path-to-cli-binary>\n");
    return 2;
  }
  const std::string cli = argv[1];

  criterion_1();
  criterion_2();
  criterion_3();
  criterion_4();
  criterion_5();
  criterion_6();
  criterion_7();
  criterion_8();
  criterion_9();
  criterion_10(cli);
  criterion_11();

  std::printf("%d/11 criteria passed\n", 11 - failures);
  return failures == 0 ? 0 : 1;
}
