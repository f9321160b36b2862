#include <doctest.h>

#include <cmath>
#include <complex>
#include <numbers>
#include <random>

#include "qgevrey/theta.hpp"

using namespace qgevrey;

namespace {

constexpr double kPi = std::numbers::pi;

double rel_between(const LogComplex& a, const LogComplex& b) {
  const LogComplex d = lc_sub(a, b);
  if (lc_is_zero(d)) return 0.0;
  return std::exp(d.log_mag - std::max(a.log_mag, b.log_mag));
}

double clearance_brute(const LogComplex& z, const ThetaParams& p) {
  double best = 1.0;  // k -> +inf limit
  for (int k = -50; k <= 50; ++k) {
    const double lm = z.log_mag - k * p.log_qs();
    if (lm > 600.0) continue;
    best = std::min(best, std::abs(1.0 + std::polar(std::exp(lm), z.phase)));
  }
  return best;
}

}  // namespace

TEST_SUITE("theta") {

TEST_CASE("zeros of the spiral are reported as flagged zeros") {
  const ThetaParams p(2.0, 1.0, 1e-12);
  CHECK(theta_eval(lc_from_real(-1.0), p).flagged_zero);                     // -q^{0s}
  CHECK(theta_eval(lc_from_real(-8.0), p).flagged_zero);                     // -q^{3s}
  CHECK(theta_eval(lc_from_real(-8.0), p, ThetaMethod::kProduct).flagged_zero);
  const ThetaParams ph(2.0, 0.5, 1e-12);
  CHECK(theta_eval(lc_make(1.5 * std::log(2.0), kPi), ph).flagged_zero);     // -q^{3s}, s=1/2
}

TEST_CASE("series and product methods agree") {
  const ThetaParams p(2.0, 1.0, 1e-12);
  const ThetaValue s = theta_eval(lc_from_real(1.0), p, ThetaMethod::kSeries);
  const ThetaValue pr = theta_eval(lc_from_real(1.0), p, ThetaMethod::kProduct);
  CHECK(rel_between(s.value, pr.value) < 1e-10);

  std::mt19937_64 rng(29);
  std::uniform_real_distribution<double> mag(std::log(0.1), std::log(10.0));
  std::uniform_real_distribution<double> ang(-kPi, kPi);
  int tested = 0;
  while (tested < 60) {
    const LogComplex z = lc_make(mag(rng), ang(rng));
    if (spiral_clearance(z, p) <= 0.05) continue;
    ++tested;
    const ThetaValue a = theta_eval(z, p, ThetaMethod::kSeries);
    const ThetaValue b = theta_eval(z, p, ThetaMethod::kProduct);
    CHECK(rel_between(a.value, b.value) < 1e-10);
  }
}

TEST_CASE("functional equation Theta(q^s z) = q^s z Theta(z)") {
  std::mt19937_64 rng(31);
  std::uniform_real_distribution<double> mag(std::log(0.1), std::log(10.0));
  std::uniform_real_distribution<double> ang(-kPi, kPi);
  for (double s : {0.5, 1.0, 2.0}) {
    const ThetaParams p(2.0, s, 1e-12);
    int tested = 0;
    while (tested < 40) {
      const LogComplex z = lc_make(mag(rng), ang(rng));
      if (spiral_clearance(z, p) <= 0.05) continue;
      const LogComplex zq = lc_scale_log(z, p.log_qs());
      if (spiral_clearance(zq, p) <= 0.05) continue;
      ++tested;
      const LogComplex lhs = theta_eval(zq, p).value;
      const LogComplex rhs = lc_mul(zq, theta_eval(z, p).value);
      CHECK(rel_between(lhs, rhs) < 1e-10);
    }
  }
}

TEST_CASE("z = 0 is a domain error") {
  const ThetaParams p(2.0, 1.0, 1e-12);
  CHECK_THROWS_AS((void)theta_eval(lc_zero(), p), std::domain_error);
  CHECK_THROWS_AS((void)spiral_clearance(lc_zero(), p), std::domain_error);
}

TEST_CASE("spiral clearance closed cases") {
  const ThetaParams p(2.0, 1.0, 1e-12);
  for (int k : {-3, 0, 2, 7}) {
    const LogComplex z = lc_make(k * p.log_qs(), kPi);  // z = -q^{ks}
    CHECK(spiral_clearance(z, p) == doctest::Approx(0.0).epsilon(1e-12));
  }
  CHECK(spiral_clearance(lc_from_real(1.0), p) == doctest::Approx(1.0));
  CHECK(spiral_clearance(lc_from_real(-1.5), p) == doctest::Approx(0.25).epsilon(1e-12));
}

TEST_CASE("spiral clearance matches the brute-force window") {
  std::mt19937_64 rng(37);
  std::uniform_real_distribution<double> mag(std::log(0.05), std::log(20.0));
  std::uniform_real_distribution<double> ang(-kPi, kPi);
  for (double s : {0.5, 1.0}) {
    const ThetaParams p(2.0, s, 1e-12);
    for (int i = 0; i < 200; ++i) {
      const LogComplex z = lc_make(mag(rng), ang(rng));
      CHECK(spiral_clearance(z, p) == doctest::Approx(clearance_brute(z, p)).epsilon(1e-10));
    }
  }
}

TEST_CASE("lower bound closed cases") {
  const ThetaParams p(2.0, 1.0, 1e-12);
  CHECK(theta_lower_bound_log(lc_from_real(1.0), p, 1.0, 1.0) == doctest::Approx(0.0));
  // |z| = q^s: log^2|z|/(2 s lnq) + log|z|/2 = s lnq/2 + s lnq/2 = s lnq
  CHECK(theta_lower_bound_log(lc_from_real(2.0), p, 1.0, 1.0) ==
        doctest::Approx(p.log_qs()).epsilon(1e-13));
  CHECK_THROWS_AS((void)theta_lower_bound_log(lc_one(), p, -0.1, 1.0), std::invalid_argument);
}

TEST_CASE("empirical lower-bound constants, calibrated per (q, s)") {
  // The admissible C collapses when q^s nears sqrt(2): the bilateral series
  // almost cancels at the zero z = -1 (Theta'_{sqrt 2}(-1) ~ 5.3e-5), so the
  // per-order floors differ by orders of magnitude.
  std::mt19937_64 rng(41);
  std::uniform_real_distribution<double> mag(std::log(0.1), std::log(10.0));
  std::uniform_real_distribution<double> ang(-kPi, kPi);
  const std::pair<double, double> order_and_floor[] = {{0.5, 1e-5}, {1.0, 1e-3}, {2.0, 1e-3}};
  for (const auto& [s, floor] : order_and_floor) {
    const ThetaParams p(2.0, s, 1e-12);
    int tested = 0;
    double min_admissible = std::numeric_limits<double>::infinity();
    while (tested < 300) {
      const LogComplex z = lc_make(mag(rng), ang(rng));
      if (spiral_clearance(z, p) <= 0.1) continue;
      ++tested;
      const double no_c = theta_lower_bound_log(z, p, 0.1, 1.0);
      min_admissible = std::min(min_admissible, std::exp(theta_eval(z, p).value.log_mag - no_c));
    }
    CHECK(min_admissible >= floor);
  }
}

}  // TEST_SUITE
