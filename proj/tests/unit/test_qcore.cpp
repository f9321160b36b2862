#include <doctest.h>

#include <cmath>

#include "qgevrey/qcore.hpp"

using namespace qgevrey;

namespace {

// Brute-force long-product oracle for the infinite q-shift factorial.
double pochhammer_oracle_real(double a, double q, int terms) {
  long double acc = 1.0L;
  for (int p = 0; p < terms; ++p) acc *= (1.0L - static_cast<long double>(a) / std::pow(static_cast<long double>(q), p));
  return static_cast<double>(acc);
}

}  // namespace

TEST_SUITE("qcore") {

TEST_CASE("q-number values") {
  CHECK(q_number(0.0, QBase(2.0)) == doctest::Approx(0.0));
  CHECK(q_number(1.0, QBase(2.0)) == doctest::Approx(1.0));
  CHECK(q_number(1.0, QBase(0.3)) == doctest::Approx(1.0));
  CHECK(q_number(3.0, QBase(2.0)) == doctest::Approx(7.0).epsilon(1e-14));
}

TEST_CASE("QBase validates its base") {
  CHECK_THROWS_AS(QBase(1.0), std::invalid_argument);
  CHECK_THROWS_AS(QBase(0.0), std::invalid_argument);
  CHECK_THROWS_AS(QBase(-2.0), std::invalid_argument);
}

TEST_CASE("q-factorial logs: small cases by direct product") {
  CHECK(q_factorial_log(0, QBase(2.0)) == 0.0);
  // [3]_2! = 1 * 3 * 7 = 21
  CHECK(q_factorial_log(3, QBase(2.0)) == doctest::Approx(std::log(21.0)).epsilon(1e-14));
  // [3]_{1/2}! = 1 * 1.5 * 1.75 = 2.625
  CHECK(q_factorial_log(3, QBase(0.5)) == doctest::Approx(std::log(2.625)).epsilon(1e-14));
  // cross-check through the inversion identity: 21 = 2.625 * 2^3
  CHECK(std::log(21.0) ==
        doctest::Approx(std::log(2.625) + 3.0 * std::log(2.0)).epsilon(1e-14));
}

TEST_CASE("inversion identity [p]_q! = [p]_{1/q}! q^{p(p-1)/2} for p <= 60") {
  for (double q : {1.5, 2.0, 3.0}) {
    const QBase base(q), inv(1.0 / q);
    for (int p = 0; p <= 60; ++p) {
      const double lhs = q_factorial_log(p, base);
      const double rhs =
          q_factorial_log(p, inv) + (static_cast<double>(p) * (p - 1.0) / 2.0) * std::log(q);
      CHECK(std::abs(lhs - rhs) < 1e-11);
    }
  }
}

TEST_CASE("envelope 1 <= [p]_{1/q}! <= (q/(q-1))^p for p <= 200") {
  for (double q : {1.5, 2.0, 3.0}) {
    const QBase inv(1.0 / q);
    const double cap = std::log(q / (q - 1.0));
    for (int p = 0; p <= 200; ++p) {
      const double lm = q_factorial_log(p, inv);
      CHECK(lm >= -1e-10);
      CHECK(lm <= p * cap + 1e-10);
    }
  }
}

TEST_CASE("finite q-pochhammer") {
  const QBase base(2.0);
  CHECK(lc_pow_int(q_pochhammer(lc_from_real(0.7), base, 0), 1).log_mag == 0.0);  // empty product
  // (1/2; 1/2)_2 = (1 - 1/2)(1 - 1/4) = 0.375
  const LogComplex r = q_pochhammer(lc_from_real(0.5), base, 2);
  CHECK(std::exp(r.log_mag) == doctest::Approx(0.375).epsilon(1e-14));
  CHECK(std::abs(r.phase) < 1e-14);
}

TEST_CASE("pochhammer hits exact zero when a = q^p") {
  const QBase base(2.0);
  CHECK(lc_is_zero(q_pochhammer(lc_from_real(4.0), base, 5)));  // a = q^2, n > 2
  CHECK(!lc_is_zero(q_pochhammer(lc_from_real(4.0), base, 2)));
}

TEST_CASE("infinite q-pochhammer vs the brute-force long product") {
  const QBase base(2.0);
  const QPochhammerInf r = q_pochhammer_inf(lc_from_real(0.5), base, 1e-12);
  const double want = pochhammer_oracle_real(0.5, 2.0, 10000);
  CHECK(std::abs(std::exp(r.value.log_mag) * std::cos(r.value.phase) - want) <
        1e-12 * std::abs(want));
  CHECK(r.terms > 0);

  CHECK_THROWS_AS((void)q_pochhammer_inf(lc_one(), base, -1.0), std::invalid_argument);
  CHECK_THROWS_AS((void)q_pochhammer_inf(lc_one(), QBase(0.5), 1e-10), std::invalid_argument);
}

TEST_CASE("pochhammer is nonincreasing in n for real a in (0,1)") {
  const QBase base(2.0);
  for (double a : {0.1, 0.5, 0.9}) {
    double prev = std::numeric_limits<double>::infinity();
    for (int n = 0; n <= 40; ++n) {
      const double v = std::exp(q_pochhammer(lc_from_real(a), base, n).log_mag);
      CHECK(v <= prev + 1e-15);
      prev = v;
    }
  }
}

TEST_CASE("q-factorial limit residuals") {
  const QBase base(2.0);
  CHECK(q_factorial_limit_residual(60, base) < 1e-12);

  // n = 1: ratio = [1]_2! (2-1) / 2^1 = 1/2; |1/2 - (1/2;1/2)_inf| ~ 0.211
  const double inf_prod = pochhammer_oracle_real(0.5, 2.0, 10000);
  CHECK(q_factorial_limit_residual(1, base) ==
        doctest::Approx(std::abs(0.5 - inf_prod)).epsilon(1e-12));

  double prev = std::numeric_limits<double>::infinity();
  for (int n = 1; n <= 60; ++n) {
    const double r = q_factorial_limit_residual(n, base);
    CHECK(r < prev);
    prev = r;
  }
}

}  // TEST_SUITE
