#pragma once

#include <cmath>
#include <complex>
#include <limits>
#include <numbers>
#include <stdexcept>

namespace qgevrey {

// Complex scalar stored as (log of magnitude, phase in radians).
//
// Coefficients scaled by q^{s p(p-1)/2} overflow any fixed-width float near
// p ~ 50; keeping the magnitude in log form makes the whole coefficient range
// of the formal operators representable. Zero has the canonical form
// (-inf, 0); the phase of a non-zero value is kept normalized to (-pi, pi].
struct LogComplex {
  double log_mag = -std::numeric_limits<double>::infinity();
  double phase = 0.0;
};

// Additions whose result loses all 13 leading digits of the larger operand
// collapse to canonical zero instead of returning rounding noise.
inline constexpr double kCancelRelTol = 1e-13;

inline constexpr double kLogRangeLimit = 700.0;  // lc_to_complex validity range

inline double normalize_phase(double phi) {
  double r = std::remainder(phi, 2.0 * std::numbers::pi);
  if (r <= -std::numbers::pi) r += 2.0 * std::numbers::pi;
  return r;
}

inline LogComplex lc_zero() { return LogComplex{}; }

inline LogComplex lc_one() { return LogComplex{0.0, 0.0}; }

inline bool lc_is_zero(const LogComplex& a) { return std::isinf(a.log_mag) && a.log_mag < 0.0; }

inline LogComplex lc_make(double log_mag, double phase) {
  if (std::isinf(log_mag) && log_mag < 0.0) return lc_zero();
  return LogComplex{log_mag, normalize_phase(phase)};
}

inline LogComplex lc_from_real(double x) {
  if (x == 0.0) return lc_zero();
  return LogComplex{std::log(std::abs(x)), x > 0.0 ? 0.0 : std::numbers::pi};
}

inline LogComplex lc_from_complex(const std::complex<double>& z) {
  if (z == std::complex<double>(0.0, 0.0)) return lc_zero();
  return LogComplex{std::log(std::abs(z)), std::arg(z)};
}

inline std::complex<double> lc_to_complex(const LogComplex& a) {
  if (lc_is_zero(a)) return {0.0, 0.0};
  if (a.log_mag >= kLogRangeLimit) throw std::overflow_error("lc_to_complex: log magnitude above representable range");
  if (a.log_mag <= -kLogRangeLimit) throw std::underflow_error("lc_to_complex: log magnitude below representable range");
  const double m = std::exp(a.log_mag);
  return {m * std::cos(a.phase), m * std::sin(a.phase)};
}

inline LogComplex lc_mul(const LogComplex& a, const LogComplex& b) {
  if (lc_is_zero(a) || lc_is_zero(b)) return lc_zero();
  return lc_make(a.log_mag + b.log_mag, a.phase + b.phase);
}

inline LogComplex lc_scale_log(const LogComplex& a, double log_factor) {
  if (lc_is_zero(a)) return lc_zero();
  return LogComplex{a.log_mag + log_factor, a.phase};
}

inline LogComplex lc_neg(const LogComplex& a) {
  if (lc_is_zero(a)) return lc_zero();
  return lc_make(a.log_mag, a.phase + std::numbers::pi);
}

inline LogComplex lc_inv(const LogComplex& a) {
  if (lc_is_zero(a)) throw std::domain_error("lc_inv: division by zero");
  return lc_make(-a.log_mag, -a.phase);
}

inline LogComplex lc_div(const LogComplex& a, const LogComplex& b) { return lc_mul(a, lc_inv(b)); }

// Sum computed by factoring out the larger magnitude: with r = |b|/|a| <= 1
// and d = phase(b) - phase(a), the result is |a| * (1 + r e^{i d}).
inline LogComplex lc_add(const LogComplex& a, const LogComplex& b) {
  if (lc_is_zero(a)) return b;
  if (lc_is_zero(b)) return a;
  const LogComplex& big = (a.log_mag >= b.log_mag) ? a : b;
  const LogComplex& small = (a.log_mag >= b.log_mag) ? b : a;
  const double r = std::exp(small.log_mag - big.log_mag);
  const double d = small.phase - big.phase;
  const double re = r * std::cos(d);
  const double t = 2.0 * re + r * r;  // |1 + r e^{id}|^2 - 1
  const double mag2 = 1.0 + t;
  if (mag2 <= kCancelRelTol * kCancelRelTol) return lc_zero();
  return lc_make(big.log_mag + 0.5 * std::log1p(t),
                 big.phase + std::atan2(r * std::sin(d), 1.0 + re));
}

inline LogComplex lc_sub(const LogComplex& a, const LogComplex& b) { return lc_add(a, lc_neg(b)); }

inline LogComplex lc_pow_int(const LogComplex& a, int n) {
  if (lc_is_zero(a)) {
    if (n == 0) return lc_one();
    if (n < 0) throw std::domain_error("lc_pow_int: zero to a negative power");
    return lc_zero();
  }
  return lc_make(a.log_mag * n, a.phase * n);
}

}  // namespace qgevrey
