#include "qgevrey/theta.hpp"

#include <algorithm>
#include <cmath>
#include <vector>

namespace qgevrey {

namespace {

// Fold terms largest-first so every lc_add sees a partial sum at least as
// large as the increment.
LogComplex sum_descending(std::vector<LogComplex>& terms) {
  std::sort(terms.begin(), terms.end(),
            [](const LogComplex& a, const LogComplex& b) { return a.log_mag > b.log_mag; });
  LogComplex acc = lc_zero();
  for (const LogComplex& t : terms) acc = lc_add(acc, t);
  return acc;
}

ThetaValue theta_series(const LogComplex& z, const ThetaParams& params) {
  const double lqs = params.log_qs();
  const double L = z.log_mag;
  // Term p has log magnitude -lqs p(p-1)/2 + pL: a downward parabola peaking
  // at p* = L/lqs + 1/2. Terms a Gaussian half-width past the peak are below
  // tol relative to the peak.
  const double p_star = L / lqs + 0.5;
  const double half_width = std::sqrt(2.0 * (std::log(1.0 / params.tol) + 8.0) / lqs) + 2.0;
  const int p_lo = static_cast<int>(std::floor(p_star - half_width));
  const int p_hi = static_cast<int>(std::ceil(p_star + half_width));

  std::vector<LogComplex> terms;
  terms.reserve(p_hi - p_lo + 1);
  double peak = -std::numeric_limits<double>::infinity();
  for (int p = p_lo; p <= p_hi; ++p) {
    const double lm = -lqs * (static_cast<double>(p) * (p - 1.0) / 2.0) + p * L;
    peak = std::max(peak, lm);
    terms.push_back(lc_make(lm, p * z.phase));
  }
  const int used = static_cast<int>(terms.size());
  LogComplex acc = sum_descending(terms);

  ThetaValue out;
  out.terms = used;
  out.peak_log = peak;
  if (lc_is_zero(acc) || acc.log_mag < peak + std::log(params.tol)) {
    out.value = lc_zero();
    out.flagged_zero = true;
  } else {
    out.value = acc;
  }
  return out;
}

ThetaValue theta_product(const LogComplex& z, const ThetaParams& params) {
  const double lqs = params.log_qs();
  const double L = z.log_mag;
  // Factors (1 - q^{-s(p+1)}), (1 + z q^{-ps}), (1 + q^{-s(p+1)}/z) are all
  // within tol of 1 once p > (|L| + log(1/tol) + margin) / lqs.
  const int P = static_cast<int>(std::ceil((std::abs(L) + std::log(1.0 / params.tol) + 8.0) / lqs)) + 2;

  LogComplex acc = lc_one();
  bool hit_zero = false;
  double peak = 0.0;
  for (int p = 0; p < P; ++p) {
    const LogComplex f1 = lc_from_real(1.0 - std::exp(-lqs * (p + 1.0)));
    const LogComplex f2 = lc_add(lc_one(), lc_scale_log(z, -lqs * p));
    const LogComplex f3 = lc_add(lc_one(), lc_scale_log(lc_inv(z), -lqs * (p + 1.0)));
    if (lc_is_zero(f2) || lc_is_zero(f3)) {
      hit_zero = true;
      break;
    }
    acc = lc_mul(acc, lc_mul(f1, lc_mul(f2, f3)));
  }

  ThetaValue out;
  out.terms = P;
  // Series scale for the zero flag: the peak term of the bilateral series.
  const double p_star = L / lqs + 0.5;
  out.peak_log = -lqs * (p_star * (p_star - 1.0) / 2.0) + p_star * L;
  if (hit_zero || lc_is_zero(acc) || acc.log_mag < out.peak_log + std::log(params.tol)) {
    out.value = lc_zero();
    out.flagged_zero = true;
  } else {
    out.value = acc;
  }
  return out;
}

}  // namespace

ThetaValue theta_eval(const LogComplex& z, const ThetaParams& params, ThetaMethod method) {
  if (lc_is_zero(z)) throw std::domain_error("theta_eval: z must be non-zero");
  return method == ThetaMethod::kSeries ? theta_series(z, params) : theta_product(z, params);
}

double spiral_clearance(const LogComplex& z, const ThetaParams& params) {
  if (lc_is_zero(z)) throw std::domain_error("spiral_clearance: z must be non-zero");
  const double lqs = params.log_qs();
  const double L = z.log_mag;
  // Outside |k lqs - L| <= 2 lqs + 2 the factor is within a factor-of-a-few
  // of 1 (k large positive) or of |z| q^{-ks} >> 1 (k negative), so the
  // infimum is attained inside the window or at the k -> +inf limit 1.
  const double window = 2.0 * lqs + 2.0;
  const int k_lo = static_cast<int>(std::floor((L - window) / lqs)) - 2;
  const int k_hi = static_cast<int>(std::ceil((L + window) / lqs)) + 2;
  double best = 1.0;
  for (int k = k_lo; k <= k_hi; ++k) {
    const double lm = L - k * lqs;
    if (lm > 690.0) continue;  // factor magnitude ~ |z| q^{-ks}, enormous
    const std::complex<double> w = std::polar(std::exp(lm), z.phase);
    best = std::min(best, std::abs(1.0 + w));
  }
  return best;
}

double theta_lower_bound_log(const LogComplex& z, const ThetaParams& params, double delta, double C) {
  if (!(delta > 0.0) || !(C > 0.0)) throw std::invalid_argument("theta_lower_bound_log: delta and C must be positive");
  const double L = z.log_mag;
  return std::log(C * delta) + L * L / (2.0 * params.log_qs()) + 0.5 * L;
}

}  // namespace qgevrey
