#pragma once

#include <array>
#include <optional>
#include <span>

#include "qgevrey/formal_series.hpp"
#include "qgevrey/qcore.hpp"
#include "qgevrey/sequence.hpp"

namespace qgevrey {

// Fitted parameters of the growth model
//   log m_p = logA + p logB + alpha log p! + s log(q) p(p-1)/2.
struct GrowthFit {
  double logA = 0.0;
  double logB = 0.0;
  double alpha = 0.0;
  double s = 0.0;
  double max_residual = 0.0;     // sup |log m_p - model(p)| over the full range
  double window_residual = 0.0;  // the same sup restricted to the fit window
  int window_lo = 0;
  int window_hi = 0;
  // Residual magnitude quantiles {50%, 90%, 100%} over the full range; an
  // (alpha, beta) envelope can be read off these when the two-sided
  // definition needs different exponents per side.
  std::array<double, 3> residual_quantiles{0.0, 0.0, 0.0};
};

struct FitOptions {
  std::optional<double> fix_s;
  std::optional<double> fix_alpha;
  int window_lo = 5;  // small-p transients are excluded from the fit
};

// Least-squares fit of the growth model over [window_lo, P]. Entries that are
// -inf (zero coefficients) are skipped. Needs >= 20 terms reaching p >= 10.
GrowthFit fit_growth(std::span<const double> log_values, const QBase& base, FitOptions opts = {});

struct MembershipVerdict {
  bool member = false;
  GrowthFit fit;
};

// Desk-scale membership of a series in E[[t]]^{s2}_{q,s1}: the fit with s
// (and alpha, when s2 is given) held fixed must stay within residual_cap on
// the fit window. The cap applies to the windowed residual: the model's A, B
// absorb any finite small-p transient, which the full-range residual (still
// reported) does not.
MembershipVerdict membership(const FormalSeries& u, const QBase& base, double s1,
                             std::optional<double> s2, double residual_cap);

// Fitted q-Gevrey order of a positive sequence (the coefficient of the
// quadratic term pins s regardless of the Gevrey suborder).
double q_gevrey_order(const PositiveSequence& seq, const QBase& base);

// m preserves q-Gevrey order iff it is of q-Gevrey order 0: the free fit
// yields |s| <= tol_s and the s = 0 constrained fit stays within the cap.
bool preserves_q_gevrey_order(const PositiveSequence& seq, const QBase& base,
                              double tol_s = 1e-3, double residual_cap = 0.5);

// m preserves q-Gevrey and Gevrey orders iff it has null Gevrey order:
// a^p <= m_p <= A^p, i.e. the s = 0, alpha = 0 fit stays within the cap.
bool preserves_q_and_gevrey_orders(const PositiveSequence& seq, double residual_cap = 0.5);

// Moderate growth: M_{n+m} <= A^{n+m} M_n M_m for all pairs in the prefix.
bool is_mg(const PositiveSequence& seq, double A, int prefix);

// Logarithmic convexity: M_n^2 <= M_{n-1} M_{n+1} within the prefix.
bool is_lc(const PositiveSequence& seq, int prefix);

}  // namespace qgevrey
