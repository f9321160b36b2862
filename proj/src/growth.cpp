#include "qgevrey/growth.hpp"

#include <Eigen/Dense>

#include <algorithm>
#include <cmath>
#include <vector>

namespace qgevrey {

namespace {

double model_value(double p, double lnq, const GrowthFit& f) {
  return f.logA + p * f.logB + f.alpha * std::lgamma(p + 1.0) +
         f.s * lnq * (p * (p - 1.0) / 2.0);
}

}  // namespace

GrowthFit fit_growth(std::span<const double> log_values, const QBase& base, FitOptions opts) {
  const int P = static_cast<int>(log_values.size()) - 1;
  if (P + 1 < 20) throw std::invalid_argument("fit_growth: need at least 20 terms");
  if (P < 10) throw std::invalid_argument("fit_growth: range must reach p >= 10");
  const double lnq = base.log_q();

  std::vector<int> rows;
  for (int p = opts.window_lo; p <= P; ++p)
    if (std::isfinite(log_values[p])) rows.push_back(p);

  // Free columns: intercept, p, log p!, and the quadratic term unless fixed.
  std::vector<int> cols;  // 0: logA, 1: logB, 2: alpha, 3: s
  cols.push_back(0);
  cols.push_back(1);
  if (!opts.fix_alpha) cols.push_back(2);
  if (!opts.fix_s) cols.push_back(3);
  const int n_cols = static_cast<int>(cols.size());
  if (static_cast<int>(rows.size()) < n_cols)
    throw std::invalid_argument("fit_growth: under-determined fit window");

  Eigen::MatrixXd A(rows.size(), n_cols);
  Eigen::VectorXd b(rows.size());
  for (std::size_t i = 0; i < rows.size(); ++i) {
    const double p = rows[i];
    const double basis[4] = {1.0, p, std::lgamma(p + 1.0), lnq * p * (p - 1.0) / 2.0};
    double rhs = log_values[rows[i]];
    if (opts.fix_alpha) rhs -= *opts.fix_alpha * basis[2];
    if (opts.fix_s) rhs -= *opts.fix_s * basis[3];
    for (int j = 0; j < n_cols; ++j) A(i, j) = basis[cols[j]];
    b(i) = rhs;
  }

  Eigen::ColPivHouseholderQR<Eigen::MatrixXd> qr(A);
  if (qr.rank() < n_cols) throw std::invalid_argument("fit_growth: degenerate fit window");
  const Eigen::VectorXd x = qr.solve(b);

  GrowthFit fit;
  fit.alpha = opts.fix_alpha.value_or(0.0);
  fit.s = opts.fix_s.value_or(0.0);
  for (int j = 0; j < n_cols; ++j) {
    switch (cols[j]) {
      case 0: fit.logA = x(j); break;
      case 1: fit.logB = x(j); break;
      case 2: fit.alpha = x(j); break;
      case 3: fit.s = x(j); break;
    }
  }
  fit.window_lo = opts.window_lo;
  fit.window_hi = P;

  std::vector<double> abs_res;
  abs_res.reserve(P + 1);
  for (int p = 0; p <= P; ++p) {
    if (!std::isfinite(log_values[p])) continue;  // zero coefficients satisfy any bound
    const double r = std::abs(log_values[p] - model_value(p, lnq, fit));
    abs_res.push_back(r);
    if (p >= opts.window_lo) fit.window_residual = std::max(fit.window_residual, r);
  }
  std::sort(abs_res.begin(), abs_res.end());
  if (!abs_res.empty()) {
    fit.max_residual = abs_res.back();
    fit.residual_quantiles = {abs_res[abs_res.size() / 2],
                              abs_res[(abs_res.size() * 9) / 10],
                              abs_res.back()};
  }
  return fit;
}

MembershipVerdict membership(const FormalSeries& u, const QBase& base, double s1,
                             std::optional<double> s2, double residual_cap) {
  if (u.order() < 20) throw std::invalid_argument("membership: need at least 20 coefficients");
  std::vector<double> logs(u.order());
  for (int p = 0; p < u.order(); ++p) logs[p] = u.coeff_norm_log(p);
  FitOptions opts;
  opts.fix_s = s1;
  opts.fix_alpha = s2;
  GrowthFit fit = fit_growth(logs, base, opts);
  return MembershipVerdict{fit.window_residual <= residual_cap, fit};
}

double q_gevrey_order(const PositiveSequence& seq, const QBase& base) {
  return fit_growth(seq.log_values(), base, {}).s;
}

bool preserves_q_gevrey_order(const PositiveSequence& seq, const QBase& base,
                              double tol_s, double residual_cap) {
  const double s = q_gevrey_order(seq, base);
  if (std::abs(s) > tol_s) return false;
  FitOptions opts;
  opts.fix_s = 0.0;
  return fit_growth(seq.log_values(), base, opts).window_residual <= residual_cap;
}

bool preserves_q_and_gevrey_orders(const PositiveSequence& seq, double residual_cap) {
  // With s fixed to 0 the quadratic column drops out, so the base is inert.
  FitOptions opts;
  opts.fix_s = 0.0;
  opts.fix_alpha = 0.0;
  return fit_growth(seq.log_values(), QBase(2.0), opts).window_residual <= residual_cap;
}

bool is_mg(const PositiveSequence& seq, double A, int prefix) {
  if (prefix > seq.size()) throw std::invalid_argument("is_mg: prefix exceeds available length");
  const double logA = std::log(A);
  for (int n = 0; n < prefix; ++n)
    for (int m = 0; n + m < prefix; ++m)
      if (seq.log_at(n + m) > (n + m) * logA + seq.log_at(n) + seq.log_at(m) + 1e-9)
        return false;
  return true;
}

bool is_lc(const PositiveSequence& seq, int prefix) {
  if (prefix > seq.size()) throw std::invalid_argument("is_lc: prefix exceeds available length");
  for (int n = 1; n + 1 < prefix; ++n)
    if (2.0 * seq.log_at(n) > seq.log_at(n - 1) + seq.log_at(n + 1) + 1e-9) return false;
  return true;
}

}  // namespace qgevrey
