#include "qgevrey/verify.hpp"

#include <algorithm>
#include <cstdio>
#include <cmath>
#include <numbers>
#include <random>

#include "qgevrey/continuation.hpp"
#include "qgevrey/parallel.hpp"
#include "qgevrey/qcore.hpp"
#include "qgevrey/qlaplace.hpp"
#include "qgevrey/theta.hpp"

namespace qgevrey {

namespace {

SuiteReport suite_qcore() {
  SuiteReport report{"qcore", {}};

  // [p]_q! = [p]_{1/q}! q^{p(p-1)/2} in log domain, p <= 60, q in {1.5, 2, 3}.
  double worst = 0.0;
  for (double q : {1.5, 2.0, 3.0}) {
    const QBase base(q), inv(1.0 / q);
    for (int p = 0; p <= 60; ++p) {
      const double lhs = q_factorial_log(p, base);
      const double rhs = q_factorial_log(p, inv) + (static_cast<double>(p) * (p - 1.0) / 2.0) * base.log_q();
      worst = std::max(worst, std::abs(lhs - rhs));
    }
  }
  report.checks.push_back({"q_factorial_inversion_identity", worst, 1e-11, worst <= 1e-11});

  // Limit (e91) residual at n = 60, q = 2 with the infinite product at 1e-14.
  const double residual = q_factorial_limit_residual(60, QBase(2.0));
  report.checks.push_back({"q_factorial_limit_n60", residual, 1e-12, residual < 1e-12});

  // 1 <= [p]_{1/q}! <= (q/(q-1))^p for p <= 200.
  double bound_slack = 0.0;
  for (double q : {1.5, 2.0, 3.0}) {
    const QBase inv(1.0 / q);
    const double cap = std::log(q / (q - 1.0));
    for (int p = 0; p <= 200; ++p) {
      const double lm = q_factorial_log(p, inv);
      bound_slack = std::max(bound_slack, std::max(-lm, lm - p * cap));
    }
  }
  report.checks.push_back({"q_factorial_inv_envelope", bound_slack, 1e-10, bound_slack <= 1e-10});
  return report;
}

SuiteReport suite_theta(bool parallel) {
  SuiteReport report{"theta", {}};
  const ThetaParams params(2.0, 1.0, 1e-12);

  // 200 clearance-respecting random points, 0.1 <= |z| <= 10.
  std::mt19937_64 rng(20240917);
  std::uniform_real_distribution<double> rad(std::log(0.1), std::log(10.0));
  std::uniform_real_distribution<double> ang(-std::numbers::pi, std::numbers::pi);
  std::vector<LogComplex> pts;
  while (pts.size() < 200) {
    const LogComplex z = lc_make(rad(rng), ang(rng));
    if (spiral_clearance(z, params) > 0.05) pts.push_back(z);
  }

  std::vector<double> method_err(pts.size()), funceq_err(pts.size());
  par::for_each_index(pts.size(), parallel, [&](std::size_t i) {
    const LogComplex z = pts[i];
    const LogComplex a = theta_eval(z, params, ThetaMethod::kSeries).value;
    const LogComplex b = theta_eval(z, params, ThetaMethod::kProduct).value;
    method_err[i] = std::exp(lc_sub(a, b).log_mag - a.log_mag);

    const LogComplex zq = lc_scale_log(z, params.log_qs());
    const LogComplex lhs = theta_eval(zq, params, ThetaMethod::kSeries).value;
    const LogComplex rhs = lc_mul(zq, a);
    funceq_err[i] = std::exp(lc_sub(lhs, rhs).log_mag - lhs.log_mag);
  });
  const double worst_method = *std::max_element(method_err.begin(), method_err.end());
  const double worst_funceq = *std::max_element(funceq_err.begin(), funceq_err.end());
  report.checks.push_back({"series_vs_product", worst_method, 1e-10, worst_method <= 1e-10});
  report.checks.push_back({"functional_equation", worst_funceq, 1e-10, worst_funceq <= 1e-10});

  // Zeros at -q^{ks} confined to radius 1e-9 (relative off-zero probe).
  double worst_zero = 0.0;
  for (int k = -10; k <= 10; ++k) {
    const double lr = k * params.log_qs();
    const ThetaValue at_zero = theta_eval(lc_make(lr, std::numbers::pi), params);
    if (!at_zero.flagged_zero) worst_zero = std::max(worst_zero, 1.0);
    // a relative 1e-9 step off the zero must no longer be flagged
    const ThetaValue off = theta_eval(lc_make(lr + 1e-9, std::numbers::pi), params);
    if (off.flagged_zero) worst_zero = std::max(worst_zero, 1.0);
  }
  report.checks.push_back({"zero_confinement", worst_zero, 0.5, worst_zero <= 0.5});

  // Lower-bound constants on 500 sampled points with clearance > 0.1 per
  // order. The criterion asks one shared C >= 1e-3 across s in {0.5, 1, 2};
  // the true constant at s = 0.5 sits near 4e-5 (the series almost cancels at
  // the zero -1 when q^s = sqrt 2), so the shared check reports what it
  // measures and the per-order checks carry the calibrated floors.
  double min_shared = std::numeric_limits<double>::infinity();
  const std::pair<double, double> order_and_floor[] = {{0.5, 1e-5}, {1.0, 1e-3}, {2.0, 1e-3}};
  for (const auto& [s, floor] : order_and_floor) {
    const ThetaParams ps(2.0, s, 1e-12);
    std::vector<LogComplex> sample;
    while (sample.size() < 500) {
      const LogComplex z = lc_make(rad(rng), ang(rng));
      if (spiral_clearance(z, ps) > 0.1) sample.push_back(z);
    }
    std::vector<double> ratio(sample.size());
    par::for_each_index(sample.size(), parallel, [&](std::size_t i) {
      const LogComplex v = theta_eval(sample[i], ps).value;
      const double bound_no_c = theta_lower_bound_log(sample[i], ps, 0.1, 1.0);
      ratio[i] = std::exp(v.log_mag - bound_no_c);  // admissible C at this point
    });
    const double min_ratio = *std::min_element(ratio.begin(), ratio.end());
    min_shared = std::min(min_shared, min_ratio);
    char name[64];
    std::snprintf(name, sizeof(name), "lower_bound_constant_s%g", s);
    report.checks.push_back({name, min_ratio, floor, min_ratio >= floor});
  }
  report.checks.push_back({"lower_bound_constant", min_shared, 1e-3, min_shared >= 1e-3});
  return report;
}

SuiteReport suite_laplace(bool parallel) {
  SuiteReport report{"laplace", {}};
  struct Case {
    double q, s;
    int p;
    double r;
  };
  std::vector<Case> cases;
  const double radii[5] = {0.05, 0.08, 0.12, 0.18, 0.25};
  for (double q : {2.0, 3.0})
    for (double s : {0.5, 1.0})
      for (int p = 0; p <= 10; ++p)
        for (double r : radii) cases.push_back({q, s, p, r});

  std::vector<double> rel(cases.size());
  par::for_each_index(cases.size(), parallel, [&](std::size_t i) {
    const Case& c = cases[i];
    const QBase base(c.q);
    const RayDomain dom(std::numbers::pi, 0.05, c.q, c.s);
    const SurfacePoint z{std::log(c.r), std::numbers::pi};
    const LaplaceResult got = q_laplace(monomial(c.p), dom, z, 1e-8);
    const LogComplex want = lc_make(
        c.p * z.log_mag + c.s * base.log_q() * (static_cast<double>(c.p) * (c.p - 1.0) / 2.0),
        c.p * z.arg);
    rel[i] = std::exp(lc_sub(got.value, want).log_mag - want.log_mag);
  });
  const double worst = *std::max_element(rel.begin(), rel.end());
  report.checks.push_back({"moment_identity_grid", worst, 1e-6, worst <= 1e-6});
  return report;
}

}  // namespace

std::vector<std::string> verify_suite_names() { return {"qcore", "theta", "laplace"}; }

SuiteReport verify_suite(const std::string& name, bool parallel) {
  if (name == "qcore") return suite_qcore();
  if (name == "theta") return suite_theta(parallel);
  if (name == "laplace") return suite_laplace(parallel);
  throw std::invalid_argument("verify: unknown suite '" + name + "'");
}

}  // namespace qgevrey
