// Acceptance suite: one pass/fail line per criterion, non-zero exit on any
// failure. Identity-based and property-based checks at desk scale; the grids
// and tolerances are pinned in code.

#include <chrono>
#include <cmath>
#include <complex>
#include <cstdio>
#include <functional>
#include <numbers>
#include <string>
#include <vector>

#include "qgevrey/classify.hpp"
#include "qgevrey/continuation.hpp"
#include "qgevrey/growth.hpp"
#include "qgevrey/qlaplace.hpp"
#include "qgevrey/verify.hpp"

using namespace qgevrey;

namespace {

constexpr double kPi = std::numbers::pi;

int g_failures = 0;

void report(int index, const std::string& name, bool pass, const std::string& detail,
            double seconds) {
  std::printf("[%s] %2d %-34s %s (%.2f s)\n", pass ? "PASS" : "FAIL", index, name.c_str(),
              detail.c_str(), seconds);
  if (!pass) ++g_failures;
}

void run(int index, const std::string& name,
         const std::function<std::pair<bool, std::string>()>& fn) {
  const auto t0 = std::chrono::steady_clock::now();
  bool pass = false;
  std::string detail;
  try {
    std::tie(pass, detail) = fn();
  } catch (const std::exception& e) {
    pass = false;
    detail = std::string("exception: ") + e.what();
  }
  const double dt = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
  report(index, name, pass, detail, dt);
}

double rel_between(const LogComplex& a, const LogComplex& b) {
  const LogComplex d = lc_sub(a, b);
  if (lc_is_zero(d)) return 0.0;
  return std::exp(d.log_mag - std::max(a.log_mag, b.log_mag));
}

std::string fmt(const char* spec, double v) {
  char buf[128];
  std::snprintf(buf, sizeof(buf), spec, v);
  return buf;
}

const CheckResult& find_check(const SuiteReport& report, const std::string& name) {
  for (const CheckResult& c : report.checks)
    if (c.name == name) return c;
  throw std::logic_error("missing check " + name);
}

FormalSeries q_gevrey_geometric(const QBase& base, double s, int order) {
  FormalSeries u(order, 1);
  for (int p = 0; p < order; ++p)
    u.set(p, lc_make(s * base.log_q() * (static_cast<double>(p) * (p - 1.0) / 2.0), 0.0));
  return u;
}

}  // namespace

int main() {
  const SuiteReport qcore_suite = verify_suite("qcore");

  run(1, "q-factorial inversion identity", [&] {
    const CheckResult& c = find_check(qcore_suite, "q_factorial_inversion_identity");
    return std::pair{c.pass, fmt("max log residual %.2e (cap 1e-11)", c.error)};
  });

  run(2, "q-factorial limit (n = 60)", [&] {
    const CheckResult& c = find_check(qcore_suite, "q_factorial_limit_n60");
    return std::pair{c.pass, fmt("residual %.2e (cap 1e-12)", c.error)};
  });

  const SuiteReport theta_suite = verify_suite("theta");

  run(3, "theta consistency", [&] {
    const CheckResult& m = find_check(theta_suite, "series_vs_product");
    const CheckResult& f = find_check(theta_suite, "functional_equation");
    const CheckResult& z = find_check(theta_suite, "zero_confinement");
    const bool pass = m.pass && f.pass && z.pass;
    return std::pair{pass, fmt("methods %.2e", m.error) + fmt(", funceq %.2e (caps 1e-10)", f.error)};
  });

  run(4, "theta lower bound constant", [&] {
    const CheckResult& c = find_check(theta_suite, "lower_bound_constant");
    return std::pair{c.pass, fmt("admissible C %.2e (needs >= 1e-3)", c.error)};
  });

  run(5, "q-Laplace moment identity grid", [] {
    const SuiteReport laplace_suite = verify_suite("laplace");
    const CheckResult& c = find_check(laplace_suite, "moment_identity_grid");
    return std::pair{c.pass, fmt("max rel error %.2e (cap 1e-6)", c.error)};
  });

  run(6, "q-sum pipeline + asymptotic check", [] {
    const QBase base(2.0);
    const FormalSeries u = q_gevrey_geometric(base, 1.0, 14);
    SectorGrid grid;
    grid.r_min = 2e-3;
    grid.r_max = 0.1;
    grid.n_r = 6;
    grid.half_opening = 1.0;
    grid.n_arg = 7;
    const SectorialFunction f = q_sum(u, base, 1.0, kPi, geometric(), grid, 1e-9);
    const AsymptoticVerdict v = asymptotic_check(f.samples, u, base, 1.0, 12, 5.0);
    const bool pass = v.pass && std::isfinite(v.logA);
    return std::pair{pass, fmt("logA %.3f", v.logA) + fmt(", logC %.3f", v.logC) +
                               fmt(" on %.0f samples", static_cast<double>(f.samples.size()))};
  });

  run(7, "residue-series continuation", [] {
    const QBase base(2.0);
    const ContinuableFunction qf = q_factorial_series(base, 90);

    const PositiveSequence m = make_q_factorial_inv(base, 90);
    FormalSeries geo(90, 1);
    for (int p = 0; p < 90; ++p) geo.set(p, lc_one());
    const FormalSeries prefix = mborel(geo, m.reciprocal());
    for (int p = 0; p < 90; ++p)
      if (prefix.at(p).log_mag != qf.series_at_0().at(p).log_mag ||
          prefix.at(p).phase != qf.series_at_0().at(p).phase)
        return std::pair{false, std::string("coefficient mismatch at p = ") + std::to_string(p)};

    double worst = 0.0;
    for (double r : {0.02, 0.08, 0.15, 0.25}) {
      for (double a : {0.3, 1.2, kPi / 2.0, kPi, 4.4, 5.9}) {
        const SurfacePoint z{std::log(r), a};
        const LogComplex series = eval_partial_scalar(qf.series_at_0(), z.project(), 80);
        worst = std::max(worst, rel_between(qf.eval(z), series));
      }
    }
    return std::pair{worst <= 1e-8, fmt("coefficients exact, max rel %.2e (cap 1e-8)", worst)};
  });

  run(8, "q-exponential product form", [] {
    const QBase base(2.0);
    const ContinuableFunction qe = q_exponential(base, 70);
    double worst = 0.0;
    for (double r : {0.1, 0.4, 0.7, 1.0}) {
      for (double a : {0.0, 0.9, kPi / 2.0, kPi, 4.6}) {
        const SurfacePoint z{std::log(r), a};
        const LogComplex series = eval_partial_scalar(qe.series_at_0(), z.project(), 69);
        worst = std::max(worst, rel_between(qe.eval(z), series));
      }
    }
    double sup_log = -std::numeric_limits<double>::infinity();
    for (double lr = std::log(1.0); lr <= std::log(1e4); lr += 0.25)
      sup_log = std::max(sup_log, qe.eval(SurfacePoint{lr, kPi}).log_mag);
    const bool pass = worst <= 1e-10 && sup_log <= 0.0;
    return std::pair{pass, fmt("max rel %.2e (cap 1e-10)", worst) +
                               fmt(", ray sup log %.2f (bounded)", sup_log)};
  });

  run(9, "central binomial pair + Pade", [] {
    auto [first, second] = central_binomial_pair(70);
    double worst_series = 0.0;
    for (double r : {0.05, 0.12, 0.2}) {  // inside D_{1/4}
      for (double a : {0.7, kPi, 5.3}) {
        const SurfacePoint z{std::log(r), a};
        worst_series = std::max(
            worst_series, rel_between(first.eval(z), eval_partial_scalar(first.series_at_0(),
                                                                         z.project(), 69)));
      }
    }
    for (double r : {0.3, 1.0, 2.5}) {  // inside D_4
      for (double a : {0.7, kPi, 5.3}) {
        const SurfacePoint z{std::log(r), a};
        worst_series = std::max(
            worst_series, rel_between(second.eval(z), eval_partial_scalar(second.series_at_0(),
                                                                          z.project(), 69)));
      }
    }
    const ContinuableFunction pade = pade_continue(second.series_at_0(), 6, 6);
    double worst_pade = 0.0;
    for (double r : {0.3, 0.8, 1.4, 2.0}) {
      for (double a : {0.5, 1.4, kPi, 4.6, 5.8}) {
        const SurfacePoint z{std::log(r), a};
        worst_pade = std::max(worst_pade, rel_between(pade.eval(z), second.eval(z)));
      }
    }
    const bool pass = worst_series <= 1e-8 && worst_pade <= 1e-6;
    return std::pair{pass, fmt("series rel %.2e (cap 1e-8)", worst_series) +
                               fmt(", Pade rel %.2e (cap 1e-6)", worst_pade)};
  });

  run(10, "classifier fidelity", [] {
    const QBase base(2.0);
    ClassifyOptions opts;
    std::string detail;

    const ClassifyReport fact2 = classify(make_factorial_pow(2.0, 301), base, opts);
    bool pass = fact2.preserves_q_gevrey_order && !fact2.preserves_q_and_gevrey_orders &&
                !fact2.preserves_q_gevrey_asymptotics;
    detail += pass ? "p!^2 ok" : "p!^2 WRONG";

    std::vector<double> qf_sq(301);
    const PositiveSequence qf = make_q_factorial_inv(base, 301);
    for (int p = 0; p <= 300; ++p) qf_sq[p] = 2.0 * qf.log_at(p);
    const ClassifyReport powed = classify(PositiveSequence("qf_inv_sq", qf_sq), base, opts);
    const bool powed_ok = powed.preserves_q_gevrey_order && powed.preserves_q_and_gevrey_orders;
    pass = pass && powed_ok;
    detail += powed_ok ? ", [p]_{1/q}!^2 ok" : ", [p]_{1/q}!^2 WRONG";

    const ClassifyReport geom = classify(make_geometric(3.0, 301), base, opts);
    pass = pass && geom.preserves_q_gevrey_asymptotics;
    detail += geom.preserves_q_gevrey_asymptotics ? ", A^p ok" : ", A^p WRONG";

    const ClassifyReport qfrep = classify(qf, base, opts);
    const bool qf_ok = qfrep.preserves_q_gevrey_asymptotics &&
                       qfrep.asymptotics_mode == CertificateMode::kRigorous;
    pass = pass && qf_ok;
    detail += qf_ok ? ", [p]_{1/q}! rigorous" : ", [p]_{1/q}! WRONG";

    const ClassifyReport cb = classify(make_central_binomial(301), base, opts);
    const bool cb_ok = cb.preserves_q_gevrey_asymptotics &&
                       cb.asymptotics_mode == CertificateMode::kRigorous;
    pass = pass && cb_ok;
    detail += cb_ok ? ", (2p)!/p!^2 rigorous" : ", (2p)!/p!^2 WRONG";

    FormalSeries counter(301, 1);
    for (int p = 0; p <= 300; ++p) {
      const double l = std::log(p + 1.0);
      counter.set(p, lc_make(p * l * l + base.log_q() * (static_cast<double>(p) * (p - 1.0) / 2.0),
                             0.0));
    }
    const bool counter_ok = !membership(counter, base, 1.0, std::nullopt, 1.0).member;
    pass = pass && counter_ok;
    detail += counter_ok ? ", counterexample rejected" : ", counterexample WRONG";
    return std::pair{pass, detail};
  });

  run(11, "growth-fit recovery", [] {
    const QBase base(2.0);
    std::vector<double> logs(301);
    for (int p = 0; p <= 300; ++p)
      logs[p] = p * std::log(2.0) + 0.5 * std::lgamma(p + 1.0) +
                std::log(2.0) * (static_cast<double>(p) * (p - 1.0) / 2.0);
    const GrowthFit fit = fit_growth(logs, base, {});
    const bool pass = std::abs(fit.logA) <= 0.5 && std::abs(fit.logB - std::log(2.0)) <= 0.05 &&
                      std::abs(fit.alpha - 0.5) <= 0.1 && std::abs(fit.s - 1.0) <= 1e-3;
    return std::pair{pass, fmt("logA %.2e", fit.logA) + fmt(", logB err %.2e", fit.logB - std::log(2.0)) +
                               fmt(", alpha err %.2e", fit.alpha - 0.5) +
                               fmt(", s err %.2e", fit.s - 1.0)};
  });

  if (g_failures == 0) {
    std::printf("acceptance: all 11 criteria passed\n");
    return 0;
  }
  std::printf("acceptance: %d criterion(s) FAILED\n", g_failures);
  return 1;
}
