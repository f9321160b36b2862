#include "qgevrey/classify.hpp"

#include <algorithm>
#include <cmath>

namespace qgevrey {

namespace {

// Coefficients of sum m_p t^p as a formal series (log domain, all positive).
FormalSeries series_of(const PositiveSequence& seq, int order) {
  FormalSeries u(order, 1);
  for (int p = 0; p < order; ++p) u.set(p, lc_make(seq.log_at(p), 0.0));
  return u;
}

bool prefix_matches(const PositiveSequence& seq, const FormalSeries& candidate, int count) {
  const int n = std::min({seq.size(), candidate.order(), count});
  for (int p = 0; p < n; ++p) {
    const LogComplex a = lc_make(seq.log_at(p), 0.0);
    const LogComplex b = candidate.at(p);
    const LogComplex diff = lc_sub(a, b);
    if (lc_is_zero(diff)) continue;
    if (diff.log_mag - std::max(a.log_mag, b.log_mag) > std::log(1e-8)) return false;
  }
  return true;
}

BranchVerdict analyze_branch(const PositiveSequence& seq, const QBase& base,
                             const ClassifyOptions& opts) {
  BranchVerdict out;
  out.convergent = has_positive_radius(seq);
  if (!out.convergent) return out;

  std::optional<ContinuableFunction> f = match_closed_form(seq, base);
  if (f) {
    out.continuation = f->name();
    out.mode = CertificateMode::kRigorous;
  } else {
    const int need = opts.pade_num + opts.pade_den + 1;
    try {
      f = pade_continue(series_of(seq, std::min(seq.size(), std::max(need, 2 * need))),
                        opts.pade_num, opts.pade_den);
      out.continuation = "pade";
      out.mode = CertificateMode::kHeuristic;
    } catch (const std::exception&) {
      return out;  // no usable continuation: growth_ok stays false
    }
  }

  out.growth_ok = true;
  for (double s : opts.probe_s) {
    SampleSpec spec;
    spec.r_min = 0.2;
    spec.r_max = 2000.0;
    spec.n_r = 16;
    spec.n_arg = 9;
    const CertificateCheck chk = growth_certificate_check(*f, base, s, spec, opts.alpha_cap);
    out.probed_s.push_back(s);
    out.fitted_alpha.push_back(chk.alpha);
    if (!chk.ok) out.growth_ok = false;
  }
  return out;
}

}  // namespace

bool has_positive_radius(const PositiveSequence& seq) {
  const int P = seq.size() - 1;
  if (P < 16) throw std::invalid_argument("has_positive_radius: need at least 17 terms");
  // Incremental slope of log m_p over the two top quarters: a convergent
  // (geometric-boundable) sequence has a settling slope, a superexponential
  // one keeps drifting upward.
  const auto slope = [&](int lo, int hi) {
    return (seq.log_at(hi) - seq.log_at(lo)) / static_cast<double>(hi - lo);
  };
  const double s1 = slope(P / 2, (3 * P) / 4);
  const double s2 = slope((3 * P) / 4, P);
  return s2 - s1 <= 0.2;
}

std::optional<ContinuableFunction> match_closed_form(const PositiveSequence& seq, const QBase& base) {
  const int check = std::min(seq.size(), 24);
  if (check < 8) return std::nullopt;

  // Constant coefficient ratio: a scaled geometric series sum (ct)^p.
  {
    bool constant = true;
    const double log_c = seq.log_at(1) - seq.log_at(0);
    for (int p = 1; p + 1 < check; ++p)
      if (std::abs((seq.log_at(p + 1) - seq.log_at(p)) - log_c) > 1e-10) constant = false;
    if (constant) return scaled_geometric(lc_make(log_c, 0.0), 40);
  }

  const auto try_match = [&](ContinuableFunction f) -> std::optional<ContinuableFunction> {
    if (prefix_matches(seq, f.series_at_0(), check)) return f;
    return std::nullopt;
  };
  if (base.q > 1.0) {
    if (auto f = try_match(q_exponential(base))) return f;
    if (auto f = try_match(q_factorial_series(base))) return f;
  }
  auto pair = central_binomial_pair();
  if (auto f = try_match(std::move(pair.first))) return f;
  if (auto f = try_match(std::move(pair.second))) return f;
  return std::nullopt;
}

ClassifyReport classify(const PositiveSequence& seq, const QBase& base, ClassifyOptions opts) {
  if (base.q <= 1.0) throw std::invalid_argument("classify: requires q > 1");
  ClassifyReport report;
  report.sequence_name = seq.name();
  report.q = base.q;
  report.fit = fit_growth(seq.log_values(), base, {});
  report.q_gevrey_order_value = report.fit.s;
  report.preserves_q_gevrey_order =
      preserves_q_gevrey_order(seq, base, opts.tol_s, opts.residual_cap);
  report.preserves_q_and_gevrey_orders = preserves_q_and_gevrey_orders(seq, opts.residual_cap);

  report.direct = analyze_branch(seq.reciprocal(), base, opts);      // B_m scales by 1/m_p
  report.reciprocal = analyze_branch(seq, base, opts);               // B_{m^-1} scales by m_p

  const bool ok = report.direct.convergent && report.direct.growth_ok &&
                  report.reciprocal.convergent && report.reciprocal.growth_ok;
  report.preserves_q_gevrey_asymptotics = ok;
  report.asymptotics_mode = (report.direct.mode == CertificateMode::kRigorous &&
                             report.reciprocal.mode == CertificateMode::kRigorous)
                                ? CertificateMode::kRigorous
                                : CertificateMode::kHeuristic;
  if (ok) report.preserves_summability = true;
  return report;
}

}  // namespace qgevrey
