#include "qgevrey/continuation.hpp"

#include <Eigen/Dense>
#include <Eigen/Eigenvalues>

#include <algorithm>
#include <cmath>
#include <complex>
#include <numbers>

namespace qgevrey {

namespace {

constexpr double kPoleProximity = 1e-9;

double ray_distance_log(const SurfacePoint& z, const ExcludedRay& ray) {
  // distance from z (projected) to {r e^{i angle} : r >= r0}, relative to |z|
  const double phi = normalize_phase(z.arg - ray.angle);
  const double r0_over_z = std::exp(ray.log_start - z.log_mag);
  const std::complex<double> w = std::polar(1.0, phi);  // z / |z| rotated onto the ray frame
  if (w.real() >= r0_over_z) return std::abs(w.imag());
  return std::abs(w - std::complex<double>(r0_over_z, 0.0));
}

void check_pole_proximity(const SurfacePoint& z, const ExcludedRay& ray, const char* what) {
  const double phi = normalize_phase(z.arg - ray.angle);
  if (std::abs(phi) > 1e-7) return;
  for (double lp : ray.pole_logs) {
    // relative distance |z - pole| / pole
    const double rel = std::abs(std::polar(std::exp(z.log_mag - lp), phi) - std::complex<double>(1.0, 0.0));
    if (rel < kPoleProximity) throw pole_error(std::string(what) + ": evaluation at a pole");
  }
}

std::complex<double> project_to_complex(const SurfacePoint& z, const char* what) {
  if (std::abs(z.log_mag) > 600.0)
    throw std::overflow_error(std::string(what) + ": point magnitude outside double range");
  return std::polar(std::exp(z.log_mag), z.arg);
}

LogComplex sum_terms_descending(std::vector<LogComplex>& terms) {
  std::sort(terms.begin(), terms.end(),
            [](const LogComplex& a, const LogComplex& b) { return a.log_mag > b.log_mag; });
  LogComplex acc = lc_zero();
  for (const LogComplex& t : terms) acc = lc_add(acc, t);
  return acc;
}

// Shared constructor-time validation samples: moderate radii on the sector
// bisected by pi, where every registered excluded set has clearance.
const std::vector<SurfacePoint>& validation_points() {
  static const std::vector<SurfacePoint> pts = [] {
    std::vector<SurfacePoint> v;
    for (double r : {0.3, 1.0, 3.0, 20.0, 200.0})
      for (double a : {0.7, 2.2, std::numbers::pi, 4.1, 5.6})
        v.push_back(SurfacePoint{std::log(r), a});
    return v;
  }();
  return pts;
}

}  // namespace

ContinuableFunction::ContinuableFunction(ContinuationKind kind, std::string name,
                                         std::function<LogComplex(const SurfacePoint&)> evaluator,
                                         std::vector<ExcludedRay> excluded, FormalSeries series_at_0,
                                         GrowthCertificate certificate)
    : kind_(kind),
      name_(std::move(name)),
      evaluator_(std::move(evaluator)),
      excluded_(std::move(excluded)),
      series_at_0_(std::move(series_at_0)),
      certificate_(certificate) {
  // Invariant pair. (1) Taylor agreement near the origin: compare against
  // partial sums inside half the distance to the excluded set, at radii where
  // the series truncation itself is negligible.
  const int N = series_at_0_.order() - 1;
  if (N >= 1 && series_at_0_.dim() == 1) {
    double log_half_dist = std::log(0.05);
    for (const ExcludedRay& ray : excluded_) log_half_dist = std::min(log_half_dist, ray.log_start - std::numbers::ln2);
    // keep the prefix truncation below 1e-10 of the value: shrink the radius
    // against the coefficient growth rate.
    double rho_log = 0.0;
    for (int p = 1; p <= N; ++p) {
      const double lm = series_at_0_.coeff_norm_log(p);
      if (std::isfinite(lm)) rho_log = std::max(rho_log, lm / p);
    }
    log_half_dist = std::min(log_half_dist, -23.0 / (N + 1.0) - rho_log);
    for (double a : {0.9, std::numbers::pi, 5.1}) {
      const SurfacePoint z{log_half_dist, a};
      const LogComplex got = evaluator_(z);
      const LogComplex want = eval_partial_scalar(series_at_0_, z.project(), N);
      const LogComplex diff = lc_sub(got, want);
      if (!lc_is_zero(diff) && diff.log_mag - std::max(got.log_mag, want.log_mag) > std::log(1e-8))
        throw std::logic_error(name_ + ": evaluator disagrees with its Taylor prefix");
    }
  }
  // (2) Certificate holds on sampled domain points.
  {
    const double s_chk = certificate_.order_s > 0.0 ? certificate_.order_s : 1.0;
    const double lnq_chk = std::log(2.0);
    for (const SurfacePoint& z : validation_points()) {
      if (excluded_clearance(z) < 0.05) continue;
      const LogComplex v = evaluator_(z);
      if (lc_is_zero(v)) continue;
      const double r = std::exp(z.log_mag);
      const double bound = std::log(certificate_.C) +
                           std::pow(std::log(r + certificate_.h), 2) / (2.0 * s_chk * lnq_chk) +
                           certificate_.alpha * std::log(r + certificate_.h);
      if (v.log_mag > bound + 1e-6) throw std::logic_error(name_ + ": growth certificate violated on a sample");
    }
  }
}

double ContinuableFunction::excluded_clearance(const SurfacePoint& z) const {
  double best = 1.0;
  for (const ExcludedRay& ray : excluded_) best = std::min(best, ray_distance_log(z, ray));
  return best;
}

ContinuableFunction geometric(int prefix_order) {
  return scaled_geometric(lc_one(), prefix_order);
}

ContinuableFunction scaled_geometric(const LogComplex& c, int prefix_order) {
  if (lc_is_zero(c)) throw std::invalid_argument("scaled_geometric: scale must be non-zero");
  ExcludedRay ray{normalize_phase(-c.phase), -c.log_mag, {}};
  auto eval = [c, ray](const SurfacePoint& z) -> LogComplex {
    const LogComplex ct = lc_mul(c, z.project());
    if (std::abs(normalize_phase(ct.phase)) < 1e-12 && ct.log_mag > -1e-12)
      throw pole_error("geometric: evaluation on the excluded ray");
    const LogComplex w = lc_sub(lc_one(), ct);
    if (lc_is_zero(w)) throw pole_error("geometric: evaluation at the pole");
    return lc_inv(w);
  };
  FormalSeries prefix(prefix_order, 1);
  for (int p = 0; p < prefix_order; ++p) prefix.set(p, lc_pow_int(c, p));
  // |1 - ct| >= sin(clearance angle) relative bound: bounded on clearance
  // sectors, every growth order.
  GrowthCertificate cert{25.0, 1.0, 0.0, 0.0, CertificateMode::kRigorous};
  const bool plain = lc_is_zero(lc_sub(c, lc_one()));
  return ContinuableFunction(plain ? ContinuationKind::kGeometric : ContinuationKind::kScaledGeometric,
                             plain ? "geometric" : "scaled_geometric", eval, {ray}, std::move(prefix), cert);
}

ContinuableFunction monomial(int p) {
  if (p < 0) throw std::invalid_argument("monomial: power must be >= 0");
  auto eval = [p](const SurfacePoint& z) -> LogComplex { return lc_make(p * z.log_mag, p * z.arg); };
  FormalSeries prefix(p + 1, 1);
  prefix.set(p, lc_one());
  GrowthCertificate cert{1.0, 1.0, static_cast<double>(p), 0.0, CertificateMode::kRigorous};
  return ContinuableFunction(ContinuationKind::kMonomial, "monomial", eval, {}, std::move(prefix), cert);
}

ContinuableFunction q_exponential(const QBase& base, int prefix_order, double tol) {
  if (base.q <= 1.0) throw std::invalid_argument("q_exponential: requires q > 1");
  const double q = base.q;
  const double lnq = base.log_q();
  const double log_scale = std::log1p(-1.0 / q);  // log (1 - 1/q)

  ExcludedRay ray{0.0, std::log(q / (q - 1.0)), {}};
  for (int k = 0; k < 64; ++k) ray.pole_logs.push_back((k + 1) * lnq - std::log(q - 1.0));

  auto eval = [base, log_scale, ray, tol](const SurfacePoint& z) -> LogComplex {
    if (lc_is_zero(z.project())) return lc_one();
    check_pole_proximity(z, ray, "q_exponential");
    const LogComplex x = lc_scale_log(z.project(), log_scale);
    const LogComplex denom = q_pochhammer_inf(x, base, tol).value;
    if (lc_is_zero(denom)) throw pole_error("q_exponential: evaluation at a pole");
    return lc_inv(denom);
  };

  FormalSeries prefix(prefix_order, 1);
  const QBase inv_base(1.0 / q);
  for (int p = 0; p < prefix_order; ++p)
    prefix.set(p, lc_make(-q_factorial_log(p, inv_base), 0.0));

  GrowthCertificate cert{50.0, 1.0, 0.0, 0.0, CertificateMode::kRigorous};
  return ContinuableFunction(ContinuationKind::kQExponential, "q_exponential", eval, {ray},
                             std::move(prefix), cert);
}

ContinuableFunction q_factorial_series(const QBase& base, int prefix_order, double tol) {
  if (base.q <= 1.0) throw std::invalid_argument("q_factorial_series: requires q > 1");
  const double q = base.q;
  const double lnq = base.log_q();

  // Poles where q z / ((q-1) q^p) = 1: z = (q-1) q^{p-1}, p >= 0.
  ExcludedRay ray{0.0, std::log((q - 1.0) / q), {}};
  for (int k = 0; k < 64; ++k) ray.pole_logs.push_back(std::log(q - 1.0) + (k - 1.0) * lnq);

  // (1/q; 1/q)_p is real positive and decreasing to (1/q; 1/q)_inf.
  const int inf_terms = q_pochhammer_inf(lc_from_real(1.0 / q), base, 1e-15).terms;
  std::vector<double> log_poch(inf_terms + 1, 0.0);
  for (int p = 1; p <= inf_terms; ++p)
    log_poch[p] = log_poch[p - 1] + std::log1p(-std::exp(-p * lnq));
  const double log_poch_inf = log_poch[inf_terms];

  auto eval = [base, q, lnq, log_poch, log_poch_inf, ray, tol](const SurfacePoint& z) -> LogComplex {
    const LogComplex zp = z.project();
    if (lc_is_zero(zp)) return lc_one();
    check_pole_proximity(z, ray, "q_factorial_series");
    // term_p = [1 - qz/((q-1)q^p)]^{-1} * (1/q;1/q)_inf/(1/q;1/q)_p * q^{-p}
    const double log_front = std::log(q / (q - 1.0));  // log |qz/(q-1)| offset
    // beyond this index the pole factor is within a factor 2 of 1
    const int p_safe = std::max(0, static_cast<int>(std::ceil((zp.log_mag + log_front + std::numbers::ln2) / lnq)));
    const int P = p_safe + static_cast<int>(std::ceil((std::log(2.0 / tol)) / lnq)) + 2;
    std::vector<LogComplex> terms;
    terms.reserve(P + 1);
    for (int p = 0; p <= P; ++p) {
      const LogComplex pole_factor = lc_sub(lc_one(), lc_scale_log(zp, log_front - p * lnq));
      if (lc_is_zero(pole_factor)) throw pole_error("q_factorial_series: evaluation at a pole");
      const double lp = p < static_cast<int>(log_poch.size()) ? log_poch[p] : log_poch_inf;
      terms.push_back(lc_scale_log(lc_inv(pole_factor), log_poch_inf - lp - p * lnq));
    }
    return sum_terms_descending(terms);
  };

  FormalSeries prefix(prefix_order, 1);
  const QBase inv_base(1.0 / q);
  for (int p = 0; p < prefix_order; ++p)
    prefix.set(p, lc_make(q_factorial_log(p, inv_base), 0.0));

  GrowthCertificate cert{60.0, 1.0, 0.0, 0.0, CertificateMode::kRigorous};
  return ContinuableFunction(ContinuationKind::kQFactorialSeries, "q_factorial_series", eval, {ray},
                             std::move(prefix), cert);
}

std::pair<ContinuableFunction, ContinuableFunction> central_binomial_pair(int prefix_order) {
  // First: (1 - 4t)^{-1/2}, branch cut [1/4, inf). The principal branch is
  // continued through the winding of t: looping once around the origin with
  // |t| > 1/4 also loops 1-4t around 0 and flips the sheet; with |t| < 1/4 it
  // does not.
  ExcludedRay cut1{0.0, std::log(0.25), {}};
  auto eval1 = [](const SurfacePoint& z) -> LogComplex {
    const double two_pi = 2.0 * std::numbers::pi;
    const bool beyond_branch_point = z.log_mag > std::log(0.25);
    if (std::abs(normalize_phase(z.arg)) < 1e-12 && z.log_mag >= std::log(0.25) - 1e-12)
      throw pole_error("central_binomial_sqrt: evaluation on the branch cut");
    const LogComplex w = lc_sub(lc_one(), lc_scale_log(z.project(), std::numbers::ln2 * 2.0));
    if (lc_is_zero(w)) throw pole_error("central_binomial_sqrt: branch point");
    double arg_w = w.phase;
    if (beyond_branch_point) {
      // Each crossing of the cut (arg of t through 0 mod 2pi with |t| > 1/4)
      // winds 1-4t once around 0; on the sheet arg t in (2pi k, 2pi (k+1))
      // the principal determination needs k extra turns.
      const double sheet = std::floor(z.arg / two_pi);
      arg_w += two_pi * sheet;
    }
    return lc_make(-0.5 * w.log_mag, -0.5 * arg_w);
  };
  FormalSeries prefix1(prefix_order, 1);
  for (int p = 0; p < prefix_order; ++p)
    prefix1.set(p, lc_make(std::lgamma(2.0 * p + 1.0) - 2.0 * std::lgamma(p + 1.0), 0.0));
  GrowthCertificate cert1{25.0, 1.0, 0.0, 0.0, CertificateMode::kRigorous};
  ContinuableFunction first(ContinuationKind::kCentralBinomialSqrt, "central_binomial_sqrt",
                            eval1, {cut1}, std::move(prefix1), cert1);

  // Second: sum p!^2/(2p)! t^p
  //   = 1/(1-t/4) (1 + 1/2 sqrt(t/(1-t/4)) arcsin(sqrt(t)/2)),
  // analytic on C minus [4, inf): the principal-branch jumps of the two
  // square roots and arcsin cancel in the product.
  ExcludedRay cut2{0.0, std::log(4.0), {}};
  auto eval2 = [cut2](const SurfacePoint& z) -> LogComplex {
    if (std::abs(normalize_phase(z.arg)) < 1e-12 && z.log_mag >= std::log(4.0) - 1e-12)
      throw pole_error("central_binomial_arcsin: evaluation on the branch cut");
    if (z.log_mag < -300.0) return lc_one();  // 1 + t/2 + ... below double resolution
    const std::complex<double> t = project_to_complex(z, "central_binomial_arcsin");
    const std::complex<double> d = 1.0 - t / 4.0;
    if (std::abs(d) < 1e-300) throw pole_error("central_binomial_arcsin: pole at t = 4");
    const std::complex<double> val =
        (1.0 + 0.5 * std::sqrt(t / d) * std::asin(0.5 * std::sqrt(t))) / d;
    return lc_from_complex(val);
  };
  FormalSeries prefix2(prefix_order, 1);
  for (int p = 0; p < prefix_order; ++p)
    prefix2.set(p, lc_make(2.0 * std::lgamma(p + 1.0) - std::lgamma(2.0 * p + 1.0), 0.0));
  GrowthCertificate cert2{25.0, 1.0, 0.0, 0.0, CertificateMode::kRigorous};
  ContinuableFunction second(ContinuationKind::kCentralBinomialArcsin, "central_binomial_arcsin",
                             eval2, {cut2}, std::move(prefix2), cert2);

  return {std::move(first), std::move(second)};
}

ContinuableFunction pade_continue(const FormalSeries& u, int num_deg, int den_deg) {
  if (u.dim() != 1) throw std::invalid_argument("pade_continue: series must have dim 1");
  if (num_deg < 0 || den_deg < 0 || num_deg + den_deg + 1 > u.order())
    throw std::invalid_argument("pade_continue: need num_deg + den_deg + 1 <= order");

  std::vector<std::complex<double>> c(u.order());
  for (int p = 0; p < u.order(); ++p) c[p] = lc_to_complex(u.at(p));

  int nd = num_deg, dd = den_deg;
  std::vector<std::complex<double>> num, den;
  for (;; --nd, --dd) {
    if (nd < 0 || dd < 0) throw std::invalid_argument("pade_continue: no non-degenerate approximant");
    if (dd == 0) {
      num.assign(c.begin(), c.begin() + nd + 1);
      den.assign(1, 1.0);
      break;
    }
    // Linear system for b_1..b_dd: sum_j b_j c_{k-j} = -c_k, k = nd+1..nd+dd.
    Eigen::MatrixXcd M(dd, dd);
    Eigen::VectorXcd rhs(dd);
    for (int i = 0; i < dd; ++i) {
      const int k = nd + 1 + i;
      for (int j = 1; j <= dd; ++j)
        M(i, j - 1) = (k - j >= 0) ? c[k - j] : std::complex<double>(0.0);
      rhs(i) = -c[k];
    }
    Eigen::FullPivLU<Eigen::MatrixXcd> lu(M);
    lu.setThreshold(1e-12);
    if (lu.rank() < dd) continue;  // degenerate: fall back to lower degree
    const Eigen::VectorXcd b = lu.solve(rhs);
    den.assign(dd + 1, 0.0);
    den[0] = 1.0;
    for (int j = 1; j <= dd; ++j) den[j] = b(j - 1);
    num.assign(nd + 1, 0.0);
    for (int k = 0; k <= nd; ++k)
      for (int j = 0; j <= std::min(k, dd); ++j) num[k] += den[j] * c[k - j];
    break;
  }

  // Poles: roots of the denominator via its companion matrix.
  std::vector<std::complex<double>> poles;
  {
    int deg = static_cast<int>(den.size()) - 1;
    while (deg > 0 && std::abs(den[deg]) < 1e-14) --deg;
    if (deg > 0) {
      Eigen::MatrixXcd comp = Eigen::MatrixXcd::Zero(deg, deg);
      for (int i = 1; i < deg; ++i) comp(i, i - 1) = 1.0;
      for (int i = 0; i < deg; ++i) comp(i, deg - 1) = -den[i] / den[deg];
      Eigen::ComplexEigenSolver<Eigen::MatrixXcd> es(comp);
      for (int i = 0; i < deg; ++i) {
        const std::complex<double> r = es.eigenvalues()(i);
        if (std::isfinite(r.real()) && std::isfinite(r.imag())) poles.push_back(r);
      }
    }
  }

  std::vector<ExcludedRay> excluded;
  for (const auto& pole : poles) {
    if (std::abs(pole) == 0.0) continue;
    excluded.push_back(ExcludedRay{std::arg(pole), std::log(std::abs(pole)), {std::log(std::abs(pole))}});
  }

  auto horner = [](const std::vector<std::complex<double>>& poly, std::complex<double> x) {
    std::complex<double> acc = 0.0;
    for (auto it = poly.rbegin(); it != poly.rend(); ++it) acc = acc * x + *it;
    return acc;
  };
  auto eval = [num, den, horner](const SurfacePoint& z) -> LogComplex {
    const std::complex<double> t = project_to_complex(z, "pade");
    const std::complex<double> q = horner(den, t);
    if (std::abs(q) < 1e-280) throw pole_error("pade: evaluation at a pole of the approximant");
    return lc_from_complex(horner(num, t) / q);
  };

  // Heuristic certificate: sampled after construction by
  // growth_certificate_check; stored with the rational function's polynomial
  // degree gap as alpha.
  GrowthCertificate cert{1.0, 1.0, static_cast<double>(std::max(0, nd - dd)), 0.0,
                         CertificateMode::kHeuristic};
  FormalSeries prefix(num_deg + den_deg + 1, 1);
  for (int p = 0; p < prefix.order(); ++p) prefix.set(p, u.at(p));

  // Sample a crude C for the stored certificate so the constructor invariant
  // holds; callers re-fit with growth_certificate_check.
  double worst = 1.0;
  for (double r : {0.3, 1.0, 3.0, 20.0, 200.0}) {
    for (double a : {0.7, 2.2, std::numbers::pi, 4.1, 5.6}) {
      const SurfacePoint zp{std::log(r), a};
      bool clear = true;
      for (const auto& ray : excluded)
        if (ray_distance_log(zp, ray) < 0.05) clear = false;
      if (!clear) continue;
      try {
        const LogComplex v = eval(zp);
        if (!lc_is_zero(v))
          worst = std::max(worst, std::exp(v.log_mag - cert.alpha * std::log(r + 1.0)));
      } catch (const pole_error&) {
      }
    }
  }
  cert.C = 2.0 * worst;

  return ContinuableFunction(ContinuationKind::kPade, "pade", eval, std::move(excluded),
                             std::move(prefix), cert);
}

CertificateCheck growth_certificate_check(const ContinuableFunction& f, const QBase& base,
                                          double s, const SampleSpec& samples, double alpha_cap) {
  if (!(s > 0.0)) throw std::invalid_argument("growth_certificate_check: s must be positive");
  const double lnq = base.log_q();
  std::vector<std::pair<double, double>> pts;  // (x, y) = (log(r+1), log|f| - log^2(r+1)/(2 s lnq))
  for (int i = 0; i < samples.n_r; ++i) {
    const double fr = samples.n_r == 1 ? 0.0 : static_cast<double>(i) / (samples.n_r - 1);
    const double r = samples.r_min * std::pow(samples.r_max / samples.r_min, fr);
    for (int j = 0; j < samples.n_arg; ++j) {
      const double fa = samples.n_arg == 1 ? 0.0 : static_cast<double>(j) / (samples.n_arg - 1);
      const double a = samples.arg_min + fa * (samples.arg_max - samples.arg_min);
      const SurfacePoint z{std::log(r), a};
      if (f.excluded_clearance(z) < samples.min_clearance) continue;
      const LogComplex v = f.eval(z);
      if (lc_is_zero(v)) continue;
      const double x = std::log(r + 1.0);
      pts.emplace_back(x, v.log_mag - x * x / (2.0 * s * lnq));
    }
  }
  CertificateCheck out;
  out.samples_used = static_cast<int>(pts.size());
  if (pts.empty()) return out;

  // Smallest alpha that a dominating line log C + alpha x can have: the
  // largest slope between well-separated samples (a wide separation floor
  // keeps angular variation of |f| from polluting the slope).
  double x_lo = pts.front().first, x_hi = pts.front().first;
  for (const auto& [x, y] : pts) {
    x_lo = std::min(x_lo, x);
    x_hi = std::max(x_hi, x);
  }
  const double min_sep = std::max(1.0, (x_hi - x_lo) / 2.0);
  double alpha = -std::numeric_limits<double>::infinity();
  for (std::size_t i = 0; i < pts.size(); ++i)
    for (std::size_t j = 0; j < pts.size(); ++j)
      if (pts[j].first > pts[i].first + min_sep)
        alpha = std::max(alpha, (pts[j].second - pts[i].second) / (pts[j].first - pts[i].first));
  if (std::isinf(alpha)) alpha = 0.0;

  double logC = -std::numeric_limits<double>::infinity();
  for (const auto& [x, y] : pts) logC = std::max(logC, y - alpha * x);

  out.alpha = alpha;
  out.C = std::exp(logC);
  out.ok = std::isfinite(alpha) && std::isfinite(logC) && alpha <= alpha_cap;
  return out;
}

}  // namespace qgevrey
