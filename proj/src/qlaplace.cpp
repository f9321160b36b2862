#include "qgevrey/qlaplace.hpp"

#include <algorithm>
#include <cmath>
#include <complex>
#include <numbers>

#include "qgevrey/parallel.hpp"

namespace qgevrey {

namespace {

struct Node {
  double x;
  LogComplex value;  // f(u) / Theta(u/z)
  bool shifted = false;
};

class Integrand {
 public:
  Integrand(const ContinuableFunction& f, const RayDomain& dom, const SurfacePoint& z)
      : f_(f), dom_(dom), z_(z), theta_params_(dom.q, dom.s, 1e-13) {}

  // Evaluates at u = e^{x + i gamma}, micro-shifting by half a step when the
  // node lands too close to the theta zero spiral.
  Node eval(double x, double step) const {
    Node node{x, lc_zero(), false};
    for (int attempt = 0; attempt < 2; ++attempt) {
      const LogComplex u_over_z = lc_make(node.x - z_.log_mag, dom_.gamma - z_.arg);
      if (spiral_clearance(u_over_z, theta_params_) < dom_.delta / 2.0) {
        node.x += step / 2.0;
        node.shifted = true;
        continue;
      }
      const ThetaValue theta = theta_eval(u_over_z, theta_params_);
      if (theta.flagged_zero) {
        node.x += step / 2.0;
        node.shifted = true;
        continue;
      }
      const LogComplex fu = f_.eval(SurfacePoint{node.x, dom_.gamma});
      node.value = lc_div(fu, theta.value);
      return node;
    }
    throw quadrature_error("q_laplace: node row hits the theta zero spiral");
  }

 private:
  const ContinuableFunction& f_;
  const RayDomain& dom_;
  const SurfacePoint& z_;
  ThetaParams theta_params_;
};

// Trapezoid sum of the node values, accumulated in index order after
// factoring out the peak magnitude so the partial sums stay in double range.
LogComplex trapezoid_total(const std::vector<Node>& nodes, double step) {
  double peak = -std::numeric_limits<double>::infinity();
  for (const Node& n : nodes) peak = std::max(peak, n.value.log_mag);
  if (std::isinf(peak)) return lc_zero();
  std::complex<double> acc = 0.0;
  for (std::size_t i = 0; i < nodes.size(); ++i) {
    const LogComplex& v = nodes[i].value;
    if (lc_is_zero(v)) continue;
    const double w = (i == 0 || i + 1 == nodes.size()) ? 0.5 : 1.0;
    acc += w * std::polar(std::exp(v.log_mag - peak), v.phase);
  }
  if (acc == std::complex<double>(0.0, 0.0)) return lc_zero();
  return lc_make(peak + std::log(std::abs(acc)) + std::log(step), std::arg(acc));
}

bool close_rel(const LogComplex& a, const LogComplex& b, double tol) {
  const LogComplex diff = lc_sub(a, b);
  if (lc_is_zero(diff)) return true;
  const double scale = std::max(a.log_mag, b.log_mag);
  if (std::isinf(scale)) return false;
  return diff.log_mag - scale <= std::log(tol);
}

}  // namespace

double ray_clearance(const LogComplex& z, double gamma) {
  if (lc_is_zero(z)) throw std::domain_error("ray_clearance: z must be non-zero");
  // With w = e^{-i gamma} z = a + bi: the infimum of |w + r| over r >= 0 is
  // |w| when a >= 0 (at r = 0) and |b| otherwise (at r = -a).
  const double phi = normalize_phase(z.phase - gamma);
  if (std::cos(phi) >= 0.0) return 1.0;
  return std::abs(std::sin(phi));
}

double validity_radius(double alpha, const QBase& base, double s) {
  return std::exp(-s * base.log_q() * (alpha + 1.0));
}

LaplaceResult q_laplace(const ContinuableFunction& f, const RayDomain& dom,
                        const SurfacePoint& z, double tol) {
  if (!(tol > 0.0)) throw std::invalid_argument("q_laplace: tol must be positive");
  const LogComplex zp = z.project();
  if (ray_clearance(zp, dom.gamma) <= dom.delta)
    throw std::domain_error("q_laplace: z violates the ray clearance delta");
  const GrowthCertificate& cert = f.certificate();
  if (cert.order_s > 0.0 && cert.order_s < dom.s - 1e-12)
    throw growth_error("q_laplace: certificate order 1/" + std::to_string(cert.order_s) +
                       " does not cover order 1/" + std::to_string(dom.s));

  const double lnq = std::log(dom.q);
  const double slnq = dom.s * lnq;
  const double L = z.log_mag;
  const double T = std::log(1.0 / tol) + 6.0;

  // The theta denominator contributes Gaussian decay exp(-(x-L)^2/(2 s lnq));
  // the certificate numerator shifts the surviving mass right by at most
  // s lnq (alpha + 1/2) and adds linear growth alpha x.
  const double gauss_w = std::sqrt(2.0 * slnq * T) + 1.0;
  const double alpha_pos = std::max(cert.alpha, 0.0);
  double window_lo = L - gauss_w;
  double window_hi = L + gauss_w + slnq * (alpha_pos + 1.0);

  QuadratureInfo info;
  const Integrand integrand(f, dom, z);

  // Extend the window until edge nodes are negligible against the peak.
  int base_nodes = 65;
  std::vector<Node> nodes;
  for (;; ++info.extensions) {
    if (info.extensions > 16) throw quadrature_error("q_laplace: window extension did not settle");
    const double step = (window_hi - window_lo) / (base_nodes - 1);
    nodes.clear();
    nodes.reserve(base_nodes);
    for (int i = 0; i < base_nodes; ++i) nodes.push_back(integrand.eval(window_lo + i * step, step));
    double peak = -std::numeric_limits<double>::infinity();
    for (const Node& n : nodes) peak = std::max(peak, n.value.log_mag);
    const double edge = std::max(nodes.front().value.log_mag, nodes.back().value.log_mag);
    if (std::isinf(peak) || edge <= peak - T - 2.0) break;
    if (nodes.front().value.log_mag > peak - T - 2.0) window_lo -= gauss_w / 2.0;
    if (nodes.back().value.log_mag > peak - T - 2.0) window_hi += gauss_w / 2.0;
    base_nodes += 16;
  }

  double step = (window_hi - window_lo) / (nodes.size() - 1);
  LogComplex result = trapezoid_total(nodes, step);

  // Successive halvings, reusing existing nodes, until two levels agree.
  bool converged = false;
  for (int level = 1; level <= 12; ++level) {
    std::vector<Node> refined;
    refined.reserve(nodes.size() * 2 - 1);
    const double half = step / 2.0;
    for (std::size_t i = 0; i < nodes.size(); ++i) {
      refined.push_back(nodes[i]);
      if (i + 1 < nodes.size()) refined.push_back(integrand.eval(window_lo + i * step + half, half));
    }
    nodes.swap(refined);
    step = half;
    const LogComplex next = trapezoid_total(nodes, step);
    info.refinements = level;
    if (close_rel(next, result, tol)) {
      result = next;
      converged = true;
      break;
    }
    result = next;
  }
  if (!converged) throw quadrature_error("q_laplace: refinement did not converge within 12 levels");

  for (const Node& n : nodes)
    if (n.shifted) ++info.shifted_nodes;
  info.window_lo = window_lo;
  info.window_hi = window_hi;
  info.nodes = static_cast<int>(nodes.size());

  const double norm = std::log(slnq);
  LaplaceResult out;
  out.value = lc_scale_log(result, -norm);
  out.quad = info;
  return out;
}

SectorialFunction q_sum(const FormalSeries& u, const QBase& base, double s, double gamma,
                        const ContinuableFunction& g, const SectorGrid& grid, double tol,
                        bool parallel, double delta) {
  if (!(s > 0.0)) throw std::invalid_argument("q_sum: s must be > 0");
  const FormalSeries borel = qborel(u, base, s);
  const int shared = std::min(borel.order(), g.series_at_0().order());
  for (int p = 0; p < shared; ++p) {
    const LogComplex a = borel.at(p);
    const LogComplex b = g.series_at_0().at(p);
    const LogComplex diff = lc_sub(a, b);
    if (lc_is_zero(diff)) continue;
    const double scale = std::max(a.log_mag, b.log_mag);
    if (diff.log_mag - scale > std::log(1e-8))
      throw std::invalid_argument("q_sum: q-Borel transform does not match the continuation prefix");
  }

  const RayDomain dom(gamma, delta, base.q, s);
  std::vector<SurfacePoint> points;
  for (int i = 0; i < grid.n_r; ++i) {
    const double fr = grid.n_r == 1 ? 0.0 : static_cast<double>(i) / (grid.n_r - 1);
    const double r = grid.r_min * std::pow(grid.r_max / grid.r_min, fr);
    for (int j = 0; j < grid.n_arg; ++j) {
      const double fa = grid.n_arg == 1 ? 0.5 : static_cast<double>(j) / (grid.n_arg - 1);
      const double a = gamma - grid.half_opening + fa * 2.0 * grid.half_opening;
      const SurfacePoint z{std::log(r), a};
      if (ray_clearance(z.project(), gamma) <= delta) continue;
      points.push_back(z);
    }
  }

  SectorialFunction out;
  out.gamma = gamma;
  out.q = base.q;
  out.s = s;
  out.samples.resize(points.size());
  par::for_each_index(points.size(), parallel, [&](std::size_t i) {
    const LaplaceResult r = q_laplace(g, dom, points[i], tol);
    out.samples[i] = SamplePoint{points[i], r.value, r.quad};
  });
  return out;
}

AsymptoticVerdict asymptotic_check(std::span<const SamplePoint> samples, const FormalSeries& coeffs,
                                   const QBase& base, double s, int N_max, double logA_cap) {
  if (samples.empty()) throw std::invalid_argument("asymptotic_check: empty sample set");
  if (N_max >= coeffs.order()) throw std::invalid_argument("asymptotic_check: N_max must be < coeffs order");
  if (coeffs.dim() != 1) throw std::invalid_argument("asymptotic_check: coeffs must have dim 1");
  const double slnq = s * base.log_q();

  // D_N = max over samples of log||R_N(z)|| - (N+1) log|z| - s lnq N(N-1)/2.
  std::vector<double> D(N_max + 1, -std::numeric_limits<double>::infinity());
  std::vector<int> D_arg(N_max + 1, -1);
  for (std::size_t i = 0; i < samples.size(); ++i) {
    const LogComplex z = samples[i].z.project();
    if (lc_is_zero(z)) throw std::invalid_argument("asymptotic_check: samples must avoid z = 0");
    LogComplex partial = lc_zero();
    for (int N = 0; N <= N_max; ++N) {
      partial = lc_add(partial, lc_mul(coeffs.at(N), lc_pow_int(z, N)));
      const LogComplex rem = lc_sub(samples[i].value, partial);
      if (lc_is_zero(rem)) continue;
      const double lhs = rem.log_mag - (N + 1.0) * z.log_mag -
                         slnq * (static_cast<double>(N) * (N - 1.0) / 2.0);
      if (lhs > D[N]) {
        D[N] = lhs;
        D_arg[N] = static_cast<int>(i);
      }
    }
  }

  AsymptoticVerdict v;
  // Minimal feasible slope: max pairwise slope of the finite D_N points.
  double logA = 0.0;
  bool any = false;
  for (int n1 = 0; n1 <= N_max; ++n1) {
    if (std::isinf(D[n1])) continue;
    any = true;
    for (int n2 = n1 + 1; n2 <= N_max; ++n2) {
      if (std::isinf(D[n2])) continue;
      logA = std::max(logA, (D[n2] - D[n1]) / static_cast<double>(n2 - n1));
    }
  }
  if (!any) {  // every remainder vanished: any (C, A) works
    v.logC = 0.0;
    v.logA = 0.0;
    v.pass = true;
    return v;
  }
  double logC = -std::numeric_limits<double>::infinity();
  int worst_N = -1;
  for (int N = 0; N <= N_max; ++N) {
    if (std::isinf(D[N])) continue;
    const double c = D[N] - N * logA;
    if (c > logC) {
      logC = c;
      worst_N = N;
    }
  }
  v.logA = logA;
  v.logC = logC;
  v.worst_N = worst_N;
  v.worst_index = worst_N >= 0 ? D_arg[worst_N] : -1;
  if (v.worst_index >= 0) v.worst_point = samples[v.worst_index].z;
  v.pass = std::isfinite(logA) && std::isfinite(logC) && logA <= logA_cap;
  return v;
}

}  // namespace qgevrey
