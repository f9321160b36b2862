#pragma once

#include <functional>
#include <string>
#include <utility>
#include <vector>

#include "qgevrey/errors.hpp"
#include "qgevrey/formal_series.hpp"
#include "qgevrey/log_complex.hpp"
#include "qgevrey/qcore.hpp"

namespace qgevrey {

// Point on the Riemann surface of the logarithm: the argument is unbounded
// and carries the winding explicitly.
struct SurfacePoint {
  double log_mag = 0.0;
  double arg = 0.0;

  LogComplex project() const { return lc_make(log_mag, arg); }
  static SurfacePoint from_lc(const LogComplex& z) {
    if (lc_is_zero(z)) throw std::invalid_argument("SurfacePoint: zero has no argument");
    return SurfacePoint{z.log_mag, z.phase};
  }
};

enum class ContinuationKind {
  kGeometric,
  kScaledGeometric,
  kMonomial,
  kQExponential,
  kQFactorialSeries,
  kCentralBinomialSqrt,
  kCentralBinomialArcsin,
  kPade,
};

enum class CertificateMode { kRigorous, kHeuristic };

// q-exponential growth certificate: on the function's domain (points with
// excluded-set clearance), ||f(z)|| <= C exp(log^2(|z|+h)/(2 s log q)) (|z|+h)^alpha.
// order_s <= 0 means the bound holds for every order (bounded or polynomially
// growing functions); otherwise it is specific to that s.
struct GrowthCertificate {
  double C = 1.0;
  double h = 1.0;
  double alpha = 0.0;
  double order_s = 0.0;
  CertificateMode mode = CertificateMode::kRigorous;
};

// Excluded ray {r e^{i angle} : r >= exp(log_start)} plus isolated poles on it.
struct ExcludedRay {
  double angle = 0.0;
  double log_start = 0.0;
  std::vector<double> pole_logs;  // log radii of isolated poles, empty if a full cut
};

// Evaluator of an analytic continuation on a ray-excluded domain, carrying
// its Taylor prefix and a growth certificate. Construction verifies the
// invariant pair: the evaluator agrees with the Taylor prefix near 0 and the
// certificate holds on sampled domain points (std::logic_error otherwise).
class ContinuableFunction {
 public:
  ContinuableFunction(ContinuationKind kind, std::string name,
                      std::function<LogComplex(const SurfacePoint&)> evaluator,
                      std::vector<ExcludedRay> excluded, FormalSeries series_at_0,
                      GrowthCertificate certificate);

  LogComplex eval(const SurfacePoint& z) const { return evaluator_(z); }

  ContinuationKind kind() const { return kind_; }
  const std::string& name() const { return name_; }
  const FormalSeries& series_at_0() const { return series_at_0_; }
  const GrowthCertificate& certificate() const { return certificate_; }
  const std::vector<ExcludedRay>& excluded() const { return excluded_; }

  // min over excluded rays of dist(z, ray)/|z|; 1 when nothing is excluded.
  double excluded_clearance(const SurfacePoint& z) const;

 private:
  ContinuationKind kind_;
  std::string name_;
  std::function<LogComplex(const SurfacePoint&)> evaluator_;
  std::vector<ExcludedRay> excluded_;
  FormalSeries series_at_0_;
  GrowthCertificate certificate_;
};

// 1/(1-t), excluded ray [1, inf).
ContinuableFunction geometric(int prefix_order = 40);

// 1/(1-ct) = sum (ct)^p for a non-zero scale c; excluded ray through 1/c.
ContinuableFunction scaled_geometric(const LogComplex& c, int prefix_order = 40);

// t^p; entire, certificate alpha = p for every order.
ContinuableFunction monomial(int p);

// e_{1/q}(z) = sum z^p / [p]_{1/q}! = 1 / ((1-1/q) z; 1/q)_inf, poles on R_+.
ContinuableFunction q_exponential(const QBase& base, int prefix_order = 60, double tol = 1e-12);

// Residue-series continuation of sum [p]_{1/q}! z^p, poles {(q-1) q^{p-1}}.
ContinuableFunction q_factorial_series(const QBase& base, int prefix_order = 60, double tol = 1e-12);

// (1-4t)^{-1/2} with cut [1/4, inf), and the arcsin closed form of
// sum p!^2/(2p)! t^p with its singularity at t = 4.
std::pair<ContinuableFunction, ContinuableFunction> central_binomial_pair(int prefix_order = 60);

// Rational approximant matching the Taylor prefix; poles become the excluded
// set and the certificate is sampled, flagged heuristic. A singular linear
// system falls back to lower degrees.
ContinuableFunction pade_continue(const FormalSeries& u, int num_deg, int den_deg);

struct SampleSpec {
  double r_min = 0.1;
  double r_max = 100.0;
  int n_r = 24;
  double arg_min = 0.3;
  double arg_max = 2.0 * 3.14159265358979323846 - 0.3;
  int n_arg = 16;
  double min_clearance = 0.05;
};

struct CertificateCheck {
  double C = 1.0;
  double h = 1.0;
  double alpha = 0.0;
  bool ok = false;
  int samples_used = 0;
};

// Fit the smallest alpha (then C) with h = 1 such that the order-1/s bound
// holds on every sample; ok iff alpha stays below the cap.
CertificateCheck growth_certificate_check(const ContinuableFunction& f, const QBase& base,
                                          double s, const SampleSpec& samples,
                                          double alpha_cap = 2.0);

}  // namespace qgevrey
