#pragma once

#include <optional>
#include <span>
#include <vector>

#include "qgevrey/continuation.hpp"
#include "qgevrey/errors.hpp"
#include "qgevrey/formal_series.hpp"
#include "qgevrey/qcore.hpp"
#include "qgevrey/theta.hpp"

namespace qgevrey {

// Ray L_gamma and the admissible set R_{gamma,delta} of evaluation points.
struct RayDomain {
  double gamma;
  double delta;
  double q;
  double s;

  RayDomain(double gamma_, double delta_, double q_, double s_)
      : gamma(gamma_), delta(delta_), q(q_), s(s_) {
    if (!(delta > 0.0 && delta < 1.0)) throw std::invalid_argument("RayDomain: delta must be in (0,1)");
    if (!(q > 1.0)) throw std::invalid_argument("RayDomain: q must be > 1");
    if (!(s > 0.0)) throw std::invalid_argument("RayDomain: s must be > 0");
  }
};

// inf_{r>=0} |z + r e^{i gamma}| / |z|: relative distance from -z to the ray.
double ray_clearance(const LogComplex& z, double gamma);

// Radius q^{-s(alpha+1)} on which the transform of an order-1/s function of
// polynomial exponent alpha is bounded.
double validity_radius(double alpha, const QBase& base, double s);

struct QuadratureInfo {
  double window_lo = 0.0;
  double window_hi = 0.0;
  int nodes = 0;
  int refinements = 0;
  int extensions = 0;
  int shifted_nodes = 0;
};

struct LaplaceResult {
  LogComplex value;
  QuadratureInfo quad;
};

// L^gamma_{q;s}(f)(z) = (1/(s log q)) int_{L_gamma} f(u)/Theta_{q^s}(u/z) du/u,
// computed on the log substitution u = e^{x + i gamma} by composite trapezoid
// with adaptive window extension and step refinement to relative tol.
LaplaceResult q_laplace(const ContinuableFunction& f, const RayDomain& dom,
                        const SurfacePoint& z, double tol);

struct SamplePoint {
  SurfacePoint z;
  LogComplex value;
  QuadratureInfo quad;
};

struct SectorGrid {
  double r_min = 1e-3;
  double r_max = 0.1;
  int n_r = 8;
  double half_opening = 0.8 * 3.14159265358979323846;  // sector half-opening around gamma
  int n_arg = 9;
};

struct SectorialFunction {
  std::vector<SamplePoint> samples;
  double gamma = 0.0;
  double q = 0.0;
  double s = 0.0;
};

// The q-summation pipeline on a sampling grid: requires the q-Borel transform
// of u to match g's Taylor prefix to relative 1e-8, then evaluates the
// q-Laplace transform of g at every grid point (grid points are independent;
// `parallel` selects the OpenMP path).
SectorialFunction q_sum(const FormalSeries& u, const QBase& base, double s, double gamma,
                        const ContinuableFunction& g, const SectorGrid& grid, double tol,
                        bool parallel = true, double delta = 0.05);

struct AsymptoticVerdict {
  double logC = 0.0;
  double logA = 0.0;
  bool pass = false;
  int worst_index = -1;
  int worst_N = -1;
  SurfacePoint worst_point{};
};

// Fits the smallest (log C, log A) such that for every sample z and every
// N <= N_max
//   log||f(z) - sum_{p<=N} f_p z^p|| <= logC + N logA + s logq N(N-1)/2 + (N+1) log|z|,
// as a sup-norm feasibility problem; pass iff logA stays below the cap.
AsymptoticVerdict asymptotic_check(std::span<const SamplePoint> samples, const FormalSeries& coeffs,
                                   const QBase& base, double s, int N_max, double logA_cap = 5.0);

}  // namespace qgevrey
