#pragma once

#include "qgevrey/log_complex.hpp"
#include "qgevrey/qcore.hpp"

namespace qgevrey {

// Parameters of the Jacobi theta function built on q^s.
struct ThetaParams {
  double q;
  double s;
  double tol;

  ThetaParams(double q_, double s_, double tol_ = 1e-12) : q(q_), s(s_), tol(tol_) {
    if (!(q > 1.0)) throw std::invalid_argument("ThetaParams: q must be > 1");
    if (!(s > 0.0)) throw std::invalid_argument("ThetaParams: s must be > 0");
    if (!(tol > 0.0)) throw std::invalid_argument("ThetaParams: tol must be > 0");
  }

  double log_qs() const { return s * std::log(q); }
};

enum class ThetaMethod { kSeries, kProduct };

struct ThetaValue {
  LogComplex value;
  // Result magnitude fell below tol * (largest partial term): the point sits
  // on (or numerically at) the zero spiral and value is canonical zero.
  bool flagged_zero = false;
  int terms = 0;          // bilateral terms summed / product factors used
  double peak_log = 0.0;  // log magnitude of the largest term (series scale)
};

// theta_{q^s}(z) = sum_{p in Z} q^{-s p(p-1)/2} z^p, z != 0.
ThetaValue theta_eval(const LogComplex& z, const ThetaParams& params,
                      ThetaMethod method = ThetaMethod::kSeries);

// inf over k in Z of |1 + z / q^{ks}| (1 is the k -> +inf limiting value).
double spiral_clearance(const LogComplex& z, const ThetaParams& params);

// log of the spiral-clearance lower bound C delta exp(log^2|z| / (2 s log q)) |z|^{1/2}.
double theta_lower_bound_log(const LogComplex& z, const ThetaParams& params, double delta, double C);

}  // namespace qgevrey
