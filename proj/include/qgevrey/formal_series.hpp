#pragma once

#include <vector>

#include "qgevrey/log_complex.hpp"
#include "qgevrey/qcore.hpp"
#include "qgevrey/sequence.hpp"

namespace qgevrey {

// Truncated formal power series with LogComplex coefficients. Coefficient p
// is a dim-vector (Euclidean norm); dim = 1 everywhere unless stated.
// Truncation order is explicit data: every operator documents its effect on
// order and nothing is zero-padded silently.
class FormalSeries {
 public:
  explicit FormalSeries(int order, int dim = 1);

  static FormalSeries from_log_coeffs(std::vector<LogComplex> coeffs);
  static FormalSeries from_real_coeffs(std::span<const double> values);

  int order() const { return order_; }
  int dim() const { return dim_; }

  const LogComplex& at(int p, int j = 0) const;
  void set(int p, const LogComplex& c, int j = 0);

  // log of the Euclidean norm of coefficient p (-inf for a zero coefficient).
  double coeff_norm_log(int p) const;

 private:
  int order_;
  int dim_;
  std::vector<LogComplex> coeffs_;  // p-major: index p * dim + j
};

// B_{q;s}: coefficient p divided by q^{s p(p-1)/2}. Negative s runs the
// inverse direction. Order preserved.
FormalSeries qborel(const FormalSeries& u, const QBase& base, double s);

// B_{m,t}: coefficient p divided by m_p. Order preserved. m must provide at
// least `order` terms and be normalized (enforced by PositiveSequence).
FormalSeries mborel(const FormalSeries& u, const PositiveSequence& m);

// d_{m,z}: output coefficient p is c_{p+1} m_{p+1} / m_p; order drops by 1.
FormalSeries moment_derivative(const FormalSeries& u, const PositiveSequence& m);

// Termwise sum; dims must match, orders truncate to the minimum.
FormalSeries series_add(const FormalSeries& u, const FormalSeries& v);

// Cauchy product truncated at the smaller order (dim 1 only).
FormalSeries series_mul(const FormalSeries& u, const FormalSeries& v);

// Coefficient p of the output is (p+1) c_{p+1}; order drops by 1.
FormalSeries formal_derivative(const FormalSeries& u);

// sum_{p<=N} c_p z^p per component, folded in descending-magnitude order.
std::vector<LogComplex> eval_partial(const FormalSeries& u, const LogComplex& z, int N);
LogComplex eval_partial_scalar(const FormalSeries& u, const LogComplex& z, int N);

}  // namespace qgevrey
