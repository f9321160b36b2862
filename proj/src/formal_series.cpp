#include "qgevrey/formal_series.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

namespace qgevrey {

FormalSeries::FormalSeries(int order, int dim) : order_(order), dim_(dim) {
  if (order < 0) throw std::invalid_argument("FormalSeries: order must be >= 0");
  if (dim < 1) throw std::invalid_argument("FormalSeries: dim must be >= 1");
  coeffs_.assign(static_cast<std::size_t>(order) * dim, lc_zero());
}

FormalSeries FormalSeries::from_log_coeffs(std::vector<LogComplex> coeffs) {
  FormalSeries s(static_cast<int>(coeffs.size()), 1);
  s.coeffs_ = std::move(coeffs);
  return s;
}

FormalSeries FormalSeries::from_real_coeffs(std::span<const double> values) {
  FormalSeries s(static_cast<int>(values.size()), 1);
  for (std::size_t p = 0; p < values.size(); ++p) s.coeffs_[p] = lc_from_real(values[p]);
  return s;
}

const LogComplex& FormalSeries::at(int p, int j) const {
  if (p < 0 || p >= order_ || j < 0 || j >= dim_) throw std::out_of_range("FormalSeries::at");
  return coeffs_[static_cast<std::size_t>(p) * dim_ + j];
}

void FormalSeries::set(int p, const LogComplex& c, int j) {
  if (p < 0 || p >= order_ || j < 0 || j >= dim_) throw std::out_of_range("FormalSeries::set");
  coeffs_[static_cast<std::size_t>(p) * dim_ + j] = c;
}

double FormalSeries::coeff_norm_log(int p) const {
  if (dim_ == 1) return at(p).log_mag;
  double peak = -std::numeric_limits<double>::infinity();
  for (int j = 0; j < dim_; ++j) peak = std::max(peak, at(p, j).log_mag);
  if (std::isinf(peak)) return peak;
  double acc = 0.0;
  for (int j = 0; j < dim_; ++j) {
    const double lm = at(p, j).log_mag;
    if (!std::isinf(lm)) acc += std::exp(2.0 * (lm - peak));
  }
  return peak + 0.5 * std::log(acc);
}

FormalSeries qborel(const FormalSeries& u, const QBase& base, double s) {
  FormalSeries out(u.order(), u.dim());
  const double lnq = base.log_q();
  for (int p = 0; p < u.order(); ++p) {
    const double shift = -s * lnq * (static_cast<double>(p) * (p - 1.0) / 2.0);
    for (int j = 0; j < u.dim(); ++j) out.set(p, lc_scale_log(u.at(p, j), shift), j);
  }
  return out;
}

FormalSeries mborel(const FormalSeries& u, const PositiveSequence& m) {
  if (m.size() < u.order())
    throw std::invalid_argument("mborel: sequence shorter than series order");
  FormalSeries out(u.order(), u.dim());
  for (int p = 0; p < u.order(); ++p)
    for (int j = 0; j < u.dim(); ++j) out.set(p, lc_scale_log(u.at(p, j), -m.log_at(p)), j);
  return out;
}

FormalSeries moment_derivative(const FormalSeries& u, const PositiveSequence& m) {
  if (u.order() < 1) throw std::invalid_argument("moment_derivative: empty series");
  if (m.size() < u.order())
    throw std::invalid_argument("moment_derivative: sequence shorter than series order");
  FormalSeries out(u.order() - 1, u.dim());
  for (int p = 0; p + 1 < u.order(); ++p) {
    const double shift = m.log_at(p + 1) - m.log_at(p);
    for (int j = 0; j < u.dim(); ++j) out.set(p, lc_scale_log(u.at(p + 1, j), shift), j);
  }
  return out;
}

FormalSeries series_add(const FormalSeries& u, const FormalSeries& v) {
  if (u.dim() != v.dim()) throw std::invalid_argument("series_add: dim mismatch");
  const int order = std::min(u.order(), v.order());
  FormalSeries out(order, u.dim());
  for (int p = 0; p < order; ++p)
    for (int j = 0; j < u.dim(); ++j) out.set(p, lc_add(u.at(p, j), v.at(p, j)), j);
  return out;
}

FormalSeries series_mul(const FormalSeries& u, const FormalSeries& v) {
  if (u.dim() != 1 || v.dim() != 1)
    throw std::invalid_argument("series_mul: defined for dim-1 series");
  const int order = std::min(u.order(), v.order());
  FormalSeries out(order, 1);
  std::vector<LogComplex> terms;
  for (int p = 0; p < order; ++p) {
    terms.clear();
    for (int k = 0; k <= p; ++k) terms.push_back(lc_mul(u.at(k), v.at(p - k)));
    std::sort(terms.begin(), terms.end(),
              [](const LogComplex& a, const LogComplex& b) { return a.log_mag > b.log_mag; });
    LogComplex acc = lc_zero();
    for (const LogComplex& t : terms) acc = lc_add(acc, t);
    out.set(p, acc);
  }
  return out;
}

FormalSeries formal_derivative(const FormalSeries& u) {
  if (u.order() < 1) throw std::invalid_argument("formal_derivative: empty series");
  FormalSeries out(u.order() - 1, u.dim());
  for (int p = 0; p + 1 < u.order(); ++p)
    for (int j = 0; j < u.dim(); ++j) out.set(p, lc_scale_log(u.at(p + 1, j), std::log(p + 1.0)), j);
  return out;
}

std::vector<LogComplex> eval_partial(const FormalSeries& u, const LogComplex& z, int N) {
  if (N < 0 || N >= u.order()) throw std::invalid_argument("eval_partial: N must satisfy 0 <= N < order");
  std::vector<LogComplex> out(u.dim());
  std::vector<LogComplex> terms;
  terms.reserve(N + 1);
  for (int j = 0; j < u.dim(); ++j) {
    terms.clear();
    for (int p = 0; p <= N; ++p) terms.push_back(lc_mul(u.at(p, j), lc_pow_int(z, p)));
    std::sort(terms.begin(), terms.end(),
              [](const LogComplex& a, const LogComplex& b) { return a.log_mag > b.log_mag; });
    LogComplex acc = lc_zero();
    for (const LogComplex& t : terms) acc = lc_add(acc, t);
    out[j] = acc;
  }
  return out;
}

LogComplex eval_partial_scalar(const FormalSeries& u, const LogComplex& z, int N) {
  if (u.dim() != 1) throw std::invalid_argument("eval_partial_scalar: series must have dim 1");
  return eval_partial(u, z, N)[0];
}

}  // namespace qgevrey
