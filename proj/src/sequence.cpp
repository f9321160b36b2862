#include "qgevrey/sequence.hpp"

#include <cmath>
#include <stdexcept>

namespace qgevrey {

PositiveSequence::PositiveSequence(std::string name, std::vector<double> log_values,
                                   std::optional<std::string> generator)
    : name_(std::move(name)), log_values_(std::move(log_values)), generator_(std::move(generator)) {
  if (log_values_.empty()) throw std::invalid_argument("PositiveSequence: needs at least one term");
  if (log_values_.front() != 0.0)
    throw std::invalid_argument("PositiveSequence: m_0 must be 1 (log_values[0] == 0)");
  for (double v : log_values_)
    if (!std::isfinite(v)) throw std::invalid_argument("PositiveSequence: log values must be finite");
}

PositiveSequence PositiveSequence::reciprocal() const {
  std::vector<double> neg(log_values_.size());
  for (std::size_t i = 0; i < neg.size(); ++i) neg[i] = -log_values_[i];
  return PositiveSequence(name_ + "_inv", std::move(neg));
}

PositiveSequence make_custom_from_values(std::string name, std::span<const double> values) {
  std::vector<double> logs;
  logs.reserve(values.size());
  for (double v : values) {
    if (!(v > 0.0)) throw std::invalid_argument("make_custom_from_values: entries must be positive");
    logs.push_back(std::log(v));
  }
  if (!logs.empty()) logs[0] = 0.0;  // cancel rounding of log(1)
  return PositiveSequence(std::move(name), std::move(logs));
}

PositiveSequence make_q_factorial_inv(const QBase& base, int count) {
  if (base.q <= 1.0) throw std::invalid_argument("make_q_factorial_inv: requires q > 1");
  // Same accumulation as q_factorial_log(p, 1/q) so prefixes built here and
  // Taylor coefficients built there agree bit-for-bit.
  const QBase inv_base(1.0 / base.q);
  const double lnq = inv_base.log_q();
  const double lden = std::log1p(-inv_base.q);
  std::vector<double> logs(count);
  double acc = 0.0;
  for (int p = 1; p < count; ++p) {
    acc += std::log1p(-std::exp(p * lnq)) - lden;  // log [p]_{1/q}
    logs[p] = acc;
  }
  return PositiveSequence("q_factorial_inv", std::move(logs), "q_factorial_inv");
}

PositiveSequence make_factorial_pow(double s, int count) {
  std::vector<double> logs(count);
  for (int p = 0; p < count; ++p) logs[p] = s * std::lgamma(p + 1.0);
  logs[0] = 0.0;
  return PositiveSequence("factorial_pow", std::move(logs), "factorial_pow");
}

PositiveSequence make_geometric(double A, int count) {
  if (!(A > 0.0)) throw std::invalid_argument("make_geometric: A must be positive");
  std::vector<double> logs(count);
  for (int p = 0; p < count; ++p) logs[p] = p * std::log(A);
  return PositiveSequence("geometric", std::move(logs), "geometric");
}

PositiveSequence make_central_binomial(int count) {
  std::vector<double> logs(count);
  for (int p = 0; p < count; ++p)
    logs[p] = std::lgamma(2.0 * p + 1.0) - 2.0 * std::lgamma(p + 1.0);
  logs[0] = 0.0;
  return PositiveSequence("central_binomial", std::move(logs), "central_binomial");
}

PositiveSequence make_q_gevrey(const QBase& base, double s, int count) {
  std::vector<double> logs(count);
  for (int p = 0; p < count; ++p)
    logs[p] = s * base.log_q() * (static_cast<double>(p) * (p - 1.0) / 2.0);
  return PositiveSequence("q_gevrey", std::move(logs), "q_gevrey");
}

PositiveSequence make_generated(const std::string& tag, const QBase& base,
                                std::optional<double> param, int count) {
  if (count < 1) throw std::invalid_argument("make_generated: count must be >= 1");
  if (tag == "q_factorial_inv") return make_q_factorial_inv(base, count);
  if (tag == "factorial_pow") {
    if (!param) throw std::invalid_argument("make_generated: factorial_pow needs a parameter s");
    return make_factorial_pow(*param, count);
  }
  if (tag == "geometric") {
    if (!param) throw std::invalid_argument("make_generated: geometric needs a parameter A");
    return make_geometric(*param, count);
  }
  if (tag == "central_binomial") return make_central_binomial(count);
  if (tag == "q_gevrey") {
    if (!param) throw std::invalid_argument("make_generated: q_gevrey needs a parameter s");
    return make_q_gevrey(base, *param, count);
  }
  throw std::invalid_argument("make_generated: unknown generator '" + tag + "'");
}

}  // namespace qgevrey
