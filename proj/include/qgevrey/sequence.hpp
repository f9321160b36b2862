#pragma once

#include <optional>
#include <span>
#include <string>
#include <vector>

#include "qgevrey/qcore.hpp"

namespace qgevrey {

// A positive real sequence m = (m_p), normalized to m_0 = 1, stored through
// the logs of its values. Positivity is inherent to the representation;
// factories that accept raw values reject non-positive entries.
class PositiveSequence {
 public:
  PositiveSequence(std::string name, std::vector<double> log_values,
                   std::optional<std::string> generator = std::nullopt);

  const std::string& name() const { return name_; }
  const std::optional<std::string>& generator() const { return generator_; }
  std::span<const double> log_values() const { return log_values_; }
  int size() const { return static_cast<int>(log_values_.size()); }
  double log_at(int p) const { return log_values_.at(p); }

  // Termwise reciprocal m^{-1} (logs negated; still normalized).
  PositiveSequence reciprocal() const;

 private:
  std::string name_;
  std::vector<double> log_values_;
  std::optional<std::string> generator_;
};

PositiveSequence make_custom_from_values(std::string name, std::span<const double> values);

// m_p = [p]_{1/q}!  (q > 1)
PositiveSequence make_q_factorial_inv(const QBase& base, int count);

// m_p = p!^s
PositiveSequence make_factorial_pow(double s, int count);

// m_p = A^p  (A > 0)
PositiveSequence make_geometric(double A, int count);

// m_p = (2p)! / p!^2
PositiveSequence make_central_binomial(int count);

// m_p = q^{s p(p-1)/2}
PositiveSequence make_q_gevrey(const QBase& base, double s, int count);

// Resolve a generator tag ("q_factorial_inv", "factorial_pow", "geometric",
// "central_binomial", "q_gevrey") with its numeric parameter where one is
// required. Unknown tags raise std::invalid_argument.
PositiveSequence make_generated(const std::string& tag, const QBase& base,
                                std::optional<double> param, int count);

}  // namespace qgevrey
