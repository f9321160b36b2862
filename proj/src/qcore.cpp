#include "qgevrey/qcore.hpp"

#include <algorithm>
#include <cmath>

namespace qgevrey {

namespace {

// log(e^x - 1) for x > 0 without overflow.
double log_expm1(double x) { return x + std::log1p(-std::exp(-x)); }

}  // namespace

double q_number(double lambda, const QBase& base) {
  return std::expm1(lambda * base.log_q()) / (base.q - 1.0);
}

double q_factorial_log(int n, const QBase& base) {
  if (n < 0) throw std::invalid_argument("q_factorial_log: n must be >= 0");
  const double lnq = base.log_q();
  double acc = 0.0;
  if (base.q > 1.0) {
    // log [k]_q = log(q^k - 1) - log(q - 1)
    const double lden = std::log(base.q - 1.0);
    for (int k = 1; k <= n; ++k) acc += log_expm1(k * lnq) - lden;
  } else {
    // log [k]_q = log(1 - q^k) - log(1 - q)
    const double lden = std::log1p(-base.q);
    for (int k = 1; k <= n; ++k) acc += std::log1p(-std::exp(k * lnq)) - lden;
  }
  return acc;
}

LogComplex q_pochhammer(const LogComplex& a, const QBase& base, int n) {
  if (base.q <= 1.0) throw std::invalid_argument("q_pochhammer: requires q > 1");
  if (n < 0) throw std::invalid_argument("q_pochhammer: n must be >= 0");
  const double lnq = base.log_q();
  LogComplex acc = lc_one();
  for (int p = 0; p < n; ++p) {
    const LogComplex factor = lc_sub(lc_one(), lc_scale_log(a, -p * lnq));
    if (lc_is_zero(factor)) return lc_zero();
    acc = lc_mul(acc, factor);
  }
  return acc;
}

QPochhammerInf q_pochhammer_inf(const LogComplex& a, const QBase& base, double tol) {
  if (base.q <= 1.0) throw std::invalid_argument("q_pochhammer_inf: requires q > 1");
  if (!(tol > 0.0)) throw std::invalid_argument("q_pochhammer_inf: tol must be positive");
  const double lnq = base.log_q();
  // Tail of the log-product: sum_{p>P} |log(1 - a/q^p)| <= 2 |a| q^-(P+1) / (1 - 1/q)
  // once |a| q^-p <= 1/2. Choose P so the bound is below tol/2.
  int P = 0;
  if (!lc_is_zero(a)) {
    const double la = a.log_mag;
    const double need_small = (la + std::log(2.0)) / lnq;               // |a| q^-p <= 1/2
    const double lgeom = std::log1p(-1.0 / base.q);                     // log(1 - 1/q)
    const double need_tol = (la + std::log(4.0) - lgeom - std::log(tol)) / lnq;
    P = static_cast<int>(std::ceil(std::max(need_small, need_tol))) + 1;
    P = std::clamp(P, 1, 2000000);
  }
  return QPochhammerInf{q_pochhammer(a, base, P), P};
}

double q_factorial_limit_residual(int n, const QBase& base) {
  if (base.q <= 1.0) throw std::invalid_argument("q_factorial_limit_residual: requires q > 1");
  if (n < 1) throw std::invalid_argument("q_factorial_limit_residual: n must be >= 1");
  const double lnq = base.log_q();
  const double log_ratio = q_factorial_log(n, base) + n * std::log(base.q - 1.0) -
                           lnq * (static_cast<double>(n) * (n + 1.0) / 2.0);
  const double ratio = std::exp(log_ratio);
  const LogComplex inv_q = lc_from_real(1.0 / base.q);
  const double limit = std::exp(q_pochhammer_inf(inv_q, base, 1e-15).value.log_mag);
  return std::abs(ratio - limit);
}

}  // namespace qgevrey
