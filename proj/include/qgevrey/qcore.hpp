#pragma once

#include <stdexcept>

#include "qgevrey/log_complex.hpp"

namespace qgevrey {

// Base of the q-calculus. q > 0 and q != 1; operations that rely on the
// paper's normalization additionally require q > 1 and say so.
struct QBase {
  double q;

  explicit QBase(double q_) : q(q_) {
    if (!(q > 0.0) || q == 1.0) throw std::invalid_argument("QBase: q must be positive and != 1");
  }

  double log_q() const { return std::log(q); }
};

// [lambda]_q = (q^lambda - 1) / (q - 1)
double q_number(double lambda, const QBase& base);

// log of [n]_q! = [1]_q [2]_q ... [n]_q, with [0]_q! = 1.
double q_factorial_log(int n, const QBase& base);

// Finite q-shift factorial (a; 1/q)_n = prod_{p=0}^{n-1} (1 - a / q^p), q > 1.
// An exact hit a = q^p (0 <= p < n) yields canonical zero.
LogComplex q_pochhammer(const LogComplex& a, const QBase& base, int n);

struct QPochhammerInf {
  LogComplex value;
  int terms;  // truncation index chosen from the geometric tail bound
};

// Infinite product (a; 1/q)_inf, truncated so the relative error is < tol.
QPochhammerInf q_pochhammer_inf(const LogComplex& a, const QBase& base, double tol);

// | [n]_q! (q-1)^n / q^{n(n+1)/2}  -  (1/q; 1/q)_inf |  for q > 1, n >= 1.
double q_factorial_limit_residual(int n, const QBase& base);

}  // namespace qgevrey
