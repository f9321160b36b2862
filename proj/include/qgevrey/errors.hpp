#pragma once

#include <stdexcept>
#include <string>

namespace qgevrey {

// Requested point lies on (or too close to) an evaluator's excluded set:
// a pole, a branch cut, or the theta zero spiral.
class pole_error : public std::domain_error {
 public:
  using std::domain_error::domain_error;
};

// Quadrature refinement did not converge, or a node row was unusable.
class quadrature_error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// A growth certificate does not cover the requested q-exponential order.
class growth_error : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

}  // namespace qgevrey
