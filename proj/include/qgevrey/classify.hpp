#pragma once

#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "qgevrey/continuation.hpp"
#include "qgevrey/growth.hpp"
#include "qgevrey/sequence.hpp"

namespace qgevrey {

// One side of the preservation criterion: the continuation found for
// B_{m,t}(sum t^p) or B_{m^-1,t}(sum t^p) and its growth verdicts.
struct BranchVerdict {
  bool convergent = false;           // positive radius of convergence
  std::string continuation;          // name of the matched closed form, or "pade"
  CertificateMode mode = CertificateMode::kHeuristic;
  bool growth_ok = false;            // growth check passed for every probed order
  std::vector<double> probed_s;
  std::vector<double> fitted_alpha;  // per probed order
};

struct ClassifyOptions {
  int prefix = 301;
  double tol_s = 1e-3;
  double residual_cap = 0.5;
  double alpha_cap = 2.0;
  std::vector<double> probe_s{0.5, 1.0, 2.0};
  int pade_num = 8;
  int pade_den = 8;
};

// Full verdict report of the sequence classifiers.
struct ClassifyReport {
  std::string sequence_name;
  double q = 0.0;
  GrowthFit fit;                      // free fit of log m_p
  double q_gevrey_order_value = 0.0;
  bool preserves_q_gevrey_order = false;
  bool preserves_q_and_gevrey_orders = false;
  bool preserves_q_gevrey_asymptotics = false;
  CertificateMode asymptotics_mode = CertificateMode::kHeuristic;
  std::optional<bool> preserves_summability;  // implied by the asymptotics verdict only
  BranchVerdict direct;                       // B_{m,t}(sum t^p)
  BranchVerdict reciprocal;                   // B_{m^-1,t}(sum t^p)
};

// Desk-scale estimate of whether sum m_p t^p has a positive radius of
// convergence: superexponential coefficient growth is detected from the
// drift of the incremental slope of log m_p.
bool has_positive_radius(const PositiveSequence& seq);

// Match sum m_p t^p against the registered closed forms (scaled geometric,
// q-exponential, residue series, central binomial pair) by comparing
// coefficient prefixes to relative 1e-8; nullopt when nothing matches.
std::optional<ContinuableFunction> match_closed_form(const PositiveSequence& seq, const QBase& base);

// The full classifier: growth fits, order predicates, and the preservation
// criterion (both moment-Borel test series must continue with q-exponential
// growth for every probed order).
ClassifyReport classify(const PositiveSequence& seq, const QBase& base, ClassifyOptions opts = {});

}  // namespace qgevrey
