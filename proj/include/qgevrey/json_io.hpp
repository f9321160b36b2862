#pragma once

#include <nlohmann/json_fwd.hpp>

#include <string>

#include "qgevrey/classify.hpp"
#include "qgevrey/continuation.hpp"
#include "qgevrey/formal_series.hpp"
#include "qgevrey/growth.hpp"
#include "qgevrey/log_complex.hpp"
#include "qgevrey/qlaplace.hpp"
#include "qgevrey/sequence.hpp"

namespace qgevrey {

// Tolerances and sampling defaults shared by the CLI commands. Every report
// embeds the configuration it ran with.
struct Config {
  double tol = 1e-10;           // quadrature / evaluation relative tolerance
  double residual_cap = 0.5;    // desk-scale membership cap (log units)
  double tol_s = 1e-3;          // |s| threshold for order-0 verdicts
  double delta = 0.05;          // ray clearance
  double alpha_cap = 2.0;       // growth-certificate exponent cap
  double logA_cap = 5.0;        // asymptotic-verdict cap
  double sector_half_opening = 0.8 * 3.14159265358979323846;
  int prefix = 301;             // generated-sequence length
};

Config config_from_json(const nlohmann::json& j);
nlohmann::json config_to_json(const Config& c);

// Resolution order: built-in defaults, then the file named by QGEVREY_CONFIG,
// then an explicit path (empty = skip).
Config load_config(const std::string& explicit_path);

nlohmann::json lc_to_json(const LogComplex& v);
LogComplex lc_from_json(const nlohmann::json& j);

nlohmann::json series_to_json(const FormalSeries& u);
FormalSeries series_from_json(const nlohmann::json& j);

nlohmann::json sequence_to_json(const PositiveSequence& seq, double q);
PositiveSequence sequence_from_json(const nlohmann::json& j);
double sequence_q_from_json(const nlohmann::json& j);

nlohmann::json growth_fit_to_json(const GrowthFit& fit);
nlohmann::json classify_report_to_json(const ClassifyReport& report);
nlohmann::json asymptotic_verdict_to_json(const AsymptoticVerdict& v);
nlohmann::json certificate_to_json(const GrowthCertificate& c);
nlohmann::json quad_info_to_json(const QuadratureInfo& q);

std::string sectorial_to_csv(const SectorialFunction& f);
std::vector<SamplePoint> samples_from_csv(const std::string& text);

nlohmann::json load_json_file(const std::string& path);
void write_text_file(const std::string& path, const std::string& text);

}  // namespace qgevrey
