#include "qgevrey/json_io.hpp"

#include <nlohmann/json.hpp>

#include <cstdlib>
#include <fstream>
#include <sstream>

namespace qgevrey {

using nlohmann::json;

Config config_from_json(const json& j) {
  Config c;
  c.tol = j.value("tol", c.tol);
  c.residual_cap = j.value("residual_cap", c.residual_cap);
  c.tol_s = j.value("tol_s", c.tol_s);
  c.delta = j.value("delta", c.delta);
  c.alpha_cap = j.value("alpha_cap", c.alpha_cap);
  c.logA_cap = j.value("logA_cap", c.logA_cap);
  c.sector_half_opening = j.value("sector_half_opening", c.sector_half_opening);
  c.prefix = j.value("prefix", c.prefix);
  if (!(c.tol > 0.0) || !(c.residual_cap > 0.0) || !(c.tol_s > 0.0) || !(c.delta > 0.0))
    throw std::invalid_argument("config: tolerances must be positive");
  return c;
}

json config_to_json(const Config& c) {
  return json{{"tol", c.tol},
              {"residual_cap", c.residual_cap},
              {"tol_s", c.tol_s},
              {"delta", c.delta},
              {"alpha_cap", c.alpha_cap},
              {"logA_cap", c.logA_cap},
              {"sector_half_opening", c.sector_half_opening},
              {"prefix", c.prefix}};
}

Config load_config(const std::string& explicit_path) {
  std::string path = explicit_path;
  if (path.empty()) {
    if (const char* env = std::getenv("QGEVREY_CONFIG")) path = env;
  }
  if (path.empty()) return Config{};
  return config_from_json(load_json_file(path));
}

json lc_to_json(const LogComplex& v) {
  if (lc_is_zero(v)) return json{{"log_mag", "-inf"}, {"phase", 0.0}};
  return json{{"log_mag", v.log_mag}, {"phase", v.phase}};
}

LogComplex lc_from_json(const json& j) {
  const json& lm = j.at("log_mag");
  if (lm.is_string()) {
    if (lm.get<std::string>() != "-inf")
      throw std::invalid_argument("LogComplex: log_mag string must be \"-inf\"");
    return lc_zero();
  }
  return lc_make(lm.get<double>(), j.at("phase").get<double>());
}

json series_to_json(const FormalSeries& u) {
  json coeffs = json::array();
  for (int p = 0; p < u.order(); ++p) {
    json entry = json::array();
    for (int j = 0; j < u.dim(); ++j) entry.push_back(lc_to_json(u.at(p, j)));
    coeffs.push_back(std::move(entry));
  }
  return json{{"dim", u.dim()}, {"order", u.order()}, {"coeffs", std::move(coeffs)}};
}

FormalSeries series_from_json(const json& j) {
  const int dim = j.at("dim").get<int>();
  const int order = j.at("order").get<int>();
  const json& coeffs = j.at("coeffs");
  if (static_cast<int>(coeffs.size()) != order)
    throw std::invalid_argument("series: coeffs length must equal order");
  FormalSeries u(order, dim);
  for (int p = 0; p < order; ++p) {
    const json& entry = coeffs.at(p);
    if (static_cast<int>(entry.size()) != dim)
      throw std::invalid_argument("series: coefficient entry size must equal dim");
    for (int d = 0; d < dim; ++d) u.set(p, lc_from_json(entry.at(d)), d);
  }
  return u;
}

json sequence_to_json(const PositiveSequence& seq, double q) {
  json gen;
  if (seq.generator()) gen = *seq.generator();
  return json{{"name", seq.name()},
              {"q", q},
              {"generator", std::move(gen)},
              {"log_values", std::vector<double>(seq.log_values().begin(), seq.log_values().end())}};
}

PositiveSequence sequence_from_json(const json& j) {
  std::optional<std::string> gen;
  if (j.contains("generator") && j.at("generator").is_string())
    gen = j.at("generator").get<std::string>();
  return PositiveSequence(j.at("name").get<std::string>(),
                          j.at("log_values").get<std::vector<double>>(), std::move(gen));
}

double sequence_q_from_json(const json& j) { return j.at("q").get<double>(); }

json growth_fit_to_json(const GrowthFit& fit) {
  return json{{"logA", fit.logA},
              {"logB", fit.logB},
              {"alpha", fit.alpha},
              {"s", fit.s},
              {"max_residual", fit.max_residual},
              {"fit_window", {fit.window_lo, fit.window_hi}},
              {"residual_quantiles", fit.residual_quantiles}};
}

namespace {

json branch_to_json(const BranchVerdict& b) {
  return json{{"convergent", b.convergent},
              {"continuation", b.continuation},
              {"mode", b.mode == CertificateMode::kRigorous ? "RIGOROUS" : "HEURISTIC"},
              {"growth_ok", b.growth_ok},
              {"probed_s", b.probed_s},
              {"fitted_alpha", b.fitted_alpha}};
}

}  // namespace

json classify_report_to_json(const ClassifyReport& report) {
  json j{{"sequence", report.sequence_name},
         {"q", report.q},
         {"growth_fit", growth_fit_to_json(report.fit)},
         {"q_gevrey_order", report.q_gevrey_order_value},
         {"preserves_q_gevrey_order", report.preserves_q_gevrey_order},
         {"preserves_q_and_gevrey_orders", report.preserves_q_and_gevrey_orders},
         {"preserves_q_gevrey_asymptotics", report.preserves_q_gevrey_asymptotics},
         {"asymptotics_mode",
          report.asymptotics_mode == CertificateMode::kRigorous ? "RIGOROUS" : "HEURISTIC"},
         {"direct_branch", branch_to_json(report.direct)},
         {"reciprocal_branch", branch_to_json(report.reciprocal)}};
  if (report.preserves_summability)
    j["preserves_summability"] = *report.preserves_summability;
  else
    j["preserves_summability"] = nullptr;
  return j;
}

json asymptotic_verdict_to_json(const AsymptoticVerdict& v) {
  return json{{"logC", v.logC},
              {"logA", v.logA},
              {"C", std::isfinite(v.logC) ? std::exp(v.logC) : 0.0},
              {"A", std::isfinite(v.logA) ? std::exp(v.logA) : 0.0},
              {"pass", v.pass},
              {"worst_index", v.worst_index},
              {"worst_N", v.worst_N},
              {"worst_point", {{"log_mag", v.worst_point.log_mag}, {"arg", v.worst_point.arg}}}};
}

json certificate_to_json(const GrowthCertificate& c) {
  return json{{"C", c.C},
              {"h", c.h},
              {"alpha", c.alpha},
              {"order_s", c.order_s},
              {"mode", c.mode == CertificateMode::kRigorous ? "RIGOROUS" : "HEURISTIC"}};
}

json quad_info_to_json(const QuadratureInfo& q) {
  return json{{"window", {q.window_lo, q.window_hi}},
              {"nodes", q.nodes},
              {"refinements", q.refinements},
              {"extensions", q.extensions},
              {"shifted_nodes", q.shifted_nodes}};
}

std::string sectorial_to_csv(const SectorialFunction& f) {
  std::ostringstream out;
  out.precision(17);
  out << "abs_z,arg_z,re,im,quad_nodes\n";
  for (const SamplePoint& s : f.samples) {
    const std::complex<double> v = lc_to_complex(s.value);
    out << std::exp(s.z.log_mag) << ',' << s.z.arg << ',' << v.real() << ',' << v.imag() << ','
        << s.quad.nodes << '\n';
  }
  return out.str();
}

std::vector<SamplePoint> samples_from_csv(const std::string& text) {
  std::vector<SamplePoint> out;
  std::istringstream in(text);
  std::string line;
  bool first = true;
  while (std::getline(in, line)) {
    if (line.empty()) continue;
    if (first) {  // header
      first = false;
      continue;
    }
    std::istringstream ls(line);
    double r, arg, re, im;
    char comma;
    if (!(ls >> r >> comma >> arg >> comma >> re >> comma >> im))
      throw std::invalid_argument("samples csv: malformed row '" + line + "'");
    SamplePoint p;
    p.z = SurfacePoint{std::log(r), arg};
    p.value = lc_from_complex({re, im});
    out.push_back(p);
  }
  return out;
}

json load_json_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw std::invalid_argument("cannot open file: " + path);
  json j;
  in >> j;
  return j;
}

void write_text_file(const std::string& path, const std::string& text) {
  std::ofstream out(path);
  if (!out) throw std::invalid_argument("cannot open file for writing: " + path);
  out << text;
}

}  // namespace qgevrey
