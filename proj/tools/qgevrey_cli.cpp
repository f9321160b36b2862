#include <CLI11.hpp>
#include <nlohmann/json.hpp>

#include <fstream>
#include <iostream>
#include <numbers>
#include <optional>
#include <sstream>
#include <string>

#include "qgevrey/classify.hpp"
#include "qgevrey/continuation.hpp"
#include "qgevrey/errors.hpp"
#include "qgevrey/json_io.hpp"
#include "qgevrey/qlaplace.hpp"
#include "qgevrey/theta.hpp"
#include "qgevrey/verify.hpp"

using nlohmann::json;
using namespace qgevrey;

// Exit codes: 0 pass, 1 verdict-fail, 2 input error, 3 numerical failure.
namespace {

constexpr int kExitPass = 0;
constexpr int kExitVerdictFail = 1;
constexpr int kExitInputError = 2;
constexpr int kExitNumericalFailure = 3;

struct CommonOpts {
  std::string config_path;
  Config config;
};

void emit(const json& j) { std::cout << j.dump(2) << std::endl; }

ContinuableFunction resolve_kind(const std::string& kind, double q, int which,
                                 const std::optional<std::string>& series_path,
                                 int pade_num, int pade_den) {
  if (kind == "geometric") return geometric();
  if (kind == "qexp") return q_exponential(QBase(q));
  if (kind == "qfact") return q_factorial_series(QBase(q));
  if (kind == "cbinom") {
    auto pair = central_binomial_pair();
    return which == 2 ? std::move(pair.second) : std::move(pair.first);
  }
  if (kind == "pade") {
    if (!series_path) throw std::invalid_argument("pade kind needs --series");
    const FormalSeries u = series_from_json(load_json_file(*series_path));
    return pade_continue(u, pade_num, pade_den);
  }
  throw std::invalid_argument("unknown kind '" + kind + "'");
}

int cmd_theta(double q, double s, double z_re, double z_im, const std::string& method,
              const CommonOpts& common) {
  const ThetaParams params(q, s, common.config.tol);
  const LogComplex z = lc_from_complex({z_re, z_im});
  const ThetaMethod m = method == "product" ? ThetaMethod::kProduct : ThetaMethod::kSeries;
  const ThetaValue value = theta_eval(z, params, m);
  emit(json{{"value", lc_to_json(value.value)},
            {"flagged_zero", value.flagged_zero},
            {"terms", value.terms},
            {"clearance", spiral_clearance(z, params)},
            {"config", config_to_json(common.config)}});
  return kExitPass;
}

int cmd_borel(const std::string& in_path, const std::string& out_path, double q, double s,
              const std::string& mode, const std::optional<std::string>& seq_path, bool inverse,
              const CommonOpts& common) {
  const FormalSeries u = series_from_json(load_json_file(in_path));
  FormalSeries result(0, 1);
  if (mode == "qborel") {
    result = qborel(u, QBase(q), inverse ? -s : s);
  } else if (mode == "mborel") {
    if (!seq_path) throw std::invalid_argument("mborel needs --sequence");
    PositiveSequence m = sequence_from_json(load_json_file(*seq_path));
    if (inverse) m = m.reciprocal();
    result = mborel(u, m);
  } else {
    throw std::invalid_argument("borel mode must be qborel or mborel");
  }
  write_text_file(out_path, series_to_json(result).dump(2) + "\n");
  emit(json{{"written", out_path},
            {"order", result.order()},
            {"config", config_to_json(common.config)}});
  return kExitPass;
}

int cmd_continue(const std::string& kind, double q, double z_logmag, double z_arg,
                 const std::optional<std::string>& series_path, int pade_num, int pade_den,
                 const CommonOpts& common) {
  const SurfacePoint z{z_logmag, z_arg};
  json out;
  if (kind == "cbinom") {
    auto pair = central_binomial_pair();
    out["first"] = json{{"value", lc_to_json(pair.first.eval(z))},
                        {"certificate", certificate_to_json(pair.first.certificate())}};
    out["second"] = json{{"value", lc_to_json(pair.second.eval(z))},
                         {"certificate", certificate_to_json(pair.second.certificate())}};
  } else {
    const ContinuableFunction f = resolve_kind(kind, q, 1, series_path, pade_num, pade_den);
    out["value"] = lc_to_json(f.eval(z));
    out["certificate"] = certificate_to_json(f.certificate());
    out["clearance"] = f.excluded_clearance(z);
  }
  out["config"] = config_to_json(common.config);
  emit(out);
  return kExitPass;
}

int cmd_laplace(const std::string& kind, double q, double s, double gamma, double z_logmag,
                double z_arg, const std::optional<std::string>& series_path, int pade_num,
                int pade_den, int which, const CommonOpts& common) {
  const ContinuableFunction f = resolve_kind(kind, q, which, series_path, pade_num, pade_den);
  const RayDomain dom(gamma, common.config.delta, q, s);
  const LaplaceResult r = q_laplace(f, dom, SurfacePoint{z_logmag, z_arg}, common.config.tol);
  emit(json{{"value", lc_to_json(r.value)},
            {"quadrature", quad_info_to_json(r.quad)},
            {"config", config_to_json(common.config)}});
  return kExitPass;
}

int cmd_qsum(const std::string& series_path, double q, double s, double gamma,
             const std::string& strategy, const std::string& grid_spec,
             const std::string& csv_path, int pade_num, int pade_den, bool serial,
             const CommonOpts& common) {
  const FormalSeries u = series_from_json(load_json_file(series_path));
  const QBase base(q);

  SectorGrid grid;
  grid.half_opening = common.config.sector_half_opening;
  if (!grid_spec.empty()) {
    // rmin:rmax:nr:half_opening:narg
    double rmin, rmax, half;
    int nr, narg;
    if (std::sscanf(grid_spec.c_str(), "%lf:%lf:%d:%lf:%d", &rmin, &rmax, &nr, &half, &narg) != 5)
      throw std::invalid_argument("grid spec must be rmin:rmax:nr:half_opening:narg");
    grid = SectorGrid{rmin, rmax, nr, half, narg};
  }

  std::optional<ContinuableFunction> g;
  if (strategy == "pade") {
    g = pade_continue(qborel(u, base, s), pade_num, pade_den);
  } else {
    g = resolve_kind(strategy, q, 1, std::nullopt, pade_num, pade_den);
  }

  const SectorialFunction sampled = q_sum(u, base, s, gamma, *g, grid, common.config.tol,
                                          !serial, common.config.delta);
  write_text_file(csv_path, sectorial_to_csv(sampled));

  const int n_max = std::min(u.order() - 1, 12);
  const AsymptoticVerdict verdict =
      asymptotic_check(sampled.samples, u, base, s, n_max, common.config.logA_cap);
  emit(json{{"csv", csv_path},
            {"samples", sampled.samples.size()},
            {"verdict", asymptotic_verdict_to_json(verdict)},
            {"config", config_to_json(common.config)}});
  return verdict.pass ? kExitPass : kExitVerdictFail;
}

int cmd_classify(const std::optional<std::string>& seq_path,
                 const std::optional<std::string>& generator, std::optional<double> param,
                 double q, const CommonOpts& common) {
  ClassifyOptions opts;
  opts.prefix = common.config.prefix;
  opts.tol_s = common.config.tol_s;
  opts.residual_cap = common.config.residual_cap;
  opts.alpha_cap = common.config.alpha_cap;

  std::optional<PositiveSequence> seq;
  double q_eff = q;
  if (seq_path) {
    const json j = load_json_file(*seq_path);
    seq = sequence_from_json(j);
    q_eff = sequence_q_from_json(j);
  } else if (generator) {
    seq = make_generated(*generator, QBase(q_eff), param, opts.prefix);
  } else {
    throw std::invalid_argument("classify needs --sequence or --generator");
  }

  const ClassifyReport report = classify(*seq, QBase(q_eff), opts);
  json out = classify_report_to_json(report);
  out["config"] = config_to_json(common.config);
  emit(out);
  return report.preserves_q_gevrey_asymptotics ? kExitPass : kExitVerdictFail;
}

int cmd_asympt(const std::string& samples_path, const std::string& coeffs_path, double q, double s,
               int n_max, const CommonOpts& common) {
  std::ifstream in(samples_path);
  if (!in) throw std::invalid_argument("cannot open file: " + samples_path);
  std::stringstream buf;
  buf << in.rdbuf();
  const std::vector<SamplePoint> samples = samples_from_csv(buf.str());
  const FormalSeries coeffs = series_from_json(load_json_file(coeffs_path));
  const int nm = n_max > 0 ? n_max : std::min(coeffs.order() - 1, 12);
  const AsymptoticVerdict verdict =
      asymptotic_check(samples, coeffs, QBase(q), s, nm, common.config.logA_cap);
  json out = asymptotic_verdict_to_json(verdict);
  out["config"] = config_to_json(common.config);
  emit(out);
  return verdict.pass ? kExitPass : kExitVerdictFail;
}

int cmd_verify(const std::string& suite, bool serial, const CommonOpts& common) {
  std::vector<std::string> suites;
  if (suite == "all")
    suites = verify_suite_names();
  else
    suites.push_back(suite);

  json out = json::array();
  bool all_pass = true;
  for (const std::string& name : suites) {
    const SuiteReport report = verify_suite(name, !serial);
    json checks = json::array();
    for (const CheckResult& c : report.checks) {
      checks.push_back(json{{"name", c.name},
                            {"error", c.error},
                            {"threshold", c.threshold},
                            {"pass", c.pass}});
      all_pass = all_pass && c.pass;
    }
    out.push_back(json{{"suite", report.suite}, {"checks", std::move(checks)}});
  }
  emit(json{{"suites", std::move(out)}, {"config", config_to_json(common.config)}});
  return all_pass ? kExitPass : kExitVerdictFail;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"q-Gevrey calculus: theta/Borel/Laplace operators and sequence classifiers"};
  app.require_subcommand(1);

  CommonOpts common;
  app.add_option("--config", common.config_path, "path to a JSON config file");

  double q = 2.0, s = 1.0, gamma = std::numbers::pi;
  double z_re = 1.0, z_im = 0.0, z_logmag = 0.0, z_arg = std::numbers::pi;
  std::string method = "series", mode = "qborel", kind = "geometric", strategy = "geometric";
  std::string in_path, out_path, grid_spec, csv_path = "qsum.csv", suite = "all";
  std::string samples_path, coeffs_path;
  std::optional<std::string> seq_path, generator, cont_series;
  std::optional<double> gen_param;
  int pade_num = 8, pade_den = 8, which = 1, n_max = 0;
  bool inverse = false, serial = false;

  CLI::App* c_theta = app.add_subcommand("theta", "evaluate Theta_{q^s} and the spiral clearance");
  c_theta->add_option("--q", q)->required();
  c_theta->add_option("--s", s)->required();
  c_theta->add_option("--z-re", z_re)->required();
  c_theta->add_option("--z-im", z_im);
  c_theta->add_option("--method", method)->check(CLI::IsMember({"series", "product"}));

  CLI::App* c_borel = app.add_subcommand("borel", "apply the formal q-Borel or m-Borel operator");
  c_borel->add_option("--in", in_path)->required();
  c_borel->add_option("--out", out_path)->required();
  c_borel->add_option("--q", q);
  c_borel->add_option("--s", s);
  c_borel->add_option("--mode", mode)->check(CLI::IsMember({"qborel", "mborel"}));
  c_borel->add_option("--sequence", seq_path);
  c_borel->add_flag("--inverse", inverse, "run the inverse direction");

  CLI::App* c_cont = app.add_subcommand("continue", "evaluate a registered analytic continuation");
  c_cont->add_option("--kind", kind)->check(CLI::IsMember({"geometric", "qexp", "qfact", "cbinom", "pade"}));
  c_cont->add_option("--q", q);
  c_cont->add_option("--z-logmag", z_logmag)->required();
  c_cont->add_option("--z-arg", z_arg)->required();
  c_cont->add_option("--series", cont_series, "series file for the pade kind");
  c_cont->add_option("--pade-num", pade_num);
  c_cont->add_option("--pade-den", pade_den);

  CLI::App* c_lap = app.add_subcommand("laplace", "q-Laplace transform at a single point");
  c_lap->add_option("--kind", kind)->check(CLI::IsMember({"geometric", "qexp", "qfact", "cbinom", "pade"}));
  c_lap->add_option("--which", which, "1 or 2 for the cbinom pair");
  c_lap->add_option("--q", q)->required();
  c_lap->add_option("--s", s)->required();
  c_lap->add_option("--gamma", gamma);
  c_lap->add_option("--z-logmag", z_logmag)->required();
  c_lap->add_option("--z-arg", z_arg)->required();
  c_lap->add_option("--series", cont_series);
  c_lap->add_option("--pade-num", pade_num);
  c_lap->add_option("--pade-den", pade_den);

  CLI::App* c_qsum = app.add_subcommand("qsum", "q-summation pipeline over a sector grid");
  c_qsum->add_option("--series", in_path)->required();
  c_qsum->add_option("--q", q)->required();
  c_qsum->add_option("--s", s)->required();
  c_qsum->add_option("--gamma", gamma);
  c_qsum->add_option("--strategy", strategy,
                     "geometric|qexp|qfact|pade (closed form tag or Pade fallback)");
  c_qsum->add_option("--grid", grid_spec, "rmin:rmax:nr:half_opening:narg");
  c_qsum->add_option("--out", csv_path, "CSV output path");
  c_qsum->add_option("--pade-num", pade_num);
  c_qsum->add_option("--pade-den", pade_den);
  c_qsum->add_flag("--serial", serial, "use the serial reference grid evaluation");

  CLI::App* c_cls = app.add_subcommand("classify", "sequence classifier verdict report");
  c_cls->add_option("--sequence", seq_path, "sequence JSON file");
  c_cls->add_option("--generator", generator, "q_factorial_inv|factorial_pow|geometric|central_binomial|q_gevrey");
  c_cls->add_option("--param", gen_param, "generator parameter (s or A)");
  c_cls->add_option("--q", q);

  CLI::App* c_asym = app.add_subcommand("asympt", "q-Gevrey asymptotic-expansion check");
  c_asym->add_option("--samples", samples_path)->required();
  c_asym->add_option("--coeffs", coeffs_path)->required();
  c_asym->add_option("--q", q)->required();
  c_asym->add_option("--s", s)->required();
  c_asym->add_option("--nmax", n_max);

  CLI::App* c_ver = app.add_subcommand("verify", "run an identity suite");
  c_ver->add_option("suite", suite)->check(CLI::IsMember({"all", "qcore", "theta", "laplace"}));
  c_ver->add_flag("--serial", serial, "use the serial reference sampling");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int rc = app.exit(e);
    return rc == 0 ? kExitPass : kExitInputError;
  }

  try {
    common.config = load_config(common.config_path);
    if (c_theta->parsed()) return cmd_theta(q, s, z_re, z_im, method, common);
    if (c_borel->parsed()) return cmd_borel(in_path, out_path, q, s, mode, seq_path, inverse, common);
    if (c_cont->parsed())
      return cmd_continue(kind, q, z_logmag, z_arg, cont_series, pade_num, pade_den, common);
    if (c_lap->parsed())
      return cmd_laplace(kind, q, s, gamma, z_logmag, z_arg, cont_series, pade_num, pade_den, which, common);
    if (c_qsum->parsed())
      return cmd_qsum(in_path, q, s, gamma, strategy, grid_spec, csv_path, pade_num, pade_den, serial, common);
    if (c_cls->parsed()) return cmd_classify(seq_path, generator, gen_param, q, common);
    if (c_asym->parsed()) return cmd_asympt(samples_path, coeffs_path, q, s, n_max, common);
    if (c_ver->parsed()) return cmd_verify(suite, serial, common);
    return kExitInputError;
  } catch (const quadrature_error& e) {
    std::cerr << "numerical failure: " << e.what() << std::endl;
    return kExitNumericalFailure;
  } catch (const std::overflow_error& e) {
    std::cerr << "numerical failure: " << e.what() << std::endl;
    return kExitNumericalFailure;
  } catch (const std::underflow_error& e) {
    std::cerr << "numerical failure: " << e.what() << std::endl;
    return kExitNumericalFailure;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << std::endl;
    return kExitInputError;
  }
}
