// Command-line front end: evaluate H / Fox-Wright / Mittag-Leffler functions,
// classify parameterizations, apply the spec-to-spec transform rewrites and
// run the verification suites.
//
// Exit codes: 0 success, 2 usage/parse errors (including missing files and
// unknown theorem ids), 3 evaluation or hypothesis errors.

#include <cstdio>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>

#include <CLI11.hpp>
#include <json.hpp>

#include "foxh/eval.hpp"
#include "foxh/fox_wright.hpp"
#include "foxh/report_io.hpp"
#include "foxh/theorems.hpp"
#include "foxh/transforms.hpp"

namespace {

using nlohmann::json;

struct RunConfig {
  double tol = 1e-8;
  long seed = 42;
  long samples = 10;
  int grid_count = 100;
  std::string out_path;
  bool as_json = false;
};

std::string fmt10(double v) {
  char buf[40];
  std::snprintf(buf, sizeof(buf), "%.10g", v);
  return buf;
}

std::string fmt17(double v) {
  char buf[40];
  std::snprintf(buf, sizeof(buf), "%.17g", v);
  return buf;
}

void add_common(CLI::App* cmd, RunConfig& cfg) {
  cmd->add_option("--tol", cfg.tol, "numerical tolerance")->check(CLI::PositiveNumber);
  cmd->add_option("--seed", cfg.seed, "rng seed");
  cmd->add_option("--samples", cfg.samples, "hypothesis samples per suite");
  cmd->add_option("--grid", cfg.grid_count, "grid point count");
  cmd->add_option("--out", cfg.out_path, "output path");
  cmd->add_flag("--json", cfg.as_json, "machine-readable JSON output");
}

void print_value(const RunConfig& cfg, const std::string& method, double value, double err,
                 long work, const char* work_name) {
  if (cfg.as_json) {
    json doc;
    doc["value"] = fmt17(value);
    doc["error_estimate"] = fmt17(err);
    doc["method"] = method;
    doc[work_name] = work;
    std::cout << doc.dump(2) << "\n";
  } else {
    std::cout << fmt10(value) << "\n";
    std::cout << "  method: " << method << "   error estimate: " << fmt10(err) << "   "
              << work_name << ": " << work << "\n";
  }
}

int eval_command(const std::string& kind, const std::string& spec_path, double z, double alpha,
                 double beta, double gamma, const RunConfig& cfg) {
  if (kind == "h") {
    const foxh::HFunctionSpec spec = foxh::h_spec_from_file(spec_path);
    const foxh::HEvalResult r = foxh::eval_h(spec, z, cfg.tol);
    print_value(cfg, "contour", r.value, r.error, r.nodes, "nodes");
    return 0;
  }
  if (kind == "fw") {
    const foxh::FoxWrightSpec fw = foxh::fw_spec_from_file(spec_path);
    for (const auto& pr : fw.upper)
      if (!(pr.A > 0.0)) throw foxh::precondition_error("positive weights required");
    for (const auto& pr : fw.lower)
      if (!(pr.A > 0.0)) throw foxh::precondition_error("positive weights required");
    const foxh::FwEvalResult r = foxh::eval_fw(fw, z, cfg.tol);
    print_value(cfg, "series", r.value, r.error, r.terms, "terms");
    return 0;
  }
  if (kind == "ml") {
    const foxh::FwEvalResult r = foxh::mittag_leffler(alpha, beta, gamma, z, cfg.tol);
    print_value(cfg, "series", r.value, r.error, r.terms, "terms");
    return 0;
  }
  throw foxh::spec_error("eval: kind must be h, fw or ml");
}

json report_to_json(const foxh::ConvergenceReport& rep) {
  json doc;
  auto put = [&](const char* key, const std::optional<double>& v) {
    if (v)
      doc[key] = fmt17(*v);
    else
      doc[key] = nullptr;
  };
  put("delta", rep.delta);
  put("weight_balance", rep.weight_balance);
  put("radius", rep.radius);
  put("mu", rep.mu);
  doc["C"] = fmt17(rep.big_c);
  doc["D"] = fmt17(rep.big_d);
  put("zero_exponent", rep.zero_exponent);
  put("inf_exponent", rep.inf_exponent);
  doc["from_fox_wright"] = rep.from_fox_wright;
  return doc;
}

void print_report(const foxh::ConvergenceReport& rep, const RunConfig& cfg) {
  if (cfg.as_json) {
    std::cout << report_to_json(rep).dump(2) << "\n";
    return;
  }
  auto row = [&](const char* name, const std::optional<double>& v) {
    std::cout << "  " << name << ": " << (v ? fmt10(*v) : std::string("undefined")) << "\n";
  };
  row("delta", rep.delta);
  row("weight balance (sum B - sum A)", rep.weight_balance);
  row("radius rho", rep.radius);
  row("mu", rep.mu);
  std::cout << "  C: " << fmt10(rep.big_c) << "\n  D: " << fmt10(rep.big_d) << "\n";
  row("zero exponent c", rep.zero_exponent);
  row("infinity exponent d", rep.inf_exponent);
}

int classify_command(const std::string& spec_path, const RunConfig& cfg) {
  // H documents carry m/n; plain upper/lower documents are Fox-Wright
  std::ifstream probe(spec_path);
  if (!probe) throw foxh::spec_error("cannot open file " + spec_path);
  std::stringstream buf;
  buf << probe.rdbuf();
  const json doc = json::parse(buf.str(), nullptr, false);
  if (doc.is_discarded()) throw foxh::spec_error("malformed spec document");
  if (doc.contains("m") && doc.contains("n")) {
    print_report(foxh::convergence_params(foxh::h_spec_from_json(buf.str())), cfg);
  } else {
    print_report(foxh::classify(foxh::fw_spec_from_json(buf.str())), cfg);
  }
  return 0;
}

int transform_command(const std::string& which, const std::string& spec_path, double k,
                      double sigma, double rho_p, double nu, double b, const RunConfig& cfg) {
  const foxh::HFunctionSpec spec = foxh::h_spec_from_file(spec_path);
  std::string result;
  std::string relation;
  if (which == "laplace") {
    result = foxh::to_json_string(foxh::laplace_of_h(spec));
    relation = "L{H}(s) = (1/s) * image(1/s)";
  } else if (which == "hankel") {
    const foxh::HankelImage img = foxh::hankel_of_h(spec, rho_p, nu, sigma, b);
    result = foxh::to_json_string(img.spec);
    relation = "Int r^{rho-1} J_nu(x r) H[b r^sigma] dr = 2^{rho-1} x^{-rho} * image(b (2/x)^sigma)";
  } else if (which == "invert") {
    result = foxh::to_json_string(foxh::invert_argument(spec));
    relation = "image(z) = H(1/z)";
  } else if (which == "scale") {
    const foxh::ScaledSpec scaled = foxh::scale_argument(spec, k);
    result = foxh::to_json_string(scaled.spec);
    relation = "H(z) = " + fmt10(scaled.prefactor) + " * image(z^" + fmt10(k) + ")";
  } else if (which == "shift") {
    result = foxh::to_json_string(foxh::shift_power(spec, sigma));
    relation = "z^sigma H(z) = image(z), sigma = " + fmt10(sigma);
  } else if (which == "reduce") {
    result = foxh::to_json_string(foxh::reduce_matching_pair(spec));
    relation = "image(z) = H(z) after cancelling the matched pair";
  } else {
    throw foxh::spec_error("transform: unknown rewrite " + which);
  }
  if (!cfg.out_path.empty()) {
    foxh::write_file(cfg.out_path, result + "\n");
    std::cout << "wrote " << cfg.out_path << "\n";
  } else {
    std::cout << result << "\n";
  }
  if (!cfg.as_json) std::cout << "  relation: " << relation << "\n";
  return 0;
}

int verify_command(const std::string& theorem, const RunConfig& cfg) {
  if (!foxh::is_registered_theorem(theorem)) {
    std::cerr << "unknown theorem: " << theorem << "\n";
    return 2;
  }
  foxh::SuiteConfig sc;
  sc.eval_tol = cfg.tol;
  sc.grid_count = cfg.grid_count;
  const foxh::SuiteRun run = foxh::run_theorem_suite_full(
      theorem, cfg.samples, static_cast<std::uint64_t>(cfg.seed), sc);
  const std::string dir = cfg.out_path.empty() ? "." : cfg.out_path;
  std::filesystem::create_directories(dir);
  const std::string base = dir + "/" + run.theorem_id;
  foxh::write_file(base + "_report.json", foxh::suite_report_json(run));
  foxh::write_file(base + "_samples.csv", foxh::suite_report_csv(run));
  std::cout << run.theorem_id << ": " << (run.merged.passed ? "PASS" : "FAIL")
            << "  samples: " << run.merged.samples_tested
            << "  worst margin: " << fmt10(run.merged.worst_margin) << "\n";
  std::cout << "  reports: " << base << "_report.json, " << base << "_samples.csv\n";
  return run.merged.passed ? 0 : 1;
}

int list_command() {
  for (const auto& entry : foxh::theorem_registry()) {
    std::cout << entry.id;
    if (!entry.aliases.empty()) {
      std::cout << " (";
      for (std::size_t i = 0; i < entry.aliases.size(); ++i)
        std::cout << (i ? ", " : "") << entry.aliases[i];
      std::cout << ")";
    }
    std::cout << "\n    " << entry.description << "\n";
  }
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Fox H-function and Fox-Wright numerical toolkit"};
  app.require_subcommand(1);
  RunConfig cfg;

  std::string kind, spec_path, theorem, rewrite;
  double z = 1.0, alpha = 1.0, beta = 1.0, gamma = 1.0;
  double k = 1.0, sigma = 0.0, rho_p = 1.0, nu = 0.5, bscale = 1.0;

  CLI::App* eval = app.add_subcommand("eval", "evaluate a function at z");
  eval->add_option("kind", kind, "h | fw | ml")->required();
  eval->add_option("--spec", spec_path, "spec JSON file (h, fw)");
  eval->add_option("--z", z, "argument")->required();
  eval->add_option("--alpha", alpha, "Mittag-Leffler alpha");
  eval->add_option("--beta", beta, "Mittag-Leffler beta");
  eval->add_option("--gamma", gamma, "Mittag-Leffler gamma");
  add_common(eval, cfg);

  CLI::App* classify = app.add_subcommand("classify", "structural/convergence parameters");
  classify->add_option("--spec", spec_path, "spec JSON file")->required();
  add_common(classify, cfg);

  CLI::App* transform = app.add_subcommand("transform", "spec-to-spec rewrites");
  transform->add_option("which", rewrite, "laplace | hankel | invert | scale | shift | reduce")
      ->required();
  transform->add_option("--spec", spec_path, "spec JSON file")->required();
  transform->add_option("--k", k, "scale exponent (scale)");
  transform->add_option("--sigma", sigma, "power shift (shift) / transform power (hankel)");
  transform->add_option("--rho", rho_p, "transform power rho (hankel)");
  transform->add_option("--nu", nu, "Bessel order (hankel)");
  transform->add_option("--b", bscale, "inner argument scale (hankel)");
  add_common(transform, cfg);

  CLI::App* verify = app.add_subcommand("verify", "run a theorem verification suite");
  verify->add_option("theorem", theorem, "suite id (H1..H10, tau-kummer, thm-*)")->required();
  add_common(verify, cfg);

  app.add_subcommand("list-theorems", "registered verification suites");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    if (e.get_name() == "CallForHelp" || e.get_name() == "CallForAllHelp")
      return app.exit(e);
    app.exit(e);
    return 2;
  }

  try {
    if (eval->parsed()) {
      if ((kind == "h" || kind == "fw") && spec_path.empty())
        throw foxh::spec_error("eval: --spec required for h and fw");
      return eval_command(kind, spec_path, z, alpha, beta, gamma, cfg);
    }
    if (classify->parsed()) return classify_command(spec_path, cfg);
    if (transform->parsed()) {
      if (rewrite == "hankel" && transform->count("--sigma") == 0) sigma = 1.0;
      return transform_command(rewrite, spec_path, k, sigma, rho_p, nu, bscale, cfg);
    }
    if (verify->parsed()) return verify_command(theorem, cfg);
    return list_command();
  } catch (const foxh::spec_error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 3;
  }
}
