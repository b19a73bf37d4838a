#include "foxh/report_io.hpp"

#include <cmath>
#include <cstdio>
#include <fstream>
#include <limits>
#include <sstream>

#include <json.hpp>

namespace foxh {

namespace {

using nlohmann::json;

// fixed 17-significant-digit decimal form; shared by JSON and CSV so reports
// are byte-stable
std::string num17(double v) {
  if (std::isnan(v)) return "nan";
  if (std::isinf(v)) return v > 0 ? "inf" : "-inf";
  char buf[40];
  std::snprintf(buf, sizeof(buf), "%.17g", v);
  return buf;
}

json params_json(const ParamMap& params) {
  json obj = json::object();
  for (const auto& [key, value] : params) obj[key] = num17(value);
  return obj;
}

json report_json(const PropertyReport& rep) {
  json obj;
  obj["passed"] = rep.passed;
  obj["samples_tested"] = rep.samples_tested;
  obj["worst_margin"] = num17(rep.worst_margin);
  obj["evaluation_failures"] = rep.evaluation_failures;
  if (!rep.note.empty()) obj["note"] = rep.note;
  json fails = json::array();
  for (const auto& f : rep.failures) {
    json fo;
    fo["sample_index"] = f.sample_index;
    fo["grid_point"] = num17(f.grid_point);
    fo["value"] = num17(f.value);
    fo["detail"] = f.detail;
    fails.push_back(fo);
  }
  obj["failures"] = fails;
  return obj;
}

}  // namespace

SuiteRun run_theorem_suite_full(const std::string& name, long samples, std::uint64_t seed,
                                const SuiteConfig& config) {
  SuiteRun run;
  run.theorem_id = canonical_theorem_id(name);
  run.seed = seed;
  run.config = config;
  run.merged.theorem_id = run.theorem_id;
  run.merged.seed = seed;
  run.merged.worst_margin = std::numeric_limits<double>::infinity();
  run.merged.passed = true;
  if (!is_registered_theorem(name)) throw spec_error("unknown theorem: " + name);
  for (long i = 0; i < samples; ++i) {
    // same per-sample stream keys as run_theorem_suite
    std::uint64_t stream = seed;
    for (long k = 0; k <= i; ++k) splitmix64(stream);
    const ParamMap params = draw_theorem_sample(run.theorem_id, stream);
    PropertyReport rep = run_theorem_sample(run.theorem_id, params, config);
    for (auto& f : rep.failures) f.sample_index = i;
    rep.samples_tested = 1;
    run.sample_params.push_back(params);
    run.sample_reports.push_back(rep);
    run.merged.merge(rep);
    run.merged.samples_tested = i + 1;
  }
  return run;
}

std::string suite_report_json(const SuiteRun& run) {
  json doc;
  doc["theorem"] = run.theorem_id;
  doc["seed"] = run.seed;
  json cfg;
  cfg["eps"] = num17(run.config.eps);
  cfg["eval_tol"] = num17(run.config.eval_tol);
  cfg["grid_count"] = run.config.grid_count;
  cfg["max_order"] = run.config.max_order;
  doc["config"] = cfg;
  doc["samples"] = run.merged.samples_tested;
  doc["worst_margin"] = num17(run.merged.worst_margin);
  doc["passed"] = run.merged.passed;
  json samples = json::array();
  for (std::size_t i = 0; i < run.sample_reports.size(); ++i) {
    json s;
    s["index"] = i;
    s["params"] = params_json(run.sample_params[i]);
    s["report"] = report_json(run.sample_reports[i]);
    samples.push_back(s);
  }
  doc["sample_reports"] = samples;
  return doc.dump(2) + "\n";
}

std::string suite_report_csv(const SuiteRun& run) {
  std::ostringstream out;
  out << "theorem,sample_index,param_json,worst_margin,passed\n";
  for (std::size_t i = 0; i < run.sample_reports.size(); ++i) {
    std::string pj = params_json(run.sample_params[i]).dump();
    std::string quoted;
    quoted.reserve(pj.size() + 8);
    for (char c : pj) {
      if (c == '"') quoted += "\"\"";
      else quoted += c;
    }
    out << run.theorem_id << ',' << i << ",\"" << quoted << "\","
        << num17(run.sample_reports[i].worst_margin) << ','
        << (run.sample_reports[i].passed ? "true" : "false") << '\n';
  }
  return out.str();
}

void write_file(const std::string& path, const std::string& contents) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw spec_error("cannot open output file " + path);
  out << contents;
}

}  // namespace foxh
