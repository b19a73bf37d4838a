#pragma once

#include <string>
#include <vector>

#include "foxh/theorems.hpp"

namespace foxh {

/// Full record of one suite run, kept per sample for the CSV export.
struct SuiteRun {
  std::string theorem_id;
  std::uint64_t seed = 0;
  SuiteConfig config;
  std::vector<ParamMap> sample_params;
  std::vector<PropertyReport> sample_reports;
  PropertyReport merged;
};

/// Deterministic variant of run_theorem_suite retaining per-sample results.
SuiteRun run_theorem_suite_full(const std::string& name, long samples, std::uint64_t seed,
                                const SuiteConfig& config = {});

/// JSON document: theorem id, seed, config, per-sample margins, worst margin,
/// failures.  Byte-identical across runs with equal inputs.
std::string suite_report_json(const SuiteRun& run);

/// CSV rows: theorem,sample_index,param_json,worst_margin,passed
std::string suite_report_csv(const SuiteRun& run);

void write_file(const std::string& path, const std::string& contents);

}  // namespace foxh
