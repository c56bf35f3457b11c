#pragma once

#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "rooksa/partition.hpp"
#include "rooksa/spectral.hpp"

namespace rooksa {

struct ConfigError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

enum class ReportFormat { text, csv, json };

/// Analysis configuration as exposed by the CLI. Validation happens in
/// run_analysis: the interpretable order may not exceed the highest rank
/// present (the ambient size for an empty dataset), and rank filters must
/// lie in {0..n}.
struct RunConfig {
  Basis association = Basis::groupoid;
  InnerProduct ip = InnerProduct::groupoid;
  int max_order = 2;
  std::optional<std::vector<int>> ranks; // restrict rendered ranks
  ReportFormat format = ReportFormat::text;
  std::vector<IntegerPartition> energy_subset;
};

SpectralReport run_analysis(const RunConfig& config, const Dataset& dataset);

/// Deterministic rendering: fixed block ordering, two-decimal values,
/// exact numerator/denominator alongside decimals in the JSON form.
std::string render_report(const SpectralReport& report, const RunConfig& config);

/// run_analysis + render_report.
std::string run(const RunConfig& config, const Dataset& dataset);

} // namespace rooksa
