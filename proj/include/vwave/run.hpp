#pragma once

#include <limits>
#include <string>
#include <utility>
#include <vector>

#include "vwave/characteristics.hpp"
#include "vwave/config.hpp"
#include "vwave/goursat.hpp"
#include "vwave/reconstruct.hpp"

namespace vwave {

inline constexpr const char* version_string = "1.0.0";

/// Initial-curve node count giving spacing h / density in s = X - Y.
int curve_nodes_for(const CauchyData& data, const WaveSpeedModel& model, double h,
                    double density, double margin);

struct RunOptions {
  std::string oracle;  // "" or "dalembert"
  int q_levels = 64;   // uniform time levels for the Q series (plus snapshot times)
};

struct RunResult {
  RunConfig config;
  double E0 = 0.0;
  CharGrid grid;  // columns only when solver.keep_grid is set
  std::vector<LevelCurve> levels;
  std::vector<PhysicalSnapshot> snapshots;
  std::vector<std::pair<double, double>> q_series;
  double rsq_integral = 0.0;
  BoundReport bound;
  ResidualReport residuals;
  std::vector<CharacteristicCurve> curves;
  std::string oracle;
  double oracle_error = std::numeric_limits<double>::quiet_NaN();
  std::vector<std::string> warnings;
};

/// Builds the data, integrates to t_max with all observers attached and
/// reconstructs the snapshots. No files are written.
RunResult execute(const RunConfig& cfg, const RunOptions& opts = {});

/// Writes every artifact and manifest.json into `dir` (created if needed).
void write_artifacts(const RunResult& result, const std::string& dir);

/// Records a failed run: config echo and a manifest flagged partial.
void write_failure(const RunConfig& cfg, const std::string& dir, const std::string& kind,
                   const std::string& message);

/// execute + write_artifacts into cfg.output_dir; on failure the manifest is
/// flagged partial and the error is rethrown.
RunResult run(const RunConfig& cfg, const RunOptions& opts = {});

struct FieldOrder {
  std::string field;
  std::vector<double> errors;  // one per consecutive pair of levels (or per level vs oracle)
  std::vector<double> orders;
  bool exact = false;
};

struct ConvergenceReport {
  std::vector<double> h;
  std::vector<FieldOrder> fields;
};

/// Runs at h / 2^k, k < levels, and compares consecutive levels on common
/// samples: u and x along the level sets, plus the drift of e_total. With
/// oracle "dalembert" (constant speed) or "fd" the finest level is also
/// compared against the oracle. Throws ValidationError if levels < 3.
ConvergenceReport convergence_study(const RunConfig& cfg, int levels, const std::string& oracle = "");

std::string to_json(const ConvergenceReport& report);

}  // namespace vwave
