#pragma once

#include <string>
#include <utility>
#include <vector>

#include "vwave/initial_data.hpp"
#include "vwave/wavespeed.hpp"

namespace vwave {

struct FieldSpec {
  std::string profile = "zero";
  std::vector<double> params;
  std::string csv;  // overrides profile when set
};

/// Flat "section.key = value" configuration. Lists are comma or blank
/// separated; '#' starts a comment.
struct RunConfig {
  std::string model_name = "constant";
  std::vector<double> model_params{1.0};
  double u_min = -10.0;
  double u_max = 10.0;
  std::string model_table;  // (u, c) CSV for the tabulated model

  FieldSpec u0;
  FieldSpec u1;
  double sample_dx = 0.0;  // 0: min(1e-3, h/8)
  double margin = 0.5;

  double h = 1.0 / 128.0;
  double t_max = 1.0;
  double curve_density = 2.0;  // initial-curve nodes per lattice spacing
  bool keep_grid = true;
  int max_iterations = 50;  // per-cell fixed-point cap
  double tol = 1e-12;       // per-cell fixed-point tolerance

  std::vector<double> snapshot_times;
  double nu_floor = 1e-3;
  std::vector<double> chars_backward;
  std::vector<double> chars_forward;
  std::string output_dir = "run";
  bool write_grid = true;

  /// Entries in file order, echoed into the manifest.
  std::vector<std::pair<std::string, std::string>> entries;
};

/// Relative CSV paths are resolved against base_dir. Throws ValidationError
/// on unknown keys, malformed values or violated invariants.
RunConfig parse_config(const std::string& text, const std::string& base_dir = ".");
RunConfig load_config(const std::string& path);

/// Serializes back to the key = value form (all keys, 17 significant digits).
std::string to_text(const RunConfig& cfg);

void validate(const RunConfig& cfg);

WaveSpeedModel build_model(const RunConfig& cfg);
CauchyData build_data(const RunConfig& cfg);

/// Effective sampling step of the initial data.
double effective_sample_dx(const RunConfig& cfg);

}  // namespace vwave
