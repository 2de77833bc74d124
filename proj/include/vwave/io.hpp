#pragma once

#include <string>
#include <utility>
#include <vector>

#include "vwave/characteristics.hpp"
#include "vwave/goursat.hpp"
#include "vwave/reconstruct.hpp"

namespace vwave {

/// Every floating-point number in the CSV artifacts goes through this.
std::string fmt17(double v);

void write_grid_csv(const std::string& path, const CharGrid& grid);
void write_gamma_csv(const std::string& path, const BoundaryCurve& gamma);
void write_snapshot_csv(const std::string& path, const PhysicalSnapshot& snap);
void write_atoms_csv(const std::string& path, const PhysicalSnapshot& snap);
void write_curve_csv(const std::string& path, const CharacteristicCurve& curve);
void write_series_csv(const std::string& path, const std::string& header,
                      const std::vector<std::pair<double, double>>& rows);
void write_text(const std::string& path, const std::string& text);

/// Inverse of write_gamma_csv; e_minus, e_plus and the vacuum states come from
/// the JSON header fields passed in.
BoundaryCurve read_gamma_csv(const std::string& path, double e_minus, double e_plus, double u_left,
                             double u_right, double c_left, double c_right);

/// Rebuilds a grid from gamma.csv, grid.csv and grid.json in `dir`. Anchors
/// are re-seeded from the curve, so the result replays exactly like the
/// grid that was written.
CharGrid load_grid(const std::string& dir);

std::vector<std::pair<double, double>> read_series_csv(const std::string& path);

std::string read_text(const std::string& path);

}  // namespace vwave
