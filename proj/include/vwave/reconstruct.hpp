#pragma once

#include <vector>

#include "vwave/goursat.hpp"

namespace vwave {

/// A point of the level curve {t = tau}, interpolated along one lattice edge.
/// Column points lie on a vertical edge (X = X_i), row points on a horizontal
/// edge (Y = Y_j); a point at a lattice node may be both.
struct LevelPoint {
  double X = 0.0;
  double Y = 0.0;
  NodeState state;
  bool on_column = false;
  bool on_row = false;
};

/// Level curve ordered by increasing X (hence decreasing Y).
struct LevelCurve {
  double tau = 0.0;
  std::vector<LevelPoint> points;
};

/// Collects level curves for several times while the solver streams columns.
class LevelSetObserver : public ColumnObserver {
 public:
  explicit LevelSetObserver(std::vector<double> taus);
  void on_column(const LatticeGeometry& geom, const Column* prev, const Column& cur) override;
  /// Sorted, de-duplicated curves, one per requested time.
  std::vector<LevelCurve> curves() const;

 private:
  std::vector<LevelCurve> raw_;
};

/// Throws ValidationError unless 0 <= tau <= grid.t_max.
LevelCurve level_set(const CharGrid& grid, double tau);

struct Energies {
  double e_minus = 0.0;
  double e_plus = 0.0;
  double e_total = 0.0;
};

/// e_minus = \int p (1 - nu) dX over the column points, e_plus =
/// \int q (1 - eta) |dY| over the row points, both by the trapezoid rule.
Energies energies(const LevelCurve& level);

/// Discrete energy measure: point masses at physical positions.
struct MeasurePoint {
  double x = 0.0;
  double mass = 0.0;
};

/// mu_minus from the column points (weights p (1 - nu) times trapezoid
/// weights in X), mu_plus from the row points.
void energy_measures(const LevelCurve& level, std::vector<MeasurePoint>& mu_minus,
                     std::vector<MeasurePoint>& mu_plus);

/// alpha(X) = x_left + \int_{X_left}^{X} p dX' along the level curve.
double adapted_coordinate(const LevelCurve& level, double X);

struct SnapshotSample {
  double x = 0.0;
  double u = 0.0;
  double u_t = 0.0;
  double u_x = 0.0;
  double R = 0.0;
  double S = 0.0;
  bool defined = false;
  double nu = 1.0;
  double eta = 1.0;
};

struct Atom {
  int family = -1;  // -1: backward energy (nu small), +1: forward energy (eta small)
  double x_location = 0.0;
  double energy = 0.0;
  double c_prime = 0.0;
};

struct PhysicalSnapshot {
  double tau = 0.0;
  std::vector<SnapshotSample> samples;
  double e_minus = 0.0;
  double e_plus = 0.0;
  double e_total = 0.0;
  std::vector<Atom> atoms;
  std::vector<MeasurePoint> mu_minus;
  std::vector<MeasurePoint> mu_plus;
};

PhysicalSnapshot snapshot(const LevelCurve& level, const WaveSpeedModel& model,
                          double nu_floor = 1e-3);
PhysicalSnapshot snapshot(const CharGrid& grid, const WaveSpeedModel& model, double tau,
                          double nu_floor = 1e-3);

/// Linear interpolation of u from snapshot samples; constant extension.
double sample_u(const PhysicalSnapshot& snap, double x);

}  // namespace vwave
