#pragma once

#include <utility>
#include <vector>

#include "vwave/goursat.hpp"
#include "vwave/oracles.hpp"
#include "vwave/reconstruct.hpp"

namespace vwave {

enum class Family { backward = -1, forward = 1 };

struct CharacteristicCurve {
  Family sign = Family::backward;
  double start = 0.0;  // x at t = 0
  double label = 0.0;  // X for backward curves, Y for forward ones
  std::vector<double> t;
  std::vector<double> x;
  int iterations = 0;     // Picard only
  double residual = 0.0;  // Picard only
};

/// Follows the lattice lines X = label (backward) or Y = label (forward) while
/// the solver streams columns. Curves start at (0, x_start) and keep samples
/// with strictly increasing t up to t_limit.
class TraceObserver : public ColumnObserver {
 public:
  TraceObserver(const GammaLookup& gamma, const std::vector<std::pair<double, Family>>& starts,
                double t_limit);
  void on_column(const LatticeGeometry& geom, const Column* prev, const Column& cur) override;
  const std::vector<CharacteristicCurve>& curves() const { return curves_; }

 private:
  void push(CharacteristicCurve& c, double t, double x) const;
  std::vector<CharacteristicCurve> curves_;
  double t_limit_;
};

/// Throws ValidationError if x_start lies outside the curve's x-range.
CharacteristicCurve trace_from_grid(const CharGrid& grid, double x_start, Family sign);

/// Characteristic from the integral equation for its adapted coordinate,
///   alpha(t) = alpha0 + \int_0^t [-c(u) + \int_{-inf}^{x} c'(R^2 S - R S^2)/(2c) dy] ds
/// (backward; the forward family uses +c and the opposite source with S^2 in
/// the coordinate), solved by Picard iteration on windows of unit length over
/// the stored levels of `fields`. Throws NumericalError if a window does not
/// converge within max_iterations.
CharacteristicCurve picard_characteristic(const FieldLattice& fields, const WaveSpeedModel& model,
                                          double y_start, Family sign, double tol = 1e-10,
                                          int max_iterations = 500);

/// Q = sum over x_i > y_j of m_i^- m_j^+ (prefix sums over sorted positions).
double interaction_potential(const std::vector<MeasurePoint>& mu_minus,
                             const std::vector<MeasurePoint>& mu_plus);
double interaction_potential(const PhysicalSnapshot& snap);

/// Accumulates \int\int R^2 S^2 dx dt = \int\int (1-nu)(1-eta) p q / (2c) dX dY
/// over lattice cells whose mean time is at most t_limit.
class InteractionIntegralObserver : public ColumnObserver {
 public:
  InteractionIntegralObserver(const WaveSpeedModel& model, double t_limit)
      : model_(model), t_limit_(t_limit) {}
  void on_column(const LatticeGeometry& geom, const Column* prev, const Column& cur) override;
  double value() const { return sum_; }

 private:
  const WaveSpeedModel& model_;
  double t_limit_;
  double sum_ = 0.0;
};

struct BoundReport {
  double lhs = 0.0;
  double rhs = 0.0;
  double margin = 0.0;  // 1.1 rhs - lhs
  double Q0 = 0.0;
  double QT = 0.0;
  double T = 0.0;
  bool pass = false;
};

/// lhs = rsq_integral, rhs = (2/c0)[(Q(0) - Q(T)) + 2 M E0^2 T / c0^2];
/// passes when lhs <= 1.1 rhs. `series` holds (t, Q(t)) with t = 0 first.
BoundReport check_interaction_bound(const std::vector<std::pair<double, double>>& series,
                                    double rsq_integral, const WaveSpeedModel& model, double E0,
                                    double T);

}  // namespace vwave
