#pragma once

#include <memory>
#include <vector>

#include "vwave/initial_data.hpp"
#include "vwave/state.hpp"
#include "vwave/wavespeed.hpp"

namespace vwave {

/// Uniform lattice X_i = X0 + i h, Y_j = Y0 + j h. The origin is the lower-left
/// corner of the box spanned by the initial curve: X0 is the X of its first
/// node, Y0 the Y of its last node.
struct LatticeGeometry {
  double X0 = 0.0;
  double Y0 = 0.0;
  double h = 1.0;
  double X(int i) const { return X0 + h * i; }
  double Y(int j) const { return Y0 + h * j; }
};

/// Interpolates the initial curve, extended by its vacuum tails, at arbitrary
/// X or Y. Node states are interpolated by monotone cubics in the arclength
/// parameter s = X - Y and then projected back onto the circle relations.
class GammaLookup {
 public:
  explicit GammaLookup(const BoundaryCurve& gamma);

  double Y_at(double X) const;
  double X_at(double Y) const;
  NodeState state_at_X(double X) const;
  NodeState state_at_Y(double Y) const;

  /// Label of the backward (X) and forward (Y) characteristic leaving the
  /// physical point x at t = 0.
  double X_of_x(double x) const;
  double Y_of_x(double x) const;

  /// Strictly on the t > 0 side of the curve.
  bool above(double X, double Y) const { return Y > Y_at(X); }

  /// Closed-form state at a point of the vacuum wedges X < X_first (left) or
  /// Y < Y_last (right), where the solution depends on vacuum data only.
  NodeState wedge_state(double X, double Y) const;

  const BoundaryCurve& curve() const { return gamma_; }

 private:
  struct Impl;
  std::shared_ptr<const Impl> impl_;
  BoundaryCurve gamma_;
};

/// A point a lattice node was integrated from when its lattice neighbour lies
/// on the other side of the initial curve: a curve intercept, or a wedge point.
struct Anchor {
  double X = 0.0;
  double Y = 0.0;
  NodeState state;
  bool on_curve = false;
};

/// One lattice column: contiguous rows j_begin .. j_end()-1.
struct Column {
  int i = 0;
  int j_begin = 0;
  std::vector<NodeState> nodes;
  /// Bottom neighbour of the first node.
  Anchor bottom;
  /// Left neighbours of rows j_begin .. j_begin + left.size() - 1, which have
  /// no node in the previous column.
  std::vector<Anchor> left;

  int j_end() const { return j_begin + static_cast<int>(nodes.size()); }
  bool has(int j) const { return j >= j_begin && j < j_end(); }
  const NodeState& at(int j) const { return nodes[static_cast<std::size_t>(j - j_begin)]; }
  /// Left neighbour of row j: the anchor if the row starts here.
  bool has_left_anchor(int j) const {
    return j >= j_begin && j < j_begin + static_cast<int>(left.size());
  }
  const Anchor& left_anchor(int j) const { return left[static_cast<std::size_t>(j - j_begin)]; }
};

/// Curve intercepts for the lattice lines that cross the initial curve.
struct BoundaryLayer {
  LatticeGeometry geom;
  GammaLookup gamma;
  int n_core_columns = 0;              // columns with X_i <= X of the last curve node
  int n_core_rows = 0;                 // rows with Y_j <= Y of the first curve node
  std::vector<int> j_begin;            // first row on or above the curve, per core column
  std::vector<Anchor> column_anchor;   // (X_i, Y_curve(X_i)) per core column
  std::vector<Anchor> row_anchor;      // (X_curve(Y_j), Y_j) per core row

  /// First row on or above the curve in column i (any i >= 0).
  int first_row(int i) const;
  /// Bottom neighbour of the first node of column i.
  Anchor bottom_anchor(int i) const;
  /// Left neighbour of node (i, j) when (i-1, j) is not a lattice node.
  Anchor left_anchor(int i, int j) const;
  /// Node (i, j) lies on the curve (within round-off).
  bool on_curve(int i, int j) const;
};

/// Seeds the lattice along the initial curve. Throws ValidationError if the
/// curve nodes are spaced more coarsely than h.
BoundaryLayer seed_lattice(const BoundaryCurve& gamma, double h);

struct SolverStats {
  long long nodes = 0;
  long long iterated_cells = 0;
  long long damped_cells = 0;
  int max_iterations = 0;
  double min_p = 1.0;
  double min_q = 1.0;
  double min_nu = 1.0;
  double min_eta = 1.0;
  double min_u = 0.0;
  double max_u = 0.0;
  double max_t = 0.0;
};

/// Receives every finished column together with its predecessor. Completed
/// columns are never modified afterwards.
class ColumnObserver {
 public:
  virtual ~ColumnObserver() = default;
  virtual void on_column(const LatticeGeometry& geom, const Column* prev, const Column& cur) = 0;
};

/// Characteristic-plane solution: the columns of the lattice region above the
/// initial curve with t <= t_max (plus the first node beyond).
struct CharGrid {
  LatticeGeometry geom;
  std::vector<Column> columns;
  BoundaryCurve gamma;
  double t_max = 0.0;
  SolverStats stats;

  const NodeState* find(int i, int j) const;
  void replay(ColumnObserver& observer) const;
};

struct SolverOptions {
  double tol = 1e-12;
  int max_iterations = 50;
  double positivity_floor = 1e-10;
  bool keep_columns = true;
};

struct CellReport {
  int iterations = 0;
  double residual = 0.0;
  bool damped = false;
  bool converged = true;
};

/// One trapezoidal box-scheme step: the state at a corner from its left
/// neighbour (distance dX along +X) and its bottom neighbour (dY along +Y).
/// (u, x, t) are advanced along both edges and averaged.
NodeState solve_cell(const NodeState& left, double dX, const NodeState& bottom, double dY,
                     const WaveSpeedModel& model, const SolverOptions& opts, CellReport& report);

/// Marches the Goursat problem column by column. Every finished column is
/// handed to the observers; columns are stored in the result only when
/// opts.keep_columns is set. Throws NumericalError on fixed-point failure or
/// when p or q drops below the positivity floor.
CharGrid integrate(const BoundaryCurve& gamma, const WaveSpeedModel& model, double h, double t_max,
                   const std::vector<ColumnObserver*>& observers = {},
                   const SolverOptions& opts = {});

struct ResidualNorm {
  double max = 0.0;
  double l2 = 0.0;  // sqrt(h^2 * sum r^2)
  long long count = 0;
};

struct ResidualReport {
  ResidualNorm x_X;         // |x_X - c t_X| on X edges
  ResidualNorm x_Y;         // |x_Y + c t_Y| on Y edges
  ResidualNorm circle_nu;   // |xi^2 - nu (1 - nu)|
  ResidualNorm circle_eta;  // |zeta^2 - eta (1 - eta)|
  ResidualNorm jacobian;    // |det DL - p q / (2c (1+R^2)(1+S^2))| where nu, eta > 0.1
};

/// Accumulates the consistency residuals column by column.
class ResidualObserver : public ColumnObserver {
 public:
  explicit ResidualObserver(const WaveSpeedModel& model, double t_limit = 1e300)
      : model_(model), t_limit_(t_limit) {}
  void on_column(const LatticeGeometry& geom, const Column* prev, const Column& cur) override;
  ResidualReport report() const;

 private:
  const WaveSpeedModel& model_;
  double t_limit_;
  ResidualReport acc_;
  double h_ = 0.0;
};

ResidualReport consistency_residuals(const CharGrid& grid, const WaveSpeedModel& model);

}  // namespace vwave
