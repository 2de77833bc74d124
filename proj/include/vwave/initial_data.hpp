#pragma once

#include <functional>
#include <string>
#include <vector>

#include "vwave/state.hpp"
#include "vwave/wavespeed.hpp"

namespace vwave {

struct Interval {
  double lo = 0.0;
  double hi = 0.0;
  double length() const { return hi - lo; }
  bool contains(double x) const { return x >= lo && x <= hi; }
};

using Profile = std::function<double(double)>;

/// A profile together with the interval outside which it is constant.
struct ProfileSpec {
  Profile f;
  Interval support;
  bool zero = false;
};

/// Named analytic profiles:
///   zero           []
///   gaussian       [amp, center, width]            amp exp(-((x-center)/width)^2)
///   sine_packet    [amp, center, width, k]         gaussian times sin(k (x-center))
///   smoothed_step  [amp, a, b, eps]                C-infinity indicator of [a, b],
///                                                  ramps of half-width eps
ProfileSpec make_profile(const std::string& name, const std::vector<double>& params);

/// Two-column CSV (x, value), interpolated by monotone cubics; the table range
/// is the support.
ProfileSpec load_profile_csv(const std::string& path);

/// Cauchy data (u0, u1). Outside `support`, u0 is held at its edge values and
/// u1 vanishes, so the Riemann invariants vanish there.
class CauchyData {
 public:
  CauchyData(ProfileSpec u0, ProfileSpec u1, double sample_dx = 1e-3);

  double u0(double x) const;
  double u1(double x) const;
  /// u0' by five-point centered differences of step `delta` (three-point and
  /// one-sided closures at the support edges).
  double u0_prime(double x, double delta) const;

  const Interval& support() const { return support_; }
  double sample_dx() const { return sample_dx_; }
  void set_sample_dx(double dx) { sample_dx_ = dx; }

 private:
  ProfileSpec u0_;
  ProfileSpec u1_;
  Interval support_;
  double sample_dx_;
};

/// Uniformly sampled field on [x0, x0 + (n-1) dx].
struct SampledField {
  double x0 = 0.0;
  double dx = 1.0;
  std::vector<double> values;
  double x(std::size_t k) const { return x0 + dx * static_cast<double>(k); }
};

struct RiemannFields {
  SampledField R;
  SampledField S;
};

/// R0 = u1 + c(u0) u0',  S0 = u1 - c(u0) u0'  sampled on the support with the
/// data's sample spacing.
RiemannFields riemann_invariants(const CauchyData& data, const WaveSpeedModel& model);

/// Point values of (R0, S0); u0' by centered differences of step `delta`.
void riemann_at(const CauchyData& data, const WaveSpeedModel& model, double x, double delta,
                double& R, double& S);

/// E0 = 2 \int [u1^2 + (c(u0) u0')^2] dx by composite Simpson on the sample grid.
double total_energy(const CauchyData& data, const WaveSpeedModel& model);

/// \int (R0^2 + S0^2) dx on the same grid; equals total_energy analytically.
double total_energy_from_invariants(const CauchyData& data, const WaveSpeedModel& model);

/// Composite Simpson rule on uniform samples (trapezoid for the last panel when
/// the number of intervals is odd).
double simpson(const std::vector<double>& f, double dx);

struct GammaNode {
  double X = 0.0;
  double Y = 0.0;
  NodeState state;
};

/// The initial curve in the (X, Y) plane:
///   X(x) = x + \int_{-inf}^x R0^2,   Y(x) = -(x + \int_{-inf}^x S0^2).
/// X increases and Y decreases along the nodes. Beyond the first and last node
/// the curve continues as vacuum: X = x, Y = -x on the left and
/// X = x + e_minus, Y = -(x + e_plus) on the right.
struct BoundaryCurve {
  std::vector<GammaNode> nodes;
  int orientation = -1;   // sign of dY/dX along the curve
  double e_minus = 0.0;   // \int R0^2 over the whole line
  double e_plus = 0.0;    // \int S0^2 over the whole line
  double u_left = 0.0;    // u0 left of the first node
  double u_right = 0.0;   // u0 right of the last node
  double c_left = 1.0;    // c(u_left)
  double c_right = 1.0;   // c(u_right)

  double x_begin() const { return nodes.front().state.x; }
  double x_end() const { return nodes.back().state.x; }

  /// Largest node spacing in X and in |Y|.
  double max_spacing() const;
};

/// Builds the curve on [support.lo - margin, support.hi + margin] with
/// `n_nodes` nodes equally spaced in the arclength parameter s = X - Y.
/// Node positions are found by root-finding on the increasing map x -> s(x).
BoundaryCurve build_boundary_curve(const CauchyData& data, const WaveSpeedModel& model,
                                   int n_nodes, double margin = 0.5);

}  // namespace vwave
