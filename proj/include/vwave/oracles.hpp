#pragma once

#include <vector>

#include "vwave/initial_data.hpp"
#include "vwave/reconstruct.hpp"
#include "vwave/wavespeed.hpp"

namespace vwave {

/// Closed-form solution for constant speed c:
///   u = [u0(x+ct) + u0(x-ct)]/2 + (1/2c) \int_{x-ct}^{x+ct} u1.
double dalembert(const CauchyData& data, double c, double t, double x);

/// Time levels of an Eulerian solution on x_k = x0 + k dx.
struct FieldLattice {
  double x0 = 0.0;
  double dx = 1.0;
  std::vector<double> t;
  std::vector<std::vector<double>> u;
  std::vector<std::vector<double>> R;
  std::vector<std::vector<double>> S;

  std::size_t nx() const { return u.empty() ? 0 : u.front().size(); }
  double x(std::size_t k) const { return x0 + dx * static_cast<double>(k); }
};

enum class FdStatus { completed, blowup };

struct FdOptions {
  double cfl = 0.45;          // dt = cfl * dx / M
  int store_every = 1;        // keep every n-th time level (0: first and last only)
  double blowup_factor = 10;  // abort once max(|R|,|S|) exceeds this times its initial value
  double pad = 1.0;           // extra room beyond support + M t_end on both sides
};

struct FdResult {
  FdStatus status = FdStatus::completed;
  double t_reached = 0.0;        // time of the last accepted level
  double initial_max = 0.0;      // max(|R|,|S|) at t = 0
  FieldLattice fields;
  std::vector<double> energy_t;  // \int (R^2 + S^2) dx after every step
  std::vector<double> energy;
  std::vector<double> peak;      // max(|R|,|S|) after every step
  double max_energy_drift = 0.0;
};

/// Second-order upwind finite differences for
///   R_t - c R_x = c'/(4c) (R^2 - S^2),  S_t + c S_x = c'/(4c) (S^2 - R^2),
///   u_t = (R + S)/2
/// with Heun time stepping. On gradient blow-up the march stops and the
/// result carries status blowup and the last accepted time. Throws
/// ValidationError for a CFL number outside (0, 0.45].
FdResult fd_solve(const CauchyData& data, const WaveSpeedModel& model, double t_end, double dx,
                  const FdOptions& opts = {});

/// Snapshot of a stored level in the same layout as the characteristic-plane
/// reconstruction (no atoms, no energy measures).
PhysicalSnapshot fd_snapshot(const FieldLattice& f, std::size_t level, const WaveSpeedModel& model);

}  // namespace vwave
