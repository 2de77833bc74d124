#pragma once

namespace vwave {

/// The nine characteristic-plane unknowns at one (X, Y) point.
///   u      solution value
///   x, t   physical position and time
///   p, q   relabelling weights (strictly positive)
///   nu     1/(1+R^2),  eta  1/(1+S^2)
///   xi     R/(1+R^2),  zeta S/(1+S^2)
/// The circle relations xi^2 = nu(1-nu), zeta^2 = eta(1-eta) hold exactly on
/// the initial curve and are propagated by the semilinear system.
struct NodeState {
  double u = 0.0;
  double x = 0.0;
  double t = 0.0;
  double p = 1.0;
  double q = 1.0;
  double nu = 1.0;
  double eta = 1.0;
  double xi = 0.0;
  double zeta = 0.0;

  /// The state carried by a point where R = S = 0.
  static NodeState vacuum(double u, double x, double t, double p = 1.0, double q = 1.0) {
    NodeState s;
    s.u = u;
    s.x = x;
    s.t = t;
    s.p = p;
    s.q = q;
    return s;
  }

  bool is_vacuum() const { return xi == 0.0 && zeta == 0.0 && nu == 1.0 && eta == 1.0; }
};

/// Linear interpolation of every component.
inline NodeState lerp(const NodeState& a, const NodeState& b, double w) {
  NodeState s;
  s.u = a.u + w * (b.u - a.u);
  s.x = a.x + w * (b.x - a.x);
  s.t = a.t + w * (b.t - a.t);
  s.p = a.p + w * (b.p - a.p);
  s.q = a.q + w * (b.q - a.q);
  s.nu = a.nu + w * (b.nu - a.nu);
  s.eta = a.eta + w * (b.eta - a.eta);
  s.xi = a.xi + w * (b.xi - a.xi);
  s.zeta = a.zeta + w * (b.zeta - a.zeta);
  return s;
}

/// State of a point whose Riemann invariants are (R, S).
inline NodeState state_from_invariants(double u, double x, double t, double R, double S) {
  NodeState s;
  s.u = u;
  s.x = x;
  s.t = t;
  s.nu = 1.0 / (1.0 + R * R);
  s.eta = 1.0 / (1.0 + S * S);
  s.xi = R / (1.0 + R * R);
  s.zeta = S / (1.0 + S * S);
  return s;
}

}  // namespace vwave
