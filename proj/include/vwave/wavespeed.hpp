#pragma once

#include <string>
#include <utility>
#include <vector>

namespace vwave {

enum class SpeedKind { constant, affine_clamped, cosine, arctan_step, tabulated };

/// The wave speed c(u) together with bounds c0 <= c(u) < M and |c'(u)| < M,
/// certified on [u_min, u_max] by dense sampling.
///
/// Built-in kinds and their parameter lists:
///   constant        [c]
///   affine_clamped  [a, b, lo, hi]   c = clamp(a + b u, lo, hi)
///   cosine          [a, b]           c = a + b cos(u)
///   arctan_step     [a, b, w]        c = a + b (2/pi) atan(u / w)
///   tabulated       (u_k, c_k) pairs, natural cubic spline
///
/// Immutable after construction.
class WaveSpeedModel {
 public:
  double eval(double u) const;
  double deriv(double u) const;

  /// c and c' in one call; the solver's hot path.
  void eval_both(double u, double& c, double& dc) const;

  double c0() const { return c0_; }
  double M() const { return M_; }
  SpeedKind kind() const { return kind_; }
  const std::string& name() const { return name_; }
  const std::vector<double>& params() const { return params_; }
  std::pair<double, double> certified_range() const { return {u_min_, u_max_}; }

 private:
  friend WaveSpeedModel make_model(const std::string&, const std::vector<double>&, double, double);
  friend WaveSpeedModel make_tabulated_model(std::vector<double>, std::vector<double>, double, double);

  void certify();

  SpeedKind kind_ = SpeedKind::constant;
  std::string name_;
  std::vector<double> params_;
  double c0_ = 1.0;
  double M_ = 1.0;
  double u_min_ = -1.0;
  double u_max_ = 1.0;

  // natural cubic spline for the tabulated kind
  std::vector<double> knots_;
  std::vector<double> values_;
  std::vector<double> second_;
};

/// Builds a model by name and certifies its bounds on [u_min, u_max] with
/// 10^4 samples. Throws ValidationError on unknown names, bad parameter counts
/// or bound violations.
WaveSpeedModel make_model(const std::string& kind, const std::vector<double>& params,
                          double u_min = -10.0, double u_max = 10.0);

/// Tabulated speed from (u_k, c_k) samples. Bounds are taken from dense
/// sampling of the spline on [u_min, u_max].
WaveSpeedModel make_tabulated_model(std::vector<double> u, std::vector<double> c,
                                    double u_min, double u_max);

/// c'(u) / (2 c(u)), the coefficient in front of every source term.
double log_derivative_ratio(const WaveSpeedModel& model, double u);

}  // namespace vwave
