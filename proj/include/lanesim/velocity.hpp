#pragma once

#include <string>
#include <vector>

namespace lanesim {

/// Per-lane velocity laws. Both families are strictly decreasing on [0,1]
/// with v(1) = 0, and their fluxes f(u) = u*v(u) are unimodal with a unique
/// interior maximizer.
enum class VelocityLaw {
  LinearGreenshields,  // v(u) = a*(1-u), a > 0
  QuadraticConcave,    // v(u) = 1 - u^2
};

struct LaneVelocity {
  VelocityLaw law = VelocityLaw::LinearGreenshields;
  double a = 1.0;  // free-flow speed, LinearGreenshields only
};

/// One velocity law per lane plus the derived constants the CFL condition and
/// the diagnostics bounds use:
///   max_velocity        V_max  = max_j sup |v_j|
///   max_velocity_slope  V'_max = max_j sup |v_j'|
///   cfl_speed           V_max + V'_max  (Lipschitz bound of the numerical flux)
///   source_lipschitz    max{V_max, 2 V'_max} (Lipschitz bound of the lane-change rate)
class VelocityModel {
public:
  explicit VelocityModel(std::vector<LaneVelocity> lanes);

  int lane_count() const { return static_cast<int>(lanes_.size()); }
  const LaneVelocity& lane(int j) const { return lanes_[static_cast<size_t>(j)]; }

  double velocity(int lane, double u) const;
  double velocity_slope(int lane, double u) const;
  double flux(int lane, double u) const { return u * velocity(lane, u); }

  /// Maximizer of f_j on [0,1], in closed form per family.
  double theta(int lane) const;

  double lane_max_velocity(int j) const;
  double lane_max_velocity_slope(int j) const;

  double max_velocity() const { return vmax_; }
  double max_velocity_slope() const { return dvmax_; }
  double max_velocity_curvature() const { return ddvmax_; }
  double cfl_speed() const { return vmax_ + dvmax_; }
  double source_lipschitz() const;

private:
  std::vector<LaneVelocity> lanes_;
  double vmax_ = 0.0;
  double dvmax_ = 0.0;
  double ddvmax_ = 0.0;
};

/// Parses the config spelling: "linear:a=<float>" or "quadratic".
LaneVelocity velocity_from_string(const std::string& text);
std::string velocity_to_string(const LaneVelocity& lane);

}  // namespace lanesim
