#include "lanesim/velocity.hpp"

#include <cmath>
#include <utility>

#include "lanesim/errors.hpp"

namespace lanesim {

VelocityModel::VelocityModel(std::vector<LaneVelocity> lanes) : lanes_(std::move(lanes)) {
  if (lanes_.empty()) {
    fail(Errc::DegenerateVelocity, "velocity model needs at least one lane");
  }
  for (const LaneVelocity& l : lanes_) {
    if (l.law == VelocityLaw::LinearGreenshields && !(l.a > 0.0)) {
      fail(Errc::DegenerateVelocity, "linear law requires a > 0");
    }
  }
  for (int j = 0; j < lane_count(); ++j) {
    vmax_ = std::max(vmax_, lane_max_velocity(j));
    dvmax_ = std::max(dvmax_, lane_max_velocity_slope(j));
    ddvmax_ = std::max(ddvmax_, lanes_[static_cast<size_t>(j)].law == VelocityLaw::QuadraticConcave ? 2.0 : 0.0);
  }
}

double VelocityModel::velocity(int lane, double u) const {
  const LaneVelocity& l = lanes_[static_cast<size_t>(lane)];
  return l.law == VelocityLaw::LinearGreenshields ? l.a * (1.0 - u) : 1.0 - u * u;
}

double VelocityModel::velocity_slope(int lane, double u) const {
  const LaneVelocity& l = lanes_[static_cast<size_t>(lane)];
  return l.law == VelocityLaw::LinearGreenshields ? -l.a : -2.0 * u;
}

double VelocityModel::theta(int lane) const {
  const LaneVelocity& l = lanes_[static_cast<size_t>(lane)];
  // argmax of a*u*(1-u) is 1/2; argmax of u*(1-u^2) is 1/sqrt(3)
  return l.law == VelocityLaw::LinearGreenshields ? 0.5 : 1.0 / std::sqrt(3.0);
}

double VelocityModel::lane_max_velocity(int j) const {
  const LaneVelocity& l = lanes_[static_cast<size_t>(j)];
  return l.law == VelocityLaw::LinearGreenshields ? l.a : 1.0;
}

double VelocityModel::lane_max_velocity_slope(int j) const {
  const LaneVelocity& l = lanes_[static_cast<size_t>(j)];
  return l.law == VelocityLaw::LinearGreenshields ? l.a : 2.0;
}

double VelocityModel::source_lipschitz() const { return std::max(vmax_, 2.0 * dvmax_); }

LaneVelocity velocity_from_string(const std::string& text) {
  if (text == "quadratic") {
    return LaneVelocity{VelocityLaw::QuadraticConcave, 0.0};
  }
  const std::string prefix = "linear:a=";
  if (text.rfind(prefix, 0) == 0) {
    try {
      size_t used = 0;
      const double a = std::stod(text.substr(prefix.size()), &used);
      if (used == text.size() - prefix.size()) {
        return LaneVelocity{VelocityLaw::LinearGreenshields, a};
      }
    } catch (const std::exception&) {
    }
  }
  fail(Errc::SchemaError, "unknown velocity law '" + text + "' (expected linear:a=<float> or quadratic)");
}

std::string velocity_to_string(const LaneVelocity& lane) {
  if (lane.law == VelocityLaw::QuadraticConcave) return "quadratic";
  return "linear:a=" + std::to_string(lane.a);
}

}  // namespace lanesim
