#pragma once

#include <span>
#include <string>
#include <vector>

#include "lanesim/grid.hpp"
#include "lanesim/state.hpp"

namespace lanesim {

/// Initial density profiles.
///   Constant  value on the whole domain
///   SinSq     sin(pi x / 2)^2 on [0,2], zero outside
///   BumpQ     q(scale*x + shift) with q(y) = 4 y^2 (1-y)^2 on (0,1)
///   Riemann   left for x < x0, right for x >= x0
struct ProfileSpec {
  enum class Kind { Constant, SinSq, BumpQ, Riemann };
  Kind kind = Kind::Constant;
  double value = 0.0;               // Constant
  double scale = 1.0, shift = 0.0;  // BumpQ argument map
  double left = 0.0, right = 0.0, x0 = 0.0;  // Riemann
};

double profile_value(const ProfileSpec& p, double x);

/// Cell averages by 5-point Gauss-Legendre quadrature per cell (exact to
/// ~1e-10 for the smooth shipped profiles). Riemann data is averaged in
/// closed form so a jump inside a cell still yields the exact mean.
std::vector<double> cell_averages(const ProfileSpec& p, const Grid1D& grid);

/// Builds the t=0 state from one profile per lane. Rejects profiles leaving
/// [0,1] anywhere on the grid.
LaneGridState init_from_profile(std::span<const ProfileSpec> profiles, const Grid1D& grid);

/// Config spellings: "constant:value=0.3", "sin_sq",
/// "bump_q[:scale=..,shift=..]", "riemann:left=..,right=..,x0=..".
ProfileSpec profile_from_string(const std::string& text);
std::string profile_to_string(const ProfileSpec& p);

}  // namespace lanesim
