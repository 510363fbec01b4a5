#include "lanesim/grid.hpp"

#include <cmath>
#include <string>

#include "lanesim/errors.hpp"

namespace lanesim {

Grid1D build_grid(double x_min, double x_max, double dx, BoundaryMode boundary) {
  if (!(dx > 0.0) || dx >= 1.0) {
    fail(Errc::InvalidCellWidth, "cell width must satisfy 0 < dx < 1, got " + std::to_string(dx));
  }
  const double length = x_max - x_min;
  if (!(length > 0.0)) {
    fail(Errc::NonIntegerCellCount, "domain length must be positive");
  }
  const double ratio = length / dx;
  const long long n = std::llround(ratio);
  if (n < 1 || std::abs(ratio - static_cast<double>(n)) > 1e-9 * std::max(1.0, ratio)) {
    fail(Errc::NonIntegerCellCount,
         "domain length " + std::to_string(length) + " is not an integer multiple of dx " +
             std::to_string(dx));
  }
  Grid1D g;
  g.x_min = x_min;
  g.dx = dx;
  g.n_cells = static_cast<int>(n);
  g.x_max = x_min + static_cast<double>(n) * dx;
  g.boundary = boundary;
  return g;
}

}  // namespace lanesim
