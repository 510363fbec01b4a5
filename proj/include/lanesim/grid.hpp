#pragma once

namespace lanesim {

/// Topology of the truncated computational domain. ZeroPad reads vanishing
/// densities outside the domain (whole-line problems with compact support,
/// kept away from the edges by the run validator); Periodic wraps all
/// stencils around.
enum class BoundaryMode { ZeroPad, Periodic };

/// Uniform 1-D mesh. Cell k covers [x_min + k*dx, x_min + (k+1)*dx); the
/// domain is an exact integer number of cells (x_max is snapped to
/// x_min + n_cells*dx at construction, within the admission tolerance).
struct Grid1D {
  double x_min = 0.0;
  double x_max = 0.0;
  double dx = 0.0;
  int n_cells = 0;
  BoundaryMode boundary = BoundaryMode::ZeroPad;

  double cell_center(int k) const { return x_min + (k + 0.5) * dx; }
  double left_interface(int k) const { return x_min + k * dx; }
  double right_interface(int k) const { return x_min + (k + 1) * dx; }
  bool periodic() const { return boundary == BoundaryMode::Periodic; }

  bool same_mesh(const Grid1D& o) const {
    return n_cells == o.n_cells && x_min == o.x_min && dx == o.dx && boundary == o.boundary;
  }
};

/// Builds a uniform grid. Requires 0 < dx < 1 (the cell width must stay below
/// one for the scheme's stability argument) and (x_max-x_min)/dx within 1e-9
/// relative of an integer.
Grid1D build_grid(double x_min, double x_max, double dx,
                  BoundaryMode boundary = BoundaryMode::ZeroPad);

}  // namespace lanesim
