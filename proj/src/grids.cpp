#include "apkin/grids.hpp"

#include <numbers>
#include <stdexcept>

namespace apkin {

SpatialGrid make_spatial_grid(int nx, double half_width) {
    if (nx <= 0 || nx % 2 != 0)
        throw std::invalid_argument("make_spatial_grid: nx must be even and positive");
    if (half_width <= 0.0)
        throw std::invalid_argument("make_spatial_grid: half_width must be positive");

    SpatialGrid grid;
    grid.half_width = half_width;
    grid.nx = nx;
    grid.nodes.resize(nx);
    grid.modes.resize(nx);
    const double dx = 2.0 * half_width / nx;
    for (int j = 0; j < nx; ++j) {
        grid.nodes[j] = -half_width + j * dx;
        grid.modes[j] = std::numbers::pi * (j - nx / 2) / half_width;
    }
    return grid;
}

VelocityGrid make_velocity_grid(int nv, double vmax) {
    if (nv <= 0 || nv % 2 != 0)
        throw std::invalid_argument("make_velocity_grid: nv must be even and positive");
    if (vmax <= 0.0)
        throw std::invalid_argument("make_velocity_grid: vmax must be positive");

    VelocityGrid grid;
    grid.vmax = vmax;
    grid.nv = nv;
    grid.nodes.resize(nv);
    const double dv = 2.0 * vmax / nv;
    for (int i = 0; i < nv; ++i)
        grid.nodes[i] = (i + 0.5 - nv / 2) * dv;
    grid.weights = Eigen::ArrayXd::Constant(nv, dv);
    return grid;
}

}  // namespace apkin
