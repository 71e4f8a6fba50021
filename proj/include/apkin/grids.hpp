#pragma once

#include <Eigen/Dense>

namespace apkin {

/// Uniform periodic grid on [-L, L) together with the Fourier modes
/// k_j = pi * j / L, j = -nx/2, ..., nx/2 - 1, stored in ascending order.
struct SpatialGrid {
    double half_width = 1.0;
    int nx = 0;
    Eigen::ArrayXd nodes;
    Eigen::ArrayXd modes;

    /// Column index of mode j (j in [-nx/2, nx/2)).
    int index_of_mode(int j) const { return j + nx / 2; }
    int zero_mode() const { return nx / 2; }
};

/// nx must be even and positive.
SpatialGrid make_spatial_grid(int nx, double half_width = 1.0);

/// Symmetric midpoint rule on [-vmax, vmax]: nodes sit at cell centers and
/// come in exact +/- pairs (v_i = (i + 1/2 - nv/2) * dv), weights are uniform.
struct VelocityGrid {
    double vmax = 0.0;
    int nv = 0;
    Eigen::ArrayXd nodes;
    Eigen::ArrayXd weights;
};

/// nv must be even and positive.
VelocityGrid make_velocity_grid(int nv, double vmax);

}  // namespace apkin
