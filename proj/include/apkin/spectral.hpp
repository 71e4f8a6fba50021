#pragma once

#include <Eigen/Dense>

#include "apkin/equilibrium.hpp"
#include "apkin/grids.hpp"

namespace apkin {

/// One complex amplitude per Fourier mode, indexed like SpatialGrid::modes.
using SpectralDensity = Eigen::ArrayXcd;

/// Phase-space amplitudes: row i = velocity node v_i, column p = mode k_p.
using SpectralPhaseSpace = Eigen::MatrixXcd;

/// Forward transform with the 1/nx convention, so amps[zero_mode] is the
/// spatial mean of the field.
SpectralDensity to_spectral(const SpatialGrid& grid, const Eigen::ArrayXd& values);

/// Inverse transform; returns the real part (the imaginary part of a
/// round-trip is at rounding level for real input).
Eigen::ArrayXd from_spectral(const SpatialGrid& grid, const SpectralDensity& amps);

/// Velocity average per mode: rho_hat(k) = sum_i w_i f_hat(v_i, k).
SpectralDensity reduce_density(const VelocityGrid& grid, const SpectralPhaseSpace& f);

/// Density profile 1 + sin(pi x / L) sampled on the grid.
Eigen::ArrayXd initial_density(const SpatialGrid& grid);

/// Spectral phase-space data rho_hat_0(k) * M(v_i) for the profile above.
SpectralPhaseSpace initial_condition(const SpatialGrid& grid, const Equilibrium& eq);

}  // namespace apkin
