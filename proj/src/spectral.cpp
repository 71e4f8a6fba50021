#include "apkin/spectral.hpp"

#include <complex>
#include <numbers>
#include <stdexcept>

namespace apkin {

using namespace std::complex_literals;

SpectralDensity to_spectral(const SpatialGrid& grid, const Eigen::ArrayXd& values) {
    if (values.size() != grid.nx)
        throw std::invalid_argument("to_spectral: field size does not match grid");
    SpectralDensity amps(grid.nx);
    for (int p = 0; p < grid.nx; ++p) {
        std::complex<double> acc = 0.0;
        for (int j = 0; j < grid.nx; ++j)
            acc += values[j] * std::exp(-1.0i * grid.modes[p] * grid.nodes[j]);
        amps[p] = acc / static_cast<double>(grid.nx);
    }
    return amps;
}

Eigen::ArrayXd from_spectral(const SpatialGrid& grid, const SpectralDensity& amps) {
    if (amps.size() != grid.nx)
        throw std::invalid_argument("from_spectral: amplitude size does not match grid");
    Eigen::ArrayXd values(grid.nx);
    for (int j = 0; j < grid.nx; ++j) {
        std::complex<double> acc = 0.0;
        for (int p = 0; p < grid.nx; ++p)
            acc += amps[p] * std::exp(1.0i * grid.modes[p] * grid.nodes[j]);
        values[j] = acc.real();
    }
    return values;
}

SpectralDensity reduce_density(const VelocityGrid& grid, const SpectralPhaseSpace& f) {
    if (f.rows() != grid.nv)
        throw std::invalid_argument("reduce_density: row count does not match velocity grid");
    return (grid.weights.matrix().transpose() * f).transpose().array();
}

Eigen::ArrayXd initial_density(const SpatialGrid& grid) {
    return 1.0 + (std::numbers::pi * grid.nodes / grid.half_width).sin();
}

SpectralPhaseSpace initial_condition(const SpatialGrid& grid, const Equilibrium& eq) {
    const SpectralDensity rho0 = to_spectral(grid, initial_density(grid));
    return eq.values.matrix() * rho0.matrix().transpose();
}

}  // namespace apkin
