#include "apkin/limits.hpp"

#include <cmath>
#include <stdexcept>

namespace apkin {

double limit_symbol(double k, const LimitConfig& cfg) {
    if (cfg.kind == LimitKind::Diffusion) return cfg.coeff * k * k;
    return cfg.coeff * std::pow(std::abs(k), cfg.alpha);
}

void limit_step(SpectralDensity& rho, const LimitConfig& cfg, const SpatialGrid& grid) {
    if (rho.size() != grid.nx)
        throw std::invalid_argument("limit_step: amplitude size does not match grid");
    for (int p = 0; p < grid.nx; ++p)
        rho[p] /= 1.0 + cfg.dt * limit_symbol(grid.modes[p], cfg);
}

std::complex<double> exact_limit_amplitude(double t, double k, const LimitConfig& cfg) {
    return std::exp(-limit_symbol(k, cfg) * t);
}

SpectralDensity exact_limit_solution(double t, const SpectralDensity& rho0, const LimitConfig& cfg,
                                     const SpatialGrid& grid) {
    SpectralDensity out(grid.nx);
    for (int p = 0; p < grid.nx; ++p)
        out[p] = rho0[p] * exact_limit_amplitude(t, grid.modes[p], cfg);
    return out;
}

}  // namespace apkin
