#pragma once

#include <complex>

#include "apkin/spectral.hpp"

namespace apkin {

enum class LimitKind { Diffusion, Anomalous };

/// Mode-wise implicit Euler for the limiting heat / fractional heat equation.
/// The decay symbol is sigma(k) = coeff * k^2 (Diffusion) or
/// sigma(k) = coeff * |k|^alpha (Anomalous).
struct LimitConfig {
    LimitKind kind = LimitKind::Diffusion;
    double coeff = 1.0;
    double alpha = 2.0;  // used by Anomalous only
    double dt = 1e-3;
};

double limit_symbol(double k, const LimitConfig& cfg);

/// rho_hat(k) <- rho_hat(k) / (1 + dt * sigma(k)).
void limit_step(SpectralDensity& rho, const LimitConfig& cfg, const SpatialGrid& grid);

/// Exact semigroup amplitude exp(-sigma(k) t).
std::complex<double> exact_limit_amplitude(double t, double k, const LimitConfig& cfg);

/// Applies the exact amplitude to initial spectral data.
SpectralDensity exact_limit_solution(double t, const SpectralDensity& rho0, const LimitConfig& cfg,
                                     const SpatialGrid& grid);

}  // namespace apkin
