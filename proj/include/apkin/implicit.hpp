#pragma once

#include "apkin/spectral.hpp"

namespace apkin {

/// State of the fully implicit spectral schemes: the phase-space amplitudes
/// f_hat(v_i, k_p) and the matching density amplitudes.
struct ImplicitState {
    SpectralPhaseSpace f;
    SpectralDensity rho;
    double eps = 1.0;
    double dt = 1e-3;
    double alpha = 2.0;

    double lambda() const { return dt / (std::pow(eps, alpha) + dt); }
};

/// Initializes f = rho_hat_0(k) M(v) from the standard 1 + sin profile.
ImplicitState make_implicit_state(const SpatialGrid& sgrid, const Equilibrium& eq, double eps,
                                  double dt, double alpha);

/// Implicit step targeting the diffusion limit: per mode,
///   rho^{n+1} = <f^n / (1 + i lam eps k v)> /
///     (<M / (1 + i lam eps k v)> + <i lam eps k v M / (1 + i lam eps k v)> / (1 - lam)),
///   f^{n+1}   = ((1 - lam) f^n + lam rho^{n+1} M) / (1 + i lam eps k v),
/// with lam = dt / (eps^alpha + dt).
void isd_step(ImplicitState& state, const SpatialGrid& sgrid, const Equilibrium& eq);

/// Implicit step targeting the fractional limit: same update with the second
/// denominator term replaced by the rescaled heavy-tail symbol
///   (lam eps |k|)^alpha / (1 - lam) *
///     sum_i w_i m / ((lam eps |k|)^beta + |v_i|^beta) * v_i^2 / (1 + v_i^2),
/// evaluated on wgrid (zero at k = 0). Requires a heavy-tail equilibrium.
void isa_step(ImplicitState& state, const SpatialGrid& sgrid, const Equilibrium& eq,
              const VelocityGrid& wgrid);

/// Overload reusing the equilibrium's own velocity grid for the symbol sum.
void isa_step(ImplicitState& state, const SpatialGrid& sgrid, const Equilibrium& eq);

}  // namespace apkin
