#pragma once

#include <Eigen/Dense>

#include "apkin/spectral.hpp"

namespace apkin {

enum class StencilKind { Upwind1, Centered2 };

/// Periodic finite-difference derivative on the spatial grid. Upwind1 picks
/// the one-sided difference against the sign passed to apply; Centered2 is
/// the usual second-order stencil (sign ignored).
struct DerivativeOperator {
    StencilKind kind = StencilKind::Centered2;
    double dx = 1.0;

    Eigen::ArrayXd apply(const Eigen::ArrayXd& field, double sign = 0.0) const;
};

/// Micro-macro state: density rho(x_j) and the zero-mean perturbation
/// g(v_i, x_j) (row i = velocity node, column j = spatial node).
struct MicroMacroState {
    Eigen::ArrayXd rho;
    Eigen::MatrixXd g;
    double eps = 1.0;
    double dt = 1e-3;
    double alpha = 2.0;
};

MicroMacroState make_micromacro_state(const SpatialGrid& sgrid, const Equilibrium& eq, double eps,
                                      double dt, double alpha);

/// Advisory explicit-transport bound 0.9 * max(eps^alpha, dx * eps^(alpha-1) / vmax).
double cfl_max_dt(double eps, double alpha, double dx, double vmax);

/// Micro-macro step targeting the diffusion limit:
///   g <- (g - dt eps^{1-alpha} (v dx_rho M + v dx_g - <v dx_g> M)) / (1 + dt / eps^alpha)
///   rho <- rho - dt eps^{1-alpha} <v dx_g_new>
/// with centered differences on rho and upwind differences on g.
void mmsd_step(MicroMacroState& state, const SpatialGrid& sgrid, const Equilibrium& eq);

/// Micro-macro step targeting the fractional limit: the g update matches
/// mmsd_step; the density update is solved per Fourier mode,
///   rho_hat <- (rho_hat - dt eps/(eps^alpha + dt) F<v dx_g>) /
///              (1 + dt lam^alpha |k|^alpha Theta(eps, lam, k)),
/// where Theta is the heavy-tail symbol sum on the equilibrium grid.
void mmsa_step(MicroMacroState& state, const SpatialGrid& sgrid, const Equilibrium& eq);

}  // namespace apkin
