#pragma once

#include <Eigen/Dense>

#include "apkin/grids.hpp"

namespace apkin {

enum class EquilibriumKind { Gaussian, HeavyTail };

/// Velocity equilibrium sampled on a grid. For HeavyTail the profile is
/// M(v) = m / (1 + |v|^beta) with m chosen so the continuous integral is 1;
/// for Gaussian it is the standard normal density. In both cases the sampled
/// values are renormalized so that sum(w_i * M_i) == 1 exactly in floating
/// point, which makes the discrete schemes conserve mass to rounding.
struct Equilibrium {
    EquilibriumKind kind = EquilibriumKind::Gaussian;
    double beta = 0.0;  // tail exponent (HeavyTail only)
    double m = 0.0;     // continuous normalization constant
    VelocityGrid grid;
    Eigen::ArrayXd values;
};

/// beta is ignored for Gaussian; for HeavyTail it must lie in (1, 3).
Equilibrium make_equilibrium(EquilibriumKind kind, double beta, const VelocityGrid& grid);

/// Continuous normalization of 1 / (1 + |v|^beta) on the real line,
/// computed by adaptive quadrature plus an analytic tail expansion.
double heavy_tail_normalization(double beta);

/// Discrete moment sum(w_i * v_i^p * M_i), p >= 0.
double discrete_moment(const Equilibrium& eq, int p);

/// Discrete fractional diffusion coefficient
/// sum(w_i * m / |v_i|^beta * v_i^2 / (1 + v_i^2)); HeavyTail only.
double discrete_kappa(const Equilibrium& eq);

}  // namespace apkin
