#include "apkin/equilibrium.hpp"

#include <cmath>
#include <numbers>
#include <stdexcept>

#include "apkin/quadrature.hpp"

namespace apkin {

double heavy_tail_normalization(double beta) {
    if (beta <= 1.0 || beta >= 3.0)
        throw std::invalid_argument("heavy_tail_normalization: beta must lie in (1, 3)");

    const double cut = 100.0;
    const double body = integrate([beta](double v) { return 1.0 / (1.0 + std::pow(v, beta)); },
                                  0.0, cut, 1e-13);
    // integral_cut^inf dv / (1 + v^beta) expanded in powers of v^-beta.
    double tail = 0.0;
    double sign = 1.0;
    for (int n = 1; n <= 8; ++n) {
        tail += sign * std::pow(cut, 1.0 - n * beta) / (n * beta - 1.0);
        sign = -sign;
    }
    return 1.0 / (2.0 * (body + tail));
}

Equilibrium make_equilibrium(EquilibriumKind kind, double beta, const VelocityGrid& grid) {
    Equilibrium eq;
    eq.kind = kind;
    eq.grid = grid;

    if (kind == EquilibriumKind::Gaussian) {
        eq.beta = 0.0;
        eq.m = 1.0 / std::sqrt(2.0 * std::numbers::pi);
        eq.values = eq.m * (-0.5 * grid.nodes.square()).exp();
    } else {
        eq.beta = beta;
        eq.m = heavy_tail_normalization(beta);
        eq.values = eq.m / (1.0 + grid.nodes.abs().pow(beta));
    }

    // Renormalize so the discrete mass is 1 to the last ulp; a second pass
    // removes the rounding left by the first division.
    for (int pass = 0; pass < 2; ++pass)
        eq.values /= (grid.weights * eq.values).sum();
    return eq;
}

double discrete_moment(const Equilibrium& eq, int p) {
    if (p < 0) throw std::invalid_argument("discrete_moment: p must be nonnegative");
    return (eq.grid.weights * eq.grid.nodes.pow(p) * eq.values).sum();
}

double discrete_kappa(const Equilibrium& eq) {
    if (eq.kind != EquilibriumKind::HeavyTail)
        throw std::invalid_argument("discrete_kappa: requires a heavy-tail equilibrium");
    const auto& v = eq.grid.nodes;
    return (eq.grid.weights * (eq.m / v.abs().pow(eq.beta)) * v.square() / (1.0 + v.square()))
        .sum();
}

}  // namespace apkin
