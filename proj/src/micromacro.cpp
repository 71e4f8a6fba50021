#include "apkin/micromacro.hpp"

#include <cmath>
#include <stdexcept>

namespace apkin {

Eigen::ArrayXd DerivativeOperator::apply(const Eigen::ArrayXd& field, double sign) const {
    const Eigen::Index n = field.size();
    Eigen::ArrayXd out(n);
    auto wrap = [n](Eigen::Index j) { return (j + n) % n; };
    if (kind == StencilKind::Centered2) {
        for (Eigen::Index j = 0; j < n; ++j)
            out[j] = (field[wrap(j + 1)] - field[wrap(j - 1)]) / (2.0 * dx);
    } else if (sign >= 0.0) {
        for (Eigen::Index j = 0; j < n; ++j)
            out[j] = (field[j] - field[wrap(j - 1)]) / dx;
    } else {
        for (Eigen::Index j = 0; j < n; ++j)
            out[j] = (field[wrap(j + 1)] - field[j]) / dx;
    }
    return out;
}

MicroMacroState make_micromacro_state(const SpatialGrid& sgrid, const Equilibrium& eq, double eps,
                                      double dt, double alpha) {
    if (eps <= 0.0 || dt <= 0.0)
        throw std::invalid_argument("make_micromacro_state: eps and dt must be positive");
    MicroMacroState state;
    state.rho = initial_density(sgrid);
    state.g = Eigen::MatrixXd::Zero(eq.grid.nv, sgrid.nx);
    state.eps = eps;
    state.dt = dt;
    state.alpha = alpha;
    return state;
}

double cfl_max_dt(double eps, double alpha, double dx, double vmax) {
    return 0.9 * std::max(std::pow(eps, alpha), dx * std::pow(eps, alpha - 1.0) / vmax);
}

namespace {

// Shared stiff g update; returns <v dx_g^n> (the flux entering the density
// equation) computed from the pre-update g.
Eigen::ArrayXd update_g(MicroMacroState& state, const SpatialGrid& sgrid, const Equilibrium& eq) {
    const double dx = 2.0 * sgrid.half_width / sgrid.nx;
    const DerivativeOperator centered{StencilKind::Centered2, dx};
    const DerivativeOperator upwind{StencilKind::Upwind1, dx};
    const auto& v = eq.grid.nodes;
    const auto& w = eq.grid.weights;

    const double ea = std::pow(state.eps, state.alpha);
    const double transport = state.dt * state.eps / ea;
    const double relax = 1.0 + state.dt / ea;

    const Eigen::ArrayXd dx_rho = centered.apply(state.rho);
    Eigen::MatrixXd dx_g(eq.grid.nv, sgrid.nx);
    for (int i = 0; i < eq.grid.nv; ++i)
        dx_g.row(i) = upwind.apply(state.g.row(i).array().transpose(), v[i]).transpose();

    Eigen::ArrayXd flux = Eigen::ArrayXd::Zero(sgrid.nx);
    for (int i = 0; i < eq.grid.nv; ++i)
        flux += w[i] * v[i] * dx_g.row(i).array().transpose();

    for (int i = 0; i < eq.grid.nv; ++i) {
        const Eigen::ArrayXd source = v[i] * (dx_rho * eq.values[i] + dx_g.row(i).array().transpose()) -
                                      flux * eq.values[i];
        state.g.row(i) = ((state.g.row(i).array().transpose() - transport * source) / relax)
                             .transpose();
    }
    return flux;
}

}  // namespace

void mmsd_step(MicroMacroState& state, const SpatialGrid& sgrid, const Equilibrium& eq) {
    update_g(state, sgrid, eq);

    const double dx = 2.0 * sgrid.half_width / sgrid.nx;
    const DerivativeOperator upwind{StencilKind::Upwind1, dx};
    const double transport = state.dt * state.eps / std::pow(state.eps, state.alpha);

    Eigen::ArrayXd flux_new = Eigen::ArrayXd::Zero(sgrid.nx);
    for (int i = 0; i < eq.grid.nv; ++i)
        flux_new += eq.grid.weights[i] * eq.grid.nodes[i] *
                    upwind.apply(state.g.row(i).array().transpose(), eq.grid.nodes[i]);
    state.rho -= transport * flux_new;
}

void mmsa_step(MicroMacroState& state, const SpatialGrid& sgrid, const Equilibrium& eq) {
    if (eq.kind != EquilibriumKind::HeavyTail)
        throw std::invalid_argument("mmsa_step: requires a heavy-tail equilibrium");

    const Eigen::ArrayXd flux = update_g(state, sgrid, eq);

    const double ea = std::pow(state.eps, state.alpha);
    const double lam = state.dt / (ea + state.dt);
    SpectralDensity rho_hat = to_spectral(sgrid, state.rho);
    const SpectralDensity flux_hat = to_spectral(sgrid, flux);

    for (int p = 0; p < sgrid.nx; ++p) {
        const double k = std::abs(sgrid.modes[p]);
        double theta = 0.0;
        if (k > 0.0) {
            const double scale_b = std::pow(state.eps * lam * k, eq.beta);
            for (int i = 0; i < eq.grid.nv; ++i) {
                const double u = eq.grid.nodes[i];
                theta += eq.grid.weights[i] * u * u / (1.0 + u * u) * eq.m /
                         (scale_b + std::pow(std::abs(u), eq.beta));
            }
        }
        rho_hat[p] = (rho_hat[p] - state.dt * (state.eps / (ea + state.dt)) * flux_hat[p]) /
                     (1.0 + state.dt * std::pow(lam, state.alpha) * std::pow(k, state.alpha) * theta);
    }
    state.rho = from_spectral(sgrid, rho_hat);
}

}  // namespace apkin
