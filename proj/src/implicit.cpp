#include "apkin/implicit.hpp"

#include <cmath>
#include <complex>
#include <stdexcept>

namespace apkin {

using namespace std::complex_literals;

ImplicitState make_implicit_state(const SpatialGrid& sgrid, const Equilibrium& eq, double eps,
                                  double dt, double alpha) {
    if (eps <= 0.0 || dt <= 0.0)
        throw std::invalid_argument("make_implicit_state: eps and dt must be positive");
    ImplicitState state;
    state.f = initial_condition(sgrid, eq);
    state.rho = reduce_density(eq.grid, state.f);
    state.eps = eps;
    state.dt = dt;
    state.alpha = alpha;
    return state;
}

namespace {

template <class DenomCorrection>
void implicit_step(ImplicitState& state, const SpatialGrid& sgrid, const Equilibrium& eq,
                   DenomCorrection&& correction) {
    const double lam = state.lambda();
    // 1 - lam evaluated directly; the subtraction loses up to eps^alpha / dt
    // in relative terms once lam is rounded to 1.
    const double one_minus_lam =
        std::pow(state.eps, state.alpha) / (std::pow(state.eps, state.alpha) + state.dt);
    const auto& v = eq.grid.nodes;
    const auto& w = eq.grid.weights;
    const auto& M = eq.values;

    for (int p = 0; p < sgrid.nx; ++p) {
        const double k = sgrid.modes[p];
        std::complex<double> num = 0.0, den = 0.0;
        for (int i = 0; i < eq.grid.nv; ++i) {
            const std::complex<double> z = 1.0 + 1.0i * (lam * state.eps * k * v[i]);
            num += w[i] * state.f(i, p) / z;
            den += w[i] * M[i] / z;
        }
        den += correction(p, k) / one_minus_lam;
        const std::complex<double> rho_new = num / den;
        for (int i = 0; i < eq.grid.nv; ++i) {
            const std::complex<double> z = 1.0 + 1.0i * (lam * state.eps * k * v[i]);
            state.f(i, p) = (one_minus_lam * state.f(i, p) + lam * rho_new * M[i]) / z;
        }
        state.rho[p] = rho_new;
    }
}

}  // namespace

void isd_step(ImplicitState& state, const SpatialGrid& sgrid, const Equilibrium& eq) {
    const double lam = state.lambda();
    const auto& v = eq.grid.nodes;
    const auto& w = eq.grid.weights;
    const auto& M = eq.values;
    implicit_step(state, sgrid, eq, [&](int, double k) {
        std::complex<double> acc = 0.0;
        for (int i = 0; i < eq.grid.nv; ++i) {
            const std::complex<double> ikv = 1.0i * (lam * state.eps * k * v[i]);
            acc += w[i] * M[i] * ikv / (1.0 + ikv);
        }
        return acc;
    });
}

void isa_step(ImplicitState& state, const SpatialGrid& sgrid, const Equilibrium& eq,
              const VelocityGrid& wgrid) {
    if (eq.kind != EquilibriumKind::HeavyTail)
        throw std::invalid_argument("isa_step: requires a heavy-tail equilibrium");
    const double lam = state.lambda();
    const double beta = eq.beta;
    implicit_step(state, sgrid, eq, [&](int, double k) -> std::complex<double> {
        if (k == 0.0) return 0.0;
        const double scale = lam * state.eps * std::abs(k);
        const double scale_b = std::pow(scale, beta);
        double acc = 0.0;
        for (int i = 0; i < wgrid.nv; ++i) {
            const double u = wgrid.nodes[i];
            acc += wgrid.weights[i] * eq.m / (scale_b + std::pow(std::abs(u), beta)) * u * u /
                   (1.0 + u * u);
        }
        return std::pow(scale, state.alpha) * acc;
    });
}

void isa_step(ImplicitState& state, const SpatialGrid& sgrid, const Equilibrium& eq) {
    isa_step(state, sgrid, eq, eq.grid);
}

}  // namespace apkin
