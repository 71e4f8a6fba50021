#include "apkin/duhamel.hpp"

#include <cmath>
#include <stdexcept>

namespace apkin {

using namespace std::complex_literals;
using cd = std::complex<double>;

namespace {

// exp on the left half-plane; flushes to zero once the modulus underflows,
// which keeps huge u_j = j dt / eps^alpha finite.
cd exp_left(cd w) {
    if (w.real() < -700.0) return 0.0;
    return std::exp(w);
}

}  // namespace

std::pair<cd, cd> coeffs_diffusion(int j, double k, double eps, double dt,
                                   const Equilibrium& eq) {
    const double tau = dt / (eps * eps);
    const double u = j * tau;
    cd b = 0.0, c = 0.0;
    for (int i = 0; i < eq.grid.nv; ++i) {
        const cd z = 1.0 + 1.0i * (eps * k * eq.grid.nodes[i]);
        const cd ej = exp_left(-u * z);
        const cd ejp = exp_left(-(u + tau) * z);
        const cd shared = ej * (1.0 - exp_left(-tau * z)) / (tau * z * z);
        b += eq.grid.weights[i] * eq.values[i] * (shared - ejp / z);
        c += eq.grid.weights[i] * eq.values[i] * (ej / z - shared);
    }
    return {b, c};
}

std::pair<cd, cd> coeffs_anomalous(int j, double k, double eps, double dt, double alpha,
                                   const Equilibrium& eq) {
    const double beta = eq.beta;
    const double ea = std::pow(eps, alpha);
    const double tau = dt / ea;
    const double u = j * tau;
    const double et = u > 700.0 ? 0.0 : std::exp(-u);
    const double ramp = -std::expm1(-tau) / tau;  // (1 - e^{-tau}) / tau
    const double time_b = ramp - std::exp(-tau);
    const double time_c = 1.0 - ramp;

    const double ka = std::pow(eps * std::abs(k), alpha);
    if (k == 0.0) return {et * time_b, et * time_c};

    const double scale_b = std::pow(eps * std::abs(k), beta);
    double s0 = 0.0;
    cd bsum = 0.0, csum = 0.0;
    for (int i = 0; i < eq.grid.nv; ++i) {
        const double v = eq.grid.nodes[i];
        const double kern = eq.grid.weights[i] * eq.m / (scale_b + std::pow(std::abs(v), beta));
        s0 += kern;
        const cd zv = 1.0 + 1.0i * v;
        const cd ej = exp_left(-u * zv);
        const cd ejp = exp_left(-(u + tau) * zv);
        const cd shared = ej * (1.0 - exp_left(-tau * zv)) / (tau * zv * zv);
        bsum += kern * (shared - ejp / zv);
        csum += kern * (ej / zv - shared);
    }
    const double weight = 1.0 - ka * s0;
    return {et * time_b * weight + ka * bsum, et * time_c * weight + ka * csum};
}

cd one_minus_c0_diffusion(double k, double eps, double dt, const Equilibrium& eq) {
    // 1 - c_0 = <(1 - 1/z) M> + <(1 - e^{-tau z}) / (tau z^2) M>
    //         = <i eps k v / z M> + <shared M>.
    const double tau = dt / (eps * eps);
    cd acc = 0.0;
    for (int i = 0; i < eq.grid.nv; ++i) {
        const cd z = 1.0 + 1.0i * (eps * k * eq.grid.nodes[i]);
        const cd shared = (1.0 - exp_left(-tau * z)) / (tau * z * z);
        acc += eq.grid.weights[i] * eq.values[i] *
               (1.0i * (eps * k * eq.grid.nodes[i]) / z + shared);
    }
    return acc;
}

cd one_minus_c0_anomalous(double k, double eps, double dt, double alpha, const Equilibrium& eq) {
    // With c_0 = time_c (1 - ka s0) + ka csum and time_c = 1 - ramp,
    // 1 - c_0 = ramp (1 - ka s0) + ka <kern (i v / zv + shared)>.
    const double beta = eq.beta;
    const double tau = dt / std::pow(eps, alpha);
    const double ramp = -std::expm1(-tau) / tau;
    if (k == 0.0) return ramp;
    const double ka = std::pow(eps * std::abs(k), alpha);
    const double scale_b = std::pow(eps * std::abs(k), beta);
    double s0 = 0.0;
    cd vsum = 0.0;
    for (int i = 0; i < eq.grid.nv; ++i) {
        const double v = eq.grid.nodes[i];
        const double kern = eq.grid.weights[i] * eq.m / (scale_b + std::pow(std::abs(v), beta));
        s0 += kern;
        const cd zv = 1.0 + 1.0i * v;
        const cd shared = (1.0 - exp_left(-tau * zv)) / (tau * zv * zv);
        vsum += kern * (1.0i * v / zv + shared);
    }
    return ramp * (1.0 - ka * s0) + ka * vsum;
}

namespace {

template <class Coeffs, class Omc>
CoefficientTable build_table(int steps, const SpatialGrid& sgrid, double eps, double dt,
                             double alpha, Coeffs&& coeffs, Omc&& omc) {
    if (steps < 0) throw std::invalid_argument("coefficient table: steps must be nonnegative");
    CoefficientTable table;
    table.eps = eps;
    table.dt = dt;
    table.alpha = alpha;
    table.steps = steps;
    table.b.resize(steps + 1, sgrid.nx);
    table.c.resize(steps + 1, sgrid.nx);
    table.one_minus_c0.resize(sgrid.nx);
    for (int p = 0; p < sgrid.nx; ++p) {
        for (int j = 0; j <= steps; ++j) {
            const auto [b, c] = coeffs(j, sgrid.modes[p]);
            table.b(j, p) = b;
            table.c(j, p) = c;
        }
        table.one_minus_c0(p) = omc(sgrid.modes[p]);
    }
    return table;
}

}  // namespace

CoefficientTable build_diffusion_coefficients(int steps, const SpatialGrid& sgrid,
                                              const Equilibrium& eq, double eps, double dt) {
    return build_table(steps, sgrid, eps, dt, 2.0,
                       [&](int j, double k) { return coeffs_diffusion(j, k, eps, dt, eq); },
                       [&](double k) { return one_minus_c0_diffusion(k, eps, dt, eq); });
}

CoefficientTable build_anomalous_coefficients(int steps, const SpatialGrid& sgrid,
                                              const Equilibrium& eq, double eps, double dt,
                                              double alpha) {
    if (eq.kind != EquilibriumKind::HeavyTail)
        throw std::invalid_argument("build_anomalous_coefficients: requires a heavy-tail equilibrium");
    return build_table(steps, sgrid, eps, dt, alpha,
                       [&](int j, double k) { return coeffs_anomalous(j, k, eps, dt, alpha, eq); },
                       [&](double k) { return one_minus_c0_anomalous(k, eps, dt, alpha, eq); });
}

std::complex<double> initial_layer(double t, int mode_index, const SpectralPhaseSpace& f0,
                                   const SpatialGrid& sgrid, const VelocityGrid& vgrid, double eps,
                                   double alpha) {
    const double u = t / std::pow(eps, alpha);
    const double k = sgrid.modes[mode_index];
    cd acc = 0.0;
    for (int i = 0; i < vgrid.nv; ++i)
        acc += vgrid.weights[i] *
               exp_left(-u * (1.0 + 1.0i * (eps * k * vgrid.nodes[i]))) * f0(i, mode_index);
    return acc;
}

HistoryBuffer make_history(const SpatialGrid& sgrid, const Equilibrium& eq) {
    HistoryBuffer history;
    history.f0 = initial_condition(sgrid, eq);
    history.rho.push_back(to_spectral(sgrid, initial_density(sgrid)));
    return history;
}

namespace {

template <class Solve>
void advance(HistoryBuffer& history, const CoefficientTable& table, const SpatialGrid& sgrid,
             const VelocityGrid& vgrid, Solve&& solve) {
    const int n = static_cast<int>(history.rho.size()) - 1;
    if (n < 0) throw std::invalid_argument("duhamel step: history must hold initial data");
    if (n + 1 > table.steps)
        throw std::invalid_argument("duhamel step: coefficient table too short");

    SpectralDensity next(sgrid.nx);
    for (int p = 0; p < sgrid.nx; ++p) {
        cd acc = initial_layer((n + 1) * table.dt, p, history.f0, sgrid, vgrid, table.eps,
                               table.alpha);
        for (int j = 1; j <= n; ++j)
            acc += table.c(j, p) * history.rho[n + 1 - j][p] + table.b(j, p) * history.rho[n - j][p];
        next[p] = solve(acc, table.b(0, p), table.one_minus_c0(p), history.rho[n][p]);
    }
    history.rho.push_back(std::move(next));
}

}  // namespace

void duhamel_step(HistoryBuffer& history, const CoefficientTable& table, const SpatialGrid& sgrid,
                  const VelocityGrid& vgrid) {
    advance(history, table, sgrid, vgrid, [](cd acc, cd b0, cd omc, cd rho_n) {
        if (std::abs(omc) < 1e-14) throw std::runtime_error("duhamel_step: singular update");
        return (acc + b0 * rho_n) / omc;
    });
}

void cn_variant_step(HistoryBuffer& history, const CoefficientTable& table,
                     const SpatialGrid& sgrid, const VelocityGrid& vgrid) {
    advance(history, table, sgrid, vgrid, [](cd acc, cd b0, cd omc, cd rho_n) {
        // The remainder weight 1 - b0 - c0 of the lag-0 relaxation is applied
        // to (rho^{n+1} + rho^n) / 2 instead of rho^{n+1}. In terms of
        // omc = 1 - c0 this solves to
        //   rho^{n+1} = (acc + (3 b0 - omc) / 2 rho^n) / ((b0 + omc) / 2).
        const cd den = 0.5 * (b0 + omc);
        if (std::abs(den) < 1e-14) throw std::runtime_error("cn_variant_step: singular update");
        return (acc + 0.5 * (3.0 * b0 - omc) * rho_n) / den;
    });
}

}  // namespace apkin
