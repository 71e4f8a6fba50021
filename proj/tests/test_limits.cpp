#include <doctest.h>

#include <cmath>
#include <complex>
#include <numbers>

#include "apkin/constants.hpp"
#include "apkin/equilibrium.hpp"
#include "apkin/limits.hpp"
#include "apkin/spectral.hpp"

using namespace apkin;

namespace {
constexpr double pi = std::numbers::pi;
}

TEST_CASE("limit symbols") {
    LimitConfig diff{LimitKind::Diffusion, 2.0, 2.0, 1e-3};
    CHECK(limit_symbol(3.0, diff) == doctest::Approx(18.0));
    LimitConfig frac{LimitKind::Anomalous, 1.7, 1.5, 1e-3};
    CHECK(limit_symbol(-2.0, frac) == doctest::Approx(1.7 * std::pow(2.0, 1.5)));
    CHECK(limit_symbol(0.0, frac) == 0.0);
}

TEST_CASE("one implicit step divides each mode by 1 + dt sigma") {
    const SpatialGrid g = make_spatial_grid(16);
    LimitConfig cfg{LimitKind::Anomalous, 1.6813, 1.5, 1e-3};
    SpectralDensity rho = SpectralDensity::Ones(g.nx);
    limit_step(rho, cfg, g);
    for (int p = 0; p < g.nx; ++p) {
        const double expected = 1.0 / (1.0 + cfg.dt * limit_symbol(g.modes(p), cfg));
        CHECK(std::abs(rho(p) - expected) < 1e-15);
    }
}

TEST_CASE("implicit stepping converges to the exact semigroup at order one") {
    const SpatialGrid g = make_spatial_grid(16);
    const double T = 0.1;
    const std::complex<double> start(0.0, -0.5);  // the k = pi mode of 1 + sin(pi x)
    LimitConfig cfg{LimitKind::Anomalous, 1.6813, 1.5, 0.0};
    auto run = [&](double dt) {
        cfg.dt = dt;
        SpectralDensity rho = SpectralDensity::Zero(g.nx);
        rho(g.index_of_mode(1)) = start;
        const int n = static_cast<int>(std::round(T / dt));
        for (int i = 0; i < n; ++i) limit_step(rho, cfg, g);
        return rho(g.index_of_mode(1));
    };
    const std::complex<double> exact = start * exact_limit_amplitude(T, pi, cfg);
    const double e1 = std::abs(run(1e-3) - exact);
    const double e2 = std::abs(run(5e-4) - exact);
    const double e3 = std::abs(run(2.5e-4) - exact);
    CHECK(e1 / std::abs(exact) < 1e-2);
    CHECK(std::log2(e1 / e2) == doctest::Approx(1.0).epsilon(0.1));
    CHECK(std::log2(e2 / e3) == doctest::Approx(1.0).epsilon(0.1));
}

TEST_CASE("exact amplitude is the plain exponential") {
    LimitConfig diff{LimitKind::Diffusion, 0.5, 2.0, 1e-3};
    CHECK(std::abs(exact_limit_amplitude(0.2, pi, diff) -
                   std::exp(-0.5 * pi * pi * 0.2)) < 1e-15);
    LimitConfig frac{LimitKind::Anomalous, 1.6813, 1.5, 1e-3};
    const double sigma = 1.6813 * std::pow(pi, 1.5);
    CHECK(std::abs(exact_limit_amplitude(0.1, pi, frac) - std::exp(-0.1 * sigma)) < 1e-15);
}

TEST_CASE("exact solution damps every nonzero mode and keeps the mean") {
    const SpatialGrid g = make_spatial_grid(32);
    const SpectralDensity rho0 = to_spectral(g, initial_density(g));
    LimitConfig cfg{LimitKind::Anomalous, 1.6813, 1.5, 1e-3};
    const SpectralDensity rho = exact_limit_solution(0.3, rho0, cfg, g);
    CHECK(std::abs(rho(g.zero_mode()) - rho0(g.zero_mode())) < 1e-15);
    for (int p = 0; p < g.nx; ++p)
        if (p != g.zero_mode()) CHECK(std::abs(rho(p)) <= std::abs(rho0(p)) + 1e-16);
}

TEST_CASE("implicit step is a contraction and conserves the mean") {
    const SpatialGrid g = make_spatial_grid(32);
    SpectralDensity rho = to_spectral(g, initial_density(g));
    LimitConfig cfg{LimitKind::Diffusion, 1.0, 2.0, 1e-2};
    const SpectralDensity before = rho;
    for (int i = 0; i < 50; ++i) limit_step(rho, cfg, g);
    CHECK(std::abs(rho(g.zero_mode()) - before(g.zero_mode())) < 1e-15);
    for (int p = 0; p < g.nx; ++p) CHECK(std::abs(rho(p)) <= std::abs(before(p)) + 1e-16);
}

TEST_CASE("discrete coefficients converge to the continuous ones") {
    // The integrand of kappa carries a |v|^{beta-4} singularity at v = 0
    // (|v|^{-1/2} for beta = 2.5), so the midpoint value converges slowly,
    // like sqrt(dv); the production grid sits visibly below the continuum.
    const double m = heavy_tail_normalization(2.5);
    const double kappa = compute_kappa(1.5, 1, m);
    const double coarse = discrete_kappa(
        make_equilibrium(EquilibriumKind::HeavyTail, 2.5, make_velocity_grid(200, 50.0)));
    const double fine = discrete_kappa(
        make_equilibrium(EquilibriumKind::HeavyTail, 2.5, make_velocity_grid(20000, 50.0)));
    CHECK(coarse < kappa);
    CHECK(std::abs(fine - kappa) < std::abs(coarse - kappa) / 3.0);
    CHECK(std::abs(fine - kappa) < 0.1);

    const Equilibrium gs =
        make_equilibrium(EquilibriumKind::Gaussian, 0.0, make_velocity_grid(20, 10.0));
    CHECK(std::abs(discrete_moment(gs, 2) - 1.0) < 1e-6);
}
