#include <doctest.h>

#include <cmath>
#include <complex>
#include <numbers>
#include <random>

#include "apkin/equilibrium.hpp"
#include "apkin/grids.hpp"
#include "apkin/spectral.hpp"

using namespace apkin;

namespace {
constexpr double pi = std::numbers::pi;
}

TEST_CASE("spatial grid nodes and modes") {
    const SpatialGrid g = make_spatial_grid(8, 1.0);
    CHECK(g.nodes.size() == 8);
    CHECK(g.modes.size() == 8);
    CHECK(g.nodes(0) == doctest::Approx(-1.0));
    CHECK(g.nodes(1) - g.nodes(0) == doctest::Approx(0.25));
    CHECK(g.modes(g.zero_mode()) == doctest::Approx(0.0));
    CHECK(g.modes(g.index_of_mode(1)) == doctest::Approx(pi));
    CHECK(g.modes(g.index_of_mode(-1)) == doctest::Approx(-pi));
    CHECK(g.modes(0) == doctest::Approx(-4.0 * pi));
}

TEST_CASE("velocity grid is a symmetric midpoint rule") {
    const VelocityGrid g = make_velocity_grid(10, 5.0);
    CHECK(g.nodes.size() == 10);
    CHECK(g.weights.sum() == doctest::Approx(10.0));  // total length of [-5, 5]
    for (int i = 0; i < 5; ++i)
        CHECK(g.nodes(i) == doctest::Approx(-g.nodes(9 - i)).epsilon(1e-14));
    CHECK(g.nodes(5) == doctest::Approx(0.5));
}

TEST_CASE("heavy tail normalization matches the closed form") {
    // integral of 1 / (1 + |v|^beta) over R equals 2 pi / (beta sin(pi / beta)),
    // so the normalization constant is beta sin(pi / beta) / (2 pi).
    for (double beta : {1.5, 2.0, 2.5, 2.8}) {
        const double exact = beta * std::sin(pi / beta) / (2.0 * pi);
        CHECK(heavy_tail_normalization(beta) == doctest::Approx(exact).epsilon(1e-10));
    }
    CHECK(heavy_tail_normalization(2.0) == doctest::Approx(1.0 / pi).epsilon(1e-12));
}

TEST_CASE("equilibria carry exact discrete unit mass") {
    const VelocityGrid vg = make_velocity_grid(200, 50.0);
    const Equilibrium ht = make_equilibrium(EquilibriumKind::HeavyTail, 2.5, vg);
    const Equilibrium gs = make_equilibrium(EquilibriumKind::Gaussian, 0.0, make_velocity_grid(20, 10.0));
    CHECK(std::abs((ht.grid.weights * ht.values).sum() - 1.0) <= 4e-16);
    CHECK(std::abs((gs.grid.weights * gs.values).sum() - 1.0) <= 4e-16);
    CHECK(std::abs(discrete_moment(ht, 0) - 1.0) <= 2e-15);
    CHECK(std::abs(discrete_moment(gs, 0) - 1.0) <= 2e-15);
}

TEST_CASE("gaussian moments match the standard normal") {
    const Equilibrium gs =
        make_equilibrium(EquilibriumKind::Gaussian, 0.0, make_velocity_grid(200, 10.0));
    CHECK(std::abs(discrete_moment(gs, 1)) < 1e-14);
    CHECK(discrete_moment(gs, 2) == doctest::Approx(1.0).epsilon(1e-8));
    CHECK(discrete_moment(gs, 4) == doctest::Approx(3.0).epsilon(1e-7));
}

TEST_CASE("heavy tail truncation defect matches the analytic tail") {
    // Raw midpoint mass on [-vmax, vmax] misses roughly
    // 2 m vmax^{1 - beta} / (beta - 1) of continuous mass.
    const double beta = 2.5, vmax = 50.0;
    const double m = heavy_tail_normalization(beta);
    const VelocityGrid vg = make_velocity_grid(2000, vmax);
    double raw = 0.0;
    for (int i = 0; i < vg.nv; ++i)
        raw += vg.weights(i) * m / (1.0 + std::pow(std::abs(vg.nodes(i)), beta));
    const double defect = 1.0 - raw;
    const double tail = 2.0 * m * std::pow(vmax, 1.0 - beta) / (beta - 1.0);
    CHECK(defect == doctest::Approx(tail).epsilon(2e-2));
}

TEST_CASE("transform round trip reproduces random real data") {
    const SpatialGrid g = make_spatial_grid(64);
    std::mt19937 rng(20240517);
    std::uniform_real_distribution<double> u(-1.0, 1.0);
    Eigen::ArrayXd field(g.nx);
    for (int j = 0; j < g.nx; ++j) field(j) = u(rng);
    const Eigen::ArrayXd back = from_spectral(g, to_spectral(g, field));
    CHECK((back - field).abs().maxCoeff() < 1e-12);
}

TEST_CASE("initial density has the expected spectrum") {
    const SpatialGrid g = make_spatial_grid(64);
    const SpectralDensity amps = to_spectral(g, initial_density(g));
    const std::complex<double> i1(0.0, 1.0);
    CHECK(std::abs(amps(g.zero_mode()) - 1.0) < 1e-13);
    // sin(pi x) = (e^{i pi x} - e^{-i pi x}) / (2i)
    CHECK(std::abs(amps(g.index_of_mode(1)) - (-0.5 * i1)) < 1e-13);
    CHECK(std::abs(amps(g.index_of_mode(-1)) - (0.5 * i1)) < 1e-13);
    double rest = 0.0;
    for (int p = 0; p < g.nx; ++p)
        if (p != g.zero_mode() && p != g.index_of_mode(1) && p != g.index_of_mode(-1))
            rest += std::abs(amps(p));
    CHECK(rest < 1e-11);
}

TEST_CASE("density reduction commutes with the product initial condition") {
    const SpatialGrid g = make_spatial_grid(32);
    const Equilibrium eq =
        make_equilibrium(EquilibriumKind::HeavyTail, 2.5, make_velocity_grid(200, 50.0));
    const SpectralPhaseSpace f0 = initial_condition(g, eq);
    const SpectralDensity rho = reduce_density(eq.grid, f0);
    const SpectralDensity rho0 = to_spectral(g, initial_density(g));
    CHECK((rho - rho0).abs().maxCoeff() < 1e-13);
}
