#include <doctest.h>

#include <cmath>
#include <numbers>

#include "apkin/equilibrium.hpp"
#include "apkin/limits.hpp"
#include "apkin/micromacro.hpp"
#include "apkin/spectral.hpp"

using namespace apkin;

namespace {
constexpr double pi = std::numbers::pi;

Equilibrium gaussian_eq() {
    return make_equilibrium(EquilibriumKind::Gaussian, 0.0, make_velocity_grid(20, 10.0));
}

Equilibrium heavy_tail_eq() {
    return make_equilibrium(EquilibriumKind::HeavyTail, 2.5, make_velocity_grid(200, 50.0));
}

Eigen::ArrayXd velocity_average(const VelocityGrid& vg, const Eigen::MatrixXd& g) {
    Eigen::ArrayXd avg = Eigen::ArrayXd::Zero(g.cols());
    for (int i = 0; i < vg.nv; ++i) avg += vg.weights(i) * g.row(i).array();
    return avg;
}
}  // namespace

TEST_CASE("finite difference stencils on smooth periodic data") {
    const SpatialGrid g = make_spatial_grid(128);
    Eigen::ArrayXd field = (pi * g.nodes).sin();
    const Eigen::ArrayXd exact = pi * (pi * g.nodes).cos();
    const double dx = g.nodes(1) - g.nodes(0);
    DerivativeOperator centered{StencilKind::Centered2, dx};
    CHECK((centered.apply(field) - exact).abs().maxCoeff() < 1e-2);
    DerivativeOperator upwind{StencilKind::Upwind1, dx};
    CHECK((upwind.apply(field, 1.0) - exact).abs().maxCoeff() < 0.1);
    CHECK((upwind.apply(field, -1.0) - exact).abs().maxCoeff() < 0.1);
    // Upwind differences straddle the centered one.
    CHECK(((upwind.apply(field, 1.0) + upwind.apply(field, -1.0)) / 2.0 - centered.apply(field))
              .abs()
              .maxCoeff() < 1e-14);
}

TEST_CASE("cfl bound") {
    CHECK(cfl_max_dt(1.0, 2.0, 0.0625, 10.0) == doctest::Approx(0.9));
    // Transport-limited branch: 0.9 * dx * eps^{alpha-1} / vmax wins once
    // eps drops below dx / vmax.
    CHECK(cfl_max_dt(1e-4, 1.5, 0.0625, 50.0) ==
          doctest::Approx(0.9 * 0.0625 * std::pow(1e-4, 0.5) / 50.0));
    // Relaxation-dominated branch: 0.9 * eps^alpha wins for eps near one.
    CHECK(cfl_max_dt(0.5, 1.5, 0.0625, 50.0) == doctest::Approx(0.9 * std::pow(0.5, 1.5)));
}

TEST_CASE("uniform density with zero fluctuation is a fixed point") {
    const SpatialGrid g = make_spatial_grid(32);
    const Equilibrium eq = heavy_tail_eq();
    MicroMacroState s = make_micromacro_state(g, eq, 1e-2, 1e-4, 1.5);
    s.rho.setOnes();
    s.g.setZero();
    mmsa_step(s, g, eq);
    CHECK((s.rho - 1.0).abs().maxCoeff() < 1e-14);
    CHECK(s.g.array().abs().maxCoeff() < 1e-14);
    MicroMacroState sd = make_micromacro_state(g, gaussian_eq(), 1e-2, 1e-4, 2.0);
    sd.rho.setOnes();
    sd.g.setZero();
    mmsd_step(sd, g, gaussian_eq());
    CHECK((sd.rho - 1.0).abs().maxCoeff() < 1e-14);
}

TEST_CASE("micro-macro stepping conserves mass and keeps g mean-free") {
    const SpatialGrid g = make_spatial_grid(32);
    const Equilibrium eq = heavy_tail_eq();
    MicroMacroState s = make_micromacro_state(g, eq, 1e-4, 1e-4, 1.5);
    const double mass0 = s.rho.mean();
    for (int i = 0; i < 200; ++i) mmsa_step(s, g, eq);
    CHECK(std::abs(s.rho.mean() - mass0) < 1e-12);
    CHECK(velocity_average(eq.grid, s.g).abs().maxCoeff() < 1e-12);

    const Equilibrium gs = gaussian_eq();
    MicroMacroState sd = make_micromacro_state(g, gs, 1e-4, 1e-4, 2.0);
    for (int i = 0; i < 200; ++i) mmsd_step(sd, g, gs);
    CHECK(std::abs(sd.rho.mean() - mass0) < 1e-12);
    CHECK(velocity_average(gs.grid, sd.g).abs().maxCoeff() < 1e-12);
}

TEST_CASE("diffusion-targeted micro-macro scheme reaches the heat limit") {
    const SpatialGrid g = make_spatial_grid(32);
    const Equilibrium eq = gaussian_eq();
    const double dt = 1e-3;
    const int n = 100;
    MicroMacroState s = make_micromacro_state(g, eq, 1e-8, dt, 2.0);
    for (int i = 0; i < n; ++i) mmsd_step(s, g, eq);

    LimitConfig lim{LimitKind::Diffusion, discrete_moment(eq, 2), 2.0, dt};
    SpectralDensity rho = to_spectral(g, initial_density(g));
    for (int i = 0; i < n; ++i) limit_step(rho, lim, g);
    const Eigen::ArrayXd ref = from_spectral(g, rho);
    CHECK(std::sqrt((s.rho - ref).square().sum() / ref.square().sum()) < 1e-2);
}

TEST_CASE("fractional-targeted micro-macro scheme reaches the fractional limit") {
    const SpatialGrid g = make_spatial_grid(32);
    const Equilibrium eq = heavy_tail_eq();
    const double dt = 1e-3;
    const int n = 100;
    MicroMacroState s = make_micromacro_state(g, eq, 1e-8, dt, 1.5);
    for (int i = 0; i < n; ++i) mmsa_step(s, g, eq);

    LimitConfig lim{LimitKind::Anomalous, discrete_kappa(eq), 1.5, dt};
    SpectralDensity rho = to_spectral(g, initial_density(g));
    for (int i = 0; i < n; ++i) limit_step(rho, lim, g);
    const Eigen::ArrayXd ref = from_spectral(g, rho);
    CHECK(std::sqrt((s.rho - ref).square().sum() / ref.square().sum()) < 1e-3);
}

TEST_CASE("fluctuation after one step scales with eps") {
    // Starting from well-prepared data (g = 0), one step leaves a fluctuation
    // no larger than O(eps).
    const SpatialGrid g = make_spatial_grid(32);
    const Equilibrium eq = heavy_tail_eq();
    for (double eps : {1e-4, 1e-6, 1e-8}) {
        MicroMacroState s = make_micromacro_state(g, eq, eps, 1e-3, 1.5);
        mmsa_step(s, g, eq);
        CHECK(s.g.array().abs().maxCoeff() <= 10.0 * eps);
    }
}
