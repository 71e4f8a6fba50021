#pragma once

#include <complex>
#include <utility>
#include <vector>

#include "apkin/spectral.hpp"

namespace apkin {

/// Convolution weights b_j, c_j of the Duhamel-in-time schemes,
/// precomputed per time lag (rows 0..steps) and per mode (columns).
struct CoefficientTable {
    Eigen::MatrixXcd b, c;
    /// 1 - c_0 per mode, evaluated without the cancellation that the literal
    /// subtraction suffers when c_0 -> 1 in the stiff regime.
    Eigen::ArrayXcd one_minus_c0;
    double eps = 1.0;
    double dt = 1e-3;
    double alpha = 2.0;
    int steps = 0;
};

/// Lag-j weights for the diffusion-scaled kernel: with z = 1 + i eps k v,
/// u_j = j dt / eps^alpha and tau = dt / eps^alpha,
///   b_j = < (e^{-u_j z} (1 - e^{-tau z}) / (tau z^2) - e^{-u_{j+1} z} / z) M >,
///   c_j = < (e^{-u_j z} / z - e^{-u_j z} (1 - e^{-tau z}) / (tau z^2)) M >.
std::pair<std::complex<double>, std::complex<double>> coeffs_diffusion(int j, double k, double eps,
                                                                       double dt,
                                                                       const Equilibrium& eq);

/// Lag-j weights for the anomalous-scaled kernel (alpha in (0, 2), heavy
/// tail): a pure e^{-u_j} relaxation part weighted by 1 - eps^alpha |k|^alpha S0
/// plus a velocity sum against the kernel m / ((eps |k|)^beta + |v|^beta).
std::pair<std::complex<double>, std::complex<double>> coeffs_anomalous(int j, double k, double eps,
                                                                       double dt, double alpha,
                                                                       const Equilibrium& eq);

/// Cancellation-free evaluations of 1 - c_0: the identity
/// 1 - <M / z> = <i eps k v M / z> turns the difference of near-equal
/// quantities into a plain sum of small ones.
std::complex<double> one_minus_c0_diffusion(double k, double eps, double dt,
                                            const Equilibrium& eq);
std::complex<double> one_minus_c0_anomalous(double k, double eps, double dt, double alpha,
                                            const Equilibrium& eq);

CoefficientTable build_diffusion_coefficients(int steps, const SpatialGrid& sgrid,
                                              const Equilibrium& eq, double eps, double dt);

CoefficientTable build_anomalous_coefficients(int steps, const SpatialGrid& sgrid,
                                              const Equilibrium& eq, double eps, double dt,
                                              double alpha);

/// Free-streaming remnant of the initial data:
/// A0(t, k) = sum_i w_i exp(-(t / eps^alpha) (1 + i eps k v_i)) f_hat_0(k, v_i).
std::complex<double> initial_layer(double t, int mode_index, const SpectralPhaseSpace& f0,
                                   const SpatialGrid& sgrid, const VelocityGrid& vgrid, double eps,
                                   double alpha);

/// Density history rho_hat^0 ... rho_hat^n plus the initial phase-space data.
struct HistoryBuffer {
    std::vector<SpectralDensity> rho;
    SpectralPhaseSpace f0;
};

HistoryBuffer make_history(const SpatialGrid& sgrid, const Equilibrium& eq);

/// Advances the history by one step of the implicit convolution scheme
///   rho^{n+1} = (A0(t_{n+1}) + sum_{j=1}^n (c_j rho^{n+1-j} + b_j rho^{n-j})
///                + b_0 rho^n) / (1 - c_0).
void duhamel_step(HistoryBuffer& history, const CoefficientTable& table, const SpatialGrid& sgrid,
                  const VelocityGrid& vgrid);

/// Crank-Nicolson variant: the lag-0 relaxation (1 - b_0 - c_0) rho is
/// replaced by its trapezoidal average over [t_n, t_{n+1}], then solved for
/// rho^{n+1}.
void cn_variant_step(HistoryBuffer& history, const CoefficientTable& table,
                     const SpatialGrid& sgrid, const VelocityGrid& vgrid);

}  // namespace apkin
