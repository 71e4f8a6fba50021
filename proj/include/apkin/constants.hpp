#pragma once

#include <complex>

#include "apkin/equilibrium.hpp"

namespace apkin {

/// Constants attached to the fractional limit of exponent alpha in dimension
/// d, for the equilibrium tail m / |v|^{alpha + d}.
struct FractionalConstants {
    double alpha = 0.0;
    int d = 1;
    double beta = 0.0;  // alpha + d
    double m = 0.0;
    double kappa = 0.0;            // integral of v^2/(1+v^2) * m/|v|^beta
    double symbol_constant = 0.0;  // A = integral of (1 - cos w)/|w|^{d+alpha}
    double gamma_alpha_plus_1 = 0.0;
    double c_paper = 0.0;  // alternative literature normalization, reported only
};

/// Fractional diffusion coefficient
/// kappa = integral over R^d of v^2/(1+v^2) * m/|v|^{alpha+d} dv (d = 1 here;
/// the formula below extends to general d through the identity with A).
double compute_kappa(double alpha, int d, double m);

/// A_{d,alpha} = integral over R^d of (1 - cos w1) / |w|^{d+alpha} dw.
double compute_symbol_constant(double alpha, int d);

FractionalConstants compute_fractional_constants(double alpha, int d, double m);

/// C(s) = integral of (cos(s w) - 1) * m / |w|^{alpha+1} dw over R (d = 1).
/// Equals -m |s|^alpha A_{1,alpha}; computed here by direct quadrature.
double C_of_s(double s, double beta, double m);

/// Discrete symbol sum_i w_i (exp(-i eps s k v_i) - 1) M(v_i) on the
/// equilibrium's velocity grid. Exactly zero at k = 0.
std::complex<double> heavy_tail_symbol(double eps, double s, double k, const Equilibrium& eq);

/// a(eps, z, t) = m integral_0^{t / eps^alpha} of
///   |z|^beta (eps s)^{beta-1} / ((eps s)^beta + |z|^beta) e^{-s} ds,
/// with beta = alpha + 1. Tends to m eps^alpha Gamma(alpha + 1) as eps -> 0
/// at fixed z != 0.
double a_eps_z(double eps, double z, double t, double beta, double m);

}  // namespace apkin
