#include "apkin/constants.hpp"

#include <cmath>
#include <numbers>
#include <stdexcept>

#include "apkin/quadrature.hpp"
#include "apkin/special.hpp"

namespace apkin {

namespace {

// integral_W^inf cos(w) w^{-s} dw by repeated integration by parts;
// the neglected remainder is bounded by s (s+1) W^{-s-2}.
double cosine_tail(double W, double s) {
    return -std::sin(W) * std::pow(W, -s) + s * std::cos(W) * std::pow(W, -s - 1.0) +
           s * (s + 1.0) * std::sin(W) * std::pow(W, -s - 2.0);
}

}  // namespace

double compute_kappa(double alpha, int d, double m) {
    if (d != 1) throw std::invalid_argument("compute_kappa: only d = 1 is supported");
    if (alpha <= 0.0 || alpha >= 2.0)
        throw std::invalid_argument("compute_kappa: alpha must lie in (0, 2)");
    const double beta = alpha + 1.0;

    // kappa = 2 m integral_0^inf w^{2-beta} / (1 + w^2) dw, split into a
    // series near 0 (the integrand is w^{2-beta} to leading order), an
    // adaptive middle part, and a 1/w^2 expansion beyond the cut.
    const double lo = 0.5, hi = 100.0;
    double head = 0.0;
    {
        double sign = 1.0;
        for (int n = 0; n < 30; ++n) {
            const double e = 3.0 - beta + 2.0 * n;
            const double term = sign * std::pow(lo, e) / e;
            head += term;
            if (std::abs(term) < 1e-18) break;
            sign = -sign;
        }
    }
    const double body = integrate(
        [beta](double w) { return std::pow(w, 2.0 - beta) / (1.0 + w * w); }, lo, hi, 1e-13);
    double tail = 0.0;
    {
        double sign = 1.0;
        for (int n = 0; n < 8; ++n) {
            const double e = beta - 1.0 + 2.0 * n;
            tail += sign * std::pow(hi, -e) / e;
            sign = -sign;
        }
    }
    return 2.0 * m * (head + body + tail);
}

double compute_symbol_constant(double alpha, int d) {
    if (d != 1) throw std::invalid_argument("compute_symbol_constant: only d = 1 is supported");
    if (alpha <= 0.0 || alpha >= 2.0)
        throw std::invalid_argument("compute_symbol_constant: alpha must lie in (0, 2)");

    // A = 2 integral_0^inf (1 - cos w) w^{-1-alpha} dw.
    const double lo = 0.5, hi = 500.0;
    double head = 0.0;
    {
        // 1 - cos w expanded at 0; factorial grows alongside the powers.
        double fact = 1.0, sign = 1.0;
        for (int n = 1; n < 20; ++n) {
            fact *= (2.0 * n - 1.0) * (2.0 * n);
            const double e = 2.0 * n - alpha;
            const double term = sign * std::pow(lo, e) / (fact * e);
            head += term;
            if (std::abs(term) < 1e-18) break;
            sign = -sign;
        }
    }
    const double body = integrate(
        [alpha](double w) { return (1.0 - std::cos(w)) * std::pow(w, -1.0 - alpha); }, lo, hi,
        1e-12);
    const double tail = std::pow(hi, -alpha) / alpha - cosine_tail(hi, 1.0 + alpha);
    return 2.0 * (head + body + tail);
}

FractionalConstants compute_fractional_constants(double alpha, int d, double m) {
    FractionalConstants out;
    out.alpha = alpha;
    out.d = d;
    out.beta = alpha + d;
    out.m = m;
    out.kappa = compute_kappa(alpha, d, m);
    out.symbol_constant = compute_symbol_constant(alpha, d);
    out.gamma_alpha_plus_1 = gamma_fn(alpha + 1.0);
    out.c_paper = alpha * gamma_fn((d + alpha) / 2.0) /
                  (2.0 * std::pow(std::numbers::pi, d / 2.0 + alpha) * gamma_fn(1.0 - alpha / 2.0));
    return out;
}

double C_of_s(double s, double beta, double m) {
    if (beta <= 1.0 || beta >= 3.0)
        throw std::invalid_argument("C_of_s: beta must lie in (1, 3)");
    if (s == 0.0) return 0.0;
    const double as = std::abs(s);

    // C(s) = -2 m integral_0^inf (1 - cos(s w)) w^{-beta} dw, split at
    // lo = 0.5/|s| (series) and hi = 500/|s| (tail with frequency |s| hi).
    const double lo = 0.5 / as, hi = 500.0 / as;
    double head = 0.0;
    {
        double fact = 1.0, sign = 1.0;
        for (int n = 1; n < 20; ++n) {
            fact *= (2.0 * n - 1.0) * (2.0 * n);
            const double e = 2.0 * n + 1.0 - beta;
            const double term = sign * std::pow(as, 2.0 * n) * std::pow(lo, e) / (fact * e);
            head += term;
            if (std::abs(term) < 1e-18 * std::max(1.0, std::abs(head))) break;
            sign = -sign;
        }
    }
    const double body = integrate(
        [as, beta](double w) { return (1.0 - std::cos(as * w)) * std::pow(w, -beta); }, lo, hi,
        1e-12);
    const double tail =
        std::pow(hi, 1.0 - beta) / (beta - 1.0) - std::pow(as, beta - 1.0) * cosine_tail(as * hi, beta);
    return -2.0 * m * (head + body + tail);
}

std::complex<double> heavy_tail_symbol(double eps, double s, double k, const Equilibrium& eq) {
    std::complex<double> acc = 0.0;
    for (int i = 0; i < eq.grid.nv; ++i) {
        const double theta = eps * s * k * eq.grid.nodes[i];
        const double half = std::sin(0.5 * theta);
        // exp(-i theta) - 1 written without cancellation at small theta.
        acc += eq.grid.weights[i] * eq.values[i] *
               std::complex<double>(-2.0 * half * half, -std::sin(theta));
    }
    return acc;
}

double a_eps_z(double eps, double z, double t, double beta, double m) {
    if (eps <= 0.0 || t <= 0.0)
        throw std::invalid_argument("a_eps_z: eps and t must be positive");
    const double alpha = beta - 1.0;
    const double zb = std::pow(std::abs(z), beta);
    if (zb == 0.0) return 0.0;
    const double upper = std::min(t / std::pow(eps, alpha), 60.0);
    return integrate(
        [&](double s) {
            const double es = std::pow(eps * s, beta - 1.0);
            const double esb = std::pow(eps * s, beta);
            return m * zb * es / (esb + zb) * std::exp(-s);
        },
        0.0, upper, 1e-11);
}

}  // namespace apkin
