#include "apkin/special.hpp"

#include <cmath>
#include <numbers>
#include <stdexcept>

namespace apkin {

double gamma_fn(double x) {
    static constexpr double g = 7.0;
    static constexpr double coeffs[9] = {
        0.99999999999980993,     676.5203681218851,   -1259.1392167224028,
        771.32342877765313,     -176.61502916214059,  12.507343278686905,
        -0.13857109526572012,    9.9843695780195716e-6, 1.5056327351493116e-7};

    if (x < 0.5) {
        // Reflection: Gamma(x) Gamma(1-x) = pi / sin(pi x).
        return std::numbers::pi / (std::sin(std::numbers::pi * x) * gamma_fn(1.0 - x));
    }
    const double z = x - 1.0;
    double a = coeffs[0];
    for (int i = 1; i < 9; ++i) a += coeffs[i] / (z + i);
    const double t = z + g + 0.5;
    return std::sqrt(2.0 * std::numbers::pi) * std::pow(t, z + 0.5) * std::exp(-t) * a;
}

std::pair<Eigen::ArrayXd, Eigen::ArrayXd> gauss_laguerre(int n) {
    if (n <= 0) throw std::invalid_argument("gauss_laguerre: n must be positive");

    Eigen::ArrayXd nodes(n), weights(n);
    double x = 0.0;
    for (int i = 0; i < n; ++i) {
        // Stroud-Secrest initial guesses, then Newton on L_n(x) = 0.
        if (i == 0)
            x = 3.0 / (1.0 + 2.4 * n);
        else if (i == 1)
            x += 15.0 / (1.0 + 2.5 * n);
        else
            x += ((1.0 + 2.55 * (i - 1)) / (1.9 * (i - 1))) * (x - nodes[i - 2]);

        double p1 = 0.0, p2 = 0.0;
        for (int iter = 0; iter < 100; ++iter) {
            p1 = 1.0;
            p2 = 0.0;
            for (int j = 1; j <= n; ++j) {
                const double p3 = p2;
                p2 = p1;
                p1 = ((2.0 * j - 1.0 - x) * p2 - (j - 1.0) * p3) / j;
            }
            const double dp = n * (p1 - p2) / x;  // L_n'(x)
            const double dx = p1 / dp;
            x -= dx;
            if (std::abs(dx) <= 1e-15 * std::max(1.0, std::abs(x))) break;
        }
        nodes[i] = x;
        const double p1_final = p1, p2_final = p2;
        const double dp = n * (p1_final - p2_final) / x;
        weights[i] = 1.0 / (x * dp * dp);
    }
    return {nodes, weights};
}

}  // namespace apkin
