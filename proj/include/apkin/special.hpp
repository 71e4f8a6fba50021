#pragma once

#include <Eigen/Dense>
#include <utility>

namespace apkin {

/// Gamma function via the Lanczos approximation (g = 7, 9 terms), with the
/// reflection formula for arguments below 1/2. Accurate to ~1e-14 relative
/// on the range used here (x in (0, 10]).
double gamma_fn(double x);

/// Nodes and weights of the n-point Gauss-Laguerre rule (weight e^{-s} on
/// [0, inf)), computed by Newton iteration on the Laguerre recurrence.
std::pair<Eigen::ArrayXd, Eigen::ArrayXd> gauss_laguerre(int n);

}  // namespace apkin
