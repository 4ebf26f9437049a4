// semiclassical.hpp — Factorized mean-field flow for (alpha, beta, w), its
// fixed points, and linear stability in U.

#pragma once

#include <array>
#include <optional>
#include <vector>

#include "rabi/space.hpp"

namespace rabi {

struct SemiState {
    Complex alpha = 0.0;  // <a>
    Complex beta = 0.0;   // <sigma_->
    double w = 0.0;       // <sigma_z>

    double spin_length_sq() const { return 4.0 * std::norm(beta) + w * w; }
};

struct SemiParams {
    double omega = 1.0;
    double omega0 = 1.0;
    double g = 1.0;
    double U = 0.0;
    double kappa = 0.0;
};

enum class SemiFixedPoint { normal, inverted };  // w = -1 / w = +1, alpha = beta = 0

/// Mean-field derivatives (2*pi conversion applied). The w derivative is
/// assembled as a manifestly real expression.
SemiState semi_rhs(const SemiState& s, const SemiParams& p);

/// Adaptive integration (rtol 1e-10) sampled at t_grid.
std::vector<SemiState> semi_integrate(const SemiState& s0, const SemiParams& p,
                                      std::span<const double> t_grid);

struct StabilityResult {
    double max_re = 0.0;                  // over the (alpha, beta) block, rad/us
    std::array<Complex, 4> eigenvalues;   // of the 4x4 coupled block
    Eigen::Matrix<double, 5, 5> jacobian; // full real-flow Jacobian; w row is zero
};

/// Analytic Jacobian of the 5-real-dimensional flow at the chosen fixed
/// point; max_re excludes the structurally null w direction.
StabilityResult fixed_point_stability(const SemiParams& p, SemiFixedPoint which);

/// Numeric Jacobian by central finite differences (verification oracle).
Eigen::Matrix<double, 5, 5> semi_jacobian_fd(const SemiState& s, const SemiParams& p,
                                             double h = 1e-6);

/// Bisection on the sign of max Re(lambda) over [u_lo, u_hi], located by a
/// fine pre-scan (the stable window near the crossing can be narrow).
/// Returns the crossing to 1e-3 MHz, or nothing if the scan finds no sign
/// change.
std::optional<double> stability_scan(const SemiParams& base, double u_lo, double u_hi,
                                     SemiFixedPoint which);

}  // namespace rabi
