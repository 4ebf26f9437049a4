// observables.hpp — Scalar and phase-space observables of qubit (x) Fock and
// cavity-only states.

#pragma once

#include <vector>

#include "rabi/space.hpp"

namespace rabi {

struct UndefinedCorrelationError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

/// <psi0| rho |psi0>.
double survival_probability(const DensityMatrix& rho, const Vector& psi0);

/// g2(0) = <adag adag a a> / <adag a>^2 on the state's Fock factor.
/// Throws UndefinedCorrelationError when <adag a> <= 1e-9.
double g2_zero(const DensityMatrix& rho);

struct WignerGrid {
    std::vector<double> x_axis, y_axis;  // alpha = (x + i y)/sqrt(2)
    std::vector<std::vector<double>> values;  // values[iy][ix] = W(alpha)

    /// Phase-space integral of W (the measure is dx dy / 2).
    double integral() const;
    /// Grid points that strictly dominate their 8 neighbours and exceed
    /// rel_threshold * max(W).
    struct Peak {
        double x, y, value;
    };
    std::vector<Peak> local_maxima(double rel_threshold = 0.1) const;
};

struct WignerSpec {
    double x_min = -6.0, x_max = 6.0;
    double y_min = -6.0, y_max = 6.0;
    int nx = 121, ny = 121;
};

/// W(alpha) = (2/pi) tr[D^dag(alpha) rho_cav D(alpha) (-1)^n] evaluated
/// pointwise on the grid. `rho_cav` must be a single-factor Fock state.
WignerGrid wigner(const DensityMatrix& rho_cav, const WignerSpec& spec = {});

/// log2 of the trace norm of the partial transpose over `part`.
double log_negativity(const DensityMatrix& rho, std::string_view part);

/// Overlap with the entangled cat {|e>(|a>+|-a>) - |g>(|a>-|-a>)}/2,
/// normalized exactly in the truncated space. Qubit (x) Fock layout.
double cat_fidelity(const DensityMatrix& rho, Complex alpha);

struct CatSearchResult {
    double fidelity = 0.0;
    double t = 0.0;
    Complex alpha = 0.0;
};

/// <Pi> with Pi = -sigma_z (-1)^n on a qubit (x) Fock state.
double parity_expectation(const DensityMatrix& rho);

/// Mean photon number of the state's Fock factor.
double mean_photon_number(const DensityMatrix& rho);

/// tr(sigma_z rho) on a qubit (x) Fock state.
double atomic_inversion(const DensityMatrix& rho);

/// arg tr(sigma_x a rho): phase reference of the displaced branches. The bare
/// <a> vanishes identically for parity-definite evolutions, so the branch
/// phase is read through the sigma_x-correlated field amplitude instead.
double branch_phase(const DensityMatrix& rho);

}  // namespace rabi
