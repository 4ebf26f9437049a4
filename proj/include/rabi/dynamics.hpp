// dynamics.hpp — Lindblad time integration and steady states.

#pragma once

#include <functional>
#include <map>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "rabi/models.hpp"
#include "rabi/space.hpp"

namespace rabi {

struct StiffnessError : std::runtime_error {
    using std::runtime_error::runtime_error;
};
struct DegenerateSteadyStateError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct SolverOptions {
    enum class Method { fixed_rk4, adaptive_rk45 };
    Method method = Method::adaptive_rk45;
    double dt = 0.0;       // fixed-step size; 0 picks 1/(40 f_max) from the harmonics
    double rtol = 1e-8;
    double atol = 1e-10;
    bool fock_guard = true;
    double fock_guard_threshold = 1e-6;  // max tolerated top-two Fock population
};

struct NamedObservable {
    std::string name;
    Operator op;
};

struct Trajectory {
    std::vector<double> times;
    std::map<std::string, std::vector<double>> observables;
    std::vector<std::pair<double, DensityMatrix>> snapshots;
    double min_eigenvalue_seen = 0.0;  // most negative eigenvalue at snapshot times

    const std::vector<double>& series(const std::string& name) const;
};

/// Integrate the master equation from rho0 over t_grid (strictly increasing,
/// first entry = start time). Observables are sampled at grid times; the
/// state is re-hermitized each step and trace deviation beyond 1e-8 throws.
Trajectory evolve(const TimeDependentGenerator& gen, const DensityMatrix& rho0,
                  std::span<const double> t_grid, const SolverOptions& opts,
                  std::span<const NamedObservable> observables,
                  bool store_snapshots = false);

struct SteadyStateResult {
    DensityMatrix rho;
    enum class Method { direct, time_marched } method = Method::direct;
    double residual = 0.0;  // Frobenius norm of L[rho] relative to |L|_F
};

struct SteadyOptions {
    double residual_tol = 1e-10;       // relative to the Liouvillian Frobenius norm
    double degeneracy_tol = 1e-6;
    double march_tol = 1e-9;           // |drho/dt|_F for the fallback
    double march_horizon = 400.0;      // us
};

/// Solve L[rho] = 0, tr rho = 1 by a sparse direct solve of the vectorized
/// Liouvillian with one row replaced by the trace constraint. Requires a
/// harmonic-free generator with kappa > 0. Detects degenerate steady states
/// by solving with two different constraint placements.
SteadyStateResult steady_state(const TimeDependentGenerator& gen,
                               const SteadyOptions& opts = {});

struct LeakageFit {
    double gamma_fit = 0.0;  // MHz
    double residual = 0.0;   // rms of the linear fit
};

/// Evolve the full model and fit the initial linear decay rate of the
/// population remaining in the {|1,-1>, |2,-2>} (x) Fock subspace.
LeakageFit leakage_probe(const TimeDependentGenerator& gen, const DensityMatrix& rho0,
                         double horizon, const SolverOptions& opts,
                         double sample_dt = 0.05);

/// Populations of the top two Fock levels (truncation adequacy probe).
double top_two_fock_population(const DensityMatrix& rho);

}  // namespace rabi
