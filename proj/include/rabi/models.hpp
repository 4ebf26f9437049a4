// models.hpp — Full rotating-frame D1 generator, effective generalized Rabi
// generator, and the map between physical and effective parameters.
//
// Unit convention used throughout the library: stored frequencies are
// ordinary frequencies in MHz, time is in microseconds, and generators
// multiply by 2*pi when forming phases and energies.

#pragma once

#include <optional>
#include <string>
#include <vector>

#include "rabi/atom.hpp"
#include "rabi/space.hpp"

namespace rabi {

struct SingularDetuningError : std::runtime_error {
    using std::runtime_error::runtime_error;
};
struct AdiabaticityError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

/// Laser/cavity/atom inputs of the full model. Detunings are signed;
/// the rotating frame replaces absolute optical frequencies.
struct PhysicalParams {
    double g_cav = 0.0;
    double Omega1 = 0.0;
    double Omega2 = 0.0;
    double Delta1 = 0.0;
    double Delta2 = 0.0;
    double delta = 0.0;
    double delta_cav = 0.0;
    double kappa = 0.0;
    double gamma = 5.7;
    AtomConstants atom;

    double omega_tilde2() const { return atom.omega2 - delta; }
    /// Delta1 implied by Delta2 + omega21' = Delta1 + omega_tilde2.
    double derived_delta1() const { return Delta2 + atom.omega21p - omega_tilde2(); }
    bool adiabatic(double factor = 10.0) const;
};

/// Generalized Rabi parameters (Eq. 19 form). All signed.
struct EffectiveParams {
    double omega0 = 0.0;
    double omega = 0.0;
    double g_eff = 0.0;
    double U = 0.0;
    double kappa = 0.0;
    bool negate_hamiltonian = false;
};

/// Which omega_tilde2 enters the two shifted denominators of the qubit
/// frequency formula: the self-consistent value omega2 - delta, or the
/// bare splitting omega2. The table presets are insensitive at the
/// 1e-2 MHz level only for small delta; `shifted` is the default.
enum class OmegaTilde2Eval { shifted, bare };

struct EffectiveResult {
    EffectiveParams params;  // g_eff = g1 by convention
    Complex g1;              // sigma_+ a channel (two intermediate paths)
    Complex g2;              // sigma_- a channel (single path)
    bool balanced = false;
};

/// Eqs. of the adiabatic elimination: omega0, omega, U and the two Raman
/// couplings from the physical inputs. Throws SingularDetuningError when a
/// denominator vanishes.
EffectiveResult effective_params(const PhysicalParams& phys,
                                 OmegaTilde2Eval eval = OmegaTilde2Eval::shifted);

/// The Omega2 that makes the two Raman couplings equal:
/// Omega2/Delta2 + Omega2/(Delta2+omega21') = 2 Omega1/Delta1.
double balance_omega2(const PhysicalParams& phys);

struct DesignTargets {
    double omega0 = 0.0;
    double omega = 1.0;
    double g_eff = 1.0;
};

/// Invert the parameter map: choose Omega1, Omega2, delta, delta_cav (and the
/// identity-consistent Delta1) hitting the targets exactly for given g_cav and
/// Delta2. U comes out dependent; kappa/gamma are passed through.
PhysicalParams design_physical(const DesignTargets& targets, double g_cav, double Delta2,
                               double kappa = 0.1, double gamma = 5.7);

/// Scan Delta2 by bisection until the dependent U of the design hits u_target
/// (tolerance 1e-4 MHz). Returns the full design at the solution.
PhysicalParams design_physical_with_U(const DesignTargets& targets, double u_target,
                                      double g_cav, double Delta2_lo, double Delta2_hi,
                                      double kappa = 0.1, double gamma = 5.7);

/// H(t) = H_static + sum_k [H_k e^{-i 2 pi nu_k t} + h.c.], plus Lindblad
/// dissipators D[c] rho = 2 c rho c^dag - c^dag c rho - rho c^dag c with the
/// given rates. All stored matrices already carry the 2*pi factor.
struct TimeDependentGenerator {
    SpaceLayout layout;
    SpMat h_static;
    struct Harmonic {
        double nu;  // MHz, positive
        SpMat op;
    };
    std::vector<Harmonic> harmonics;
    struct Jump {
        double rate;  // angular, rad/us
        SpMat op;
    };
    std::vector<Jump> jumps;

    double max_harmonic_frequency() const;
    /// Dense H(t) including harmonics; mainly for tests.
    Matrix hamiltonian_at(double t) const;
};

inline constexpr const char* kQubitLabel = "qubit";

/// Effective-model generator on qubit {|g>,|e>} (x) Fock. One dissipator
/// (cavity decay); no harmonics.
TimeDependentGenerator build_effective(const EffectiveParams& eff, int n_max);

/// Rotating-wave variant of the effective model (counter-rotating terms
/// dropped); used as a test reference.
TimeDependentGenerator build_jaynes_cummings(const EffectiveParams& eff, int n_max);

/// Full D1 generator on 16 atomic levels (x) Fock: static part plus harmonics
/// at omega_tilde2 and 2*omega_tilde2, cavity decay, and the 12 spontaneous
/// emission channels. Requires n_max >= 8 and the adiabaticity guard unless
/// waived.
TimeDependentGenerator build_full(const PhysicalParams& phys, int n_max,
                                  bool waive_adiabatic_guard = false);

/// k lowest eigenvalues (rad/us) of the effective Hamiltonian, converged so a
/// doubled cutoff moves none of them by more than 1e-6 MHz.
std::vector<double> rabi_spectrum(const EffectiveParams& eff, int n_max, int k);

// Effective-qubit basis states within the full model: the sigma_z = -1 pole
// is |1,-1> and the sigma_z = +1 pole is |2,-2>.
int full_index_qubit_g(int n_max, int n_photon = 0);
int full_index_qubit_e(int n_max, int n_photon = 0);

}  // namespace rabi
