// models.cpp — parameter map, design procedure, and generator builders

#include "rabi/models.hpp"

#include <algorithm>
#include <cmath>
#include <map>

namespace rabi {

namespace {

constexpr double kSqrt6 = 2.449489742783178098;

void check_nonzero(double x, const char* what) {
    if (x == 0.0) throw SingularDetuningError(std::string("zero denominator: ") + what);
}

}  // namespace

bool PhysicalParams::adiabatic(double factor) const {
    const double scale = std::max({g_cav, std::abs(Omega1), std::abs(Omega2), kappa, gamma});
    return std::abs(Delta1) > factor * scale && std::abs(Delta2) > factor * scale;
}

EffectiveResult effective_params(const PhysicalParams& p, OmegaTilde2Eval eval) {
    const double w21 = p.atom.omega21p;
    const double ot2 = (eval == OmegaTilde2Eval::shifted) ? p.omega_tilde2() : p.atom.omega2;
    check_nonzero(p.Delta1, "Delta1");
    check_nonzero(p.Delta2, "Delta2");
    check_nonzero(p.Delta2 + w21, "Delta2 + omega21'");
    check_nonzero(p.Delta2 + ot2, "Delta2 + omega_tilde2");
    check_nonzero(p.Delta1 + 2.0 * ot2, "Delta1 + 2*omega_tilde2");

    const double O1sq = p.Omega1 * p.Omega1;
    const double O2sq = p.Omega2 * p.Omega2;
    const double gsq = p.g_cav * p.g_cav;

    EffectiveResult out;
    out.params.omega0 = 0.5 * O1sq / p.Delta1 - 0.5 * O2sq / p.Delta2 -
        O2sq / (6.0 * (p.Delta2 + w21)) + O2sq / (12.0 * (p.Delta2 + ot2)) +
        O2sq / (12.0 * (p.Delta1 + 2.0 * ot2)) + p.delta;
    out.params.omega = p.delta_cav -
        0.5 * gsq * (1.0 / (3.0 * p.Delta1) + 0.25 / (p.Delta2 + w21) + 1.0 / (12.0 * p.Delta2));
    out.g1 = (p.g_cav * p.Omega2 / p.Delta2 + p.g_cav * p.Omega2 / (p.Delta2 + w21)) /
        (2.0 * kSqrt6);
    out.g2 = p.g_cav * p.Omega1 / (kSqrt6 * p.Delta1);
    out.params.U = gsq * (0.25 / (p.Delta2 + w21) + 1.0 / (12.0 * p.Delta2) -
                          1.0 / (3.0 * p.Delta1));
    out.params.kappa = p.kappa;
    out.balanced =
        std::abs(out.g1 - out.g2) < 1e-9 * std::max(std::abs(out.g1), 1.0);
    out.params.g_eff = out.g1.real();
    return out;
}

double balance_omega2(const PhysicalParams& p) {
    check_nonzero(p.Delta1, "Delta1");
    check_nonzero(p.Delta2, "Delta2");
    check_nonzero(p.Delta2 + p.atom.omega21p, "Delta2 + omega21'");
    const double lhs_coeff = 1.0 / p.Delta2 + 1.0 / (p.Delta2 + p.atom.omega21p);
    check_nonzero(lhs_coeff, "1/Delta2 + 1/(Delta2+omega21')");
    return 2.0 * p.Omega1 / p.Delta1 / lhs_coeff;
}

PhysicalParams design_physical(const DesignTargets& t, double g_cav, double Delta2,
                               double kappa, double gamma) {
    if (g_cav <= 0.0) throw std::invalid_argument("g_cav must be positive");
    PhysicalParams p;
    p.g_cav = g_cav;
    p.Delta2 = Delta2;
    p.kappa = kappa;
    p.gamma = gamma;

    // Fix Delta1 from the frame identity with omega_tilde2 ~ omega2, pick
    // Omega1 for the target coupling, balance Omega2, then set delta from the
    // qubit-frequency formula. Iterating refines omega_tilde2 = omega2 - delta.
    p.delta = 0.0;
    for (int pass = 0; pass < 8; ++pass) {
        p.Delta1 = p.derived_delta1();
        p.Omega1 = kSqrt6 * t.g_eff * p.Delta1 / g_cav;
        p.Omega2 = balance_omega2(p);
        EffectiveResult r = effective_params(p);
        p.delta += t.omega0 - r.params.omega0;
    }
    p.Delta1 = p.derived_delta1();
    p.Omega1 = kSqrt6 * t.g_eff * p.Delta1 / g_cav;
    p.Omega2 = balance_omega2(p);
    EffectiveResult r = effective_params(p);
    p.delta_cav = t.omega - (r.params.omega - p.delta_cav);

    if (std::abs(p.Omega1) > std::abs(p.Delta1) / 10.0 ||
        std::abs(p.Omega2) > std::abs(p.Delta2) / 10.0)
        throw AdiabaticityError("design target requires laser amplitudes outside the "
                                "adiabatic regime");
    return p;
}

PhysicalParams design_physical_with_U(const DesignTargets& t, double u_target,
                                      double g_cav, double Delta2_lo, double Delta2_hi,
                                      double kappa, double gamma) {
    auto u_of = [&](double d2) {
        return effective_params(design_physical(t, g_cav, d2, kappa, gamma)).params.U;
    };
    double lo = Delta2_lo, hi = Delta2_hi;
    double f_lo = u_of(lo) - u_target;
    double f_hi = u_of(hi) - u_target;
    if (f_lo * f_hi > 0.0)
        throw std::invalid_argument("Delta2 range does not bracket the target U");
    while (std::abs(hi - lo) > 1e-4) {
        const double mid = 0.5 * (lo + hi);
        const double f_mid = u_of(mid) - u_target;
        if (f_mid * f_lo <= 0.0) {
            hi = mid;
            f_hi = f_mid;
        } else {
            lo = mid;
            f_lo = f_mid;
        }
    }
    return design_physical(t, g_cav, 0.5 * (lo + hi), kappa, gamma);
}

double TimeDependentGenerator::max_harmonic_frequency() const {
    double f = 0.0;
    for (const auto& h : harmonics) f = std::max(f, h.nu);
    return f;
}

Matrix TimeDependentGenerator::hamiltonian_at(double t) const {
    Matrix h = Matrix(h_static);
    for (const auto& hk : harmonics) {
        const Complex z = std::exp(Complex(0.0, -kTwoPi * hk.nu * t));
        h += z * Matrix(hk.op) + std::conj(z) * Matrix(hk.op).adjoint();
    }
    return h;
}

namespace {

SpaceLayout qubit_fock_layout(int n_max) {
    return SpaceLayout{{kQubitLabel, 2}, {"fock", n_max}};
}

struct QubitFockOps {
    SpMat a, num, sz, sx, sp;
};

QubitFockOps qubit_fock_ops(int n_max) {
    auto [a1, num1] = fock_ops(n_max);
    SpaceLayout ql = SpaceLayout::single(kQubitLabel, 2);
    Matrix sz2(2, 2), sx2(2, 2), sp2(2, 2), id2 = Matrix::Identity(2, 2);
    sz2 << -1, 0, 0, 1;       // basis order [g, e]
    sx2 << 0, 1, 1, 0;
    sp2 << 0, 0, 1, 0;        // |e><g|
    SpMat idf(n_max, n_max);
    idf.setIdentity();
    Operator id_f(SpaceLayout::single("fock", n_max), idf);
    QubitFockOps out;
    out.a = tensor(Operator(ql, id2), a1).sparse();
    out.num = tensor(Operator(ql, id2), num1).sparse();
    out.sz = tensor(Operator(ql, sz2), id_f).sparse();
    out.sx = tensor(Operator(ql, sx2), id_f).sparse();
    out.sp = tensor(Operator(ql, sp2), id_f).sparse();
    return out;
}

}  // namespace

TimeDependentGenerator build_effective(const EffectiveParams& eff, int n_max) {
    QubitFockOps ops = qubit_fock_ops(n_max);
    SpMat x = SpMat(ops.a + SpMat(ops.a.adjoint()));
    SpMat h = 0.5 * eff.omega0 * ops.sz + eff.omega * ops.num +
        eff.g_eff * SpMat(ops.sx * x) + 0.5 * eff.U * SpMat(ops.sz * ops.num);
    if (eff.negate_hamiltonian) h = SpMat(-1.0 * h);
    TimeDependentGenerator gen;
    gen.layout = qubit_fock_layout(n_max);
    gen.h_static = kTwoPi * h;
    if (eff.kappa != 0.0) gen.jumps.push_back({kTwoPi * eff.kappa, ops.a});
    return gen;
}

TimeDependentGenerator build_jaynes_cummings(const EffectiveParams& eff, int n_max) {
    QubitFockOps ops = qubit_fock_ops(n_max);
    SpMat jc = SpMat(ops.sp * ops.a);
    SpMat h = 0.5 * eff.omega0 * ops.sz + eff.omega * ops.num +
        eff.g_eff * SpMat(jc + SpMat(jc.adjoint())) + 0.5 * eff.U * SpMat(ops.sz * ops.num);
    if (eff.negate_hamiltonian) h = SpMat(-1.0 * h);
    TimeDependentGenerator gen;
    gen.layout = qubit_fock_layout(n_max);
    gen.h_static = kTwoPi * h;
    if (eff.kappa != 0.0) gen.jumps.push_back({kTwoPi * eff.kappa, ops.a});
    return gen;
}

TimeDependentGenerator build_full(const PhysicalParams& p, int n_max,
                                  bool waive_adiabatic_guard) {
    if (n_max < 8) throw std::invalid_argument("full model requires n_max >= 8");
    if (!waive_adiabatic_guard && !p.adiabatic())
        throw AdiabaticityError("physical parameters violate the adiabaticity guard");

    SpaceLayout layout{{kAtomLabel, kAtomDim}, {"fock", n_max}};
    const int dim = layout.total_dim();
    auto [a1, num1] = fock_ops(n_max);
    SpMat id16(kAtomDim, kAtomDim);
    id16.setIdentity();
    Operator id_atom(SpaceLayout::single(kAtomLabel, kAtomDim), id16);
    SpMat a = tensor(id_atom, a1).sparse();
    SpMat num = tensor(id_atom, num1).sparse();

    const double ot2 = p.omega_tilde2();

    // static diagonal: delta on ground F=2, Delta2 on F'=1, Delta1 on F'=2,
    // delta_cav per photon
    SpMat diag(dim, dim);
    {
        std::vector<Eigen::Triplet<Complex>> trip;
        const auto& levels = atomic_levels();
        for (int l = 0; l < kAtomDim; ++l) {
            double e = 0.0;
            if (levels[l].manifold == Manifold::ground && levels[l].F == 2) e = p.delta;
            if (levels[l].manifold == Manifold::excited)
                e = (levels[l].F == 1) ? p.Delta2 : p.Delta1;
            if (e != 0.0)
                for (int n = 0; n < n_max; ++n)
                    trip.emplace_back(l * n_max + n, l * n_max + n, e);
        }
        diag.setFromTriplets(trip.begin(), trip.end());
        diag += p.delta_cav * num;
    }

    // Every coupling term of the drive Hamiltonian lands in exactly one
    // rotation-frequency bucket. Frame energies (gauge omega_L2 = 0):
    // ground F=1 at 0, F=2 at ot2, excited F'=1 at ot2, F'=2 at 2*ot2,
    // photons at ot2; drive phases omega_L1 = 2*ot2, omega_L2 = 0.
    std::map<int, SpMat> buckets;  // key: rotation frequency in units of ot2
    auto add = [&](int key, const SpMat& term) {
        auto [it, fresh] = buckets.try_emplace(key, SpMat(dim, dim));
        if (fresh) it->second.setZero();
        it->second += term;
    };
    auto frame_energy = [&](Manifold man, int F) {
        if (man == Manifold::ground) return (F == 1) ? 0 : 1;
        return (F == 1) ? 1 : 2;
    };
    for (int F = 1; F <= 2; ++F)
        for (int Fp = 1; Fp <= 2; ++Fp) {
            const int dE = frame_energy(Manifold::ground, F) - frame_energy(Manifold::excited, Fp);
            const SpMat a_m1 = transition_operator(F, Fp, -1, layout).sparse();
            const SpMat a_p1 = transition_operator(F, Fp, +1, layout).sparse();
            const SpMat a_pi = transition_operator(F, Fp, 0, layout).sparse();
            add(2 + dE, SpMat(p.Omega1 * a_m1));                    // laser 1, omega_L1 = 2*ot2
            add(0 + dE, SpMat(p.Omega2 * a_p1));                    // laser 2, omega_L2 = 0
            add(1 + dE, SpMat(p.g_cav * SpMat(a_pi * SpMat(a.adjoint()))));  // cavity a^dag
        }

    TimeDependentGenerator gen;
    gen.layout = layout;
    SpMat h_static = diag;
    if (auto it = buckets.find(0); it != buckets.end()) {
        h_static += it->second + SpMat(it->second.adjoint());
        buckets.erase(it);
    }
    gen.h_static = kTwoPi * h_static;

    // terms rotating at +nu fold into the h.c. partner of the -nu harmonic
    std::map<int, SpMat> harm;
    for (auto& [key, op] : buckets) {
        if (key < 0) {
            auto [it, fresh] = harm.try_emplace(-key, op);
            if (!fresh) it->second += op;
        } else {
            auto [it, fresh] = harm.try_emplace(key, SpMat(op.adjoint()));
            if (!fresh) it->second += SpMat(op.adjoint());
        }
    }
    for (auto& [key, op] : harm) {
        op.prune(Complex(0.0), 0.0);
        if (op.nonZeros() > 0)
            gen.harmonics.push_back({static_cast<double>(key) * ot2, kTwoPi * op});
    }

    if (p.kappa != 0.0) gen.jumps.push_back({kTwoPi * p.kappa, a});
    if (p.gamma != 0.0)
        for (int F = 1; F <= 2; ++F)
            for (int Fp = 1; Fp <= 2; ++Fp)
                for (int pol = -1; pol <= 1; ++pol)
                    gen.jumps.push_back(
                        {kTwoPi * p.gamma / 2.0,
                         transition_operator(F, Fp, pol, layout).sparse()});
    return gen;
}

std::vector<double> rabi_spectrum(const EffectiveParams& eff, int n_max, int k) {
    if (k > 2 * n_max) throw std::invalid_argument("requested more levels than the basis holds");
    auto lowest = [&](int nm) {
        Matrix h = Matrix(build_effective(eff, nm).h_static);
        RealVector ev = hermitian_eigenvalues(h);
        return std::vector<double>(ev.data(), ev.data() + k);
    };
    std::vector<double> coarse = lowest(n_max);
    for (int nm = 2 * n_max; nm <= 16 * n_max; nm *= 2) {
        std::vector<double> fine = lowest(nm);
        double worst = 0.0;
        for (int i = 0; i < k; ++i)
            worst = std::max(worst, std::abs(fine[i] - coarse[i]) / kTwoPi);
        if (worst < 1e-6) return fine;
        coarse = std::move(fine);
    }
    throw TruncationError("spectrum did not converge under cutoff doubling");
}

int full_index_qubit_g(int n_max, int n_photon) {
    return level_index(Manifold::ground, 1, -1) * n_max + n_photon;
}

int full_index_qubit_e(int n_max, int n_photon) {
    return level_index(Manifold::ground, 2, -2) * n_max + n_photon;
}

}  // namespace rabi
