// atom.cpp — dipole elements from 3j/6j recoupling at startup

#include "rabi/atom.hpp"

#include <cmath>
#include <mutex>

#include "rabi/angular.hpp"

namespace rabi {

namespace {

constexpr int kTwoI = 3;  // nuclear spin 3/2
constexpr int kTwoJ = 1;  // 5s_1/2 and 5p_1/2

double raw_element(int F, int m, int Fp, int mp, int p) {
    if (mp != m + p) return 0.0;
    // <F m|T^1_q|F' m'> with spherical component q = m - m' = -p
    const double six = wigner_6j(kTwoJ, kTwoJ, 2, 2 * Fp, 2 * F, kTwoI);
    const double three = wigner_3j(2 * Fp, 2, 2 * F, 2 * mp, -2 * p, -2 * m);
    const int phase_exp = 2 * Fp + 2 + m;  // (F'+J+1+I) + (F'-1+m), both integers here
    const double phase = (phase_exp % 2 == 0) ? 1.0 : -1.0;
    return phase * std::sqrt(static_cast<double>((2 * F + 1) * (2 * Fp + 1))) * six * three;
}

double normalization() {
    static std::once_flag flag;
    static double norm = 0.0;
    std::call_once(flag, [] {
        // sum over decay channels from any one excited sublevel
        double s = 0.0;
        for (int F = 1; F <= 2; ++F)
            for (int p = -1; p <= 1; ++p) {
                const int m = -1 - p;
                if (std::abs(m) <= F) s += std::pow(raw_element(F, m, 1, -1, p), 2);
            }
        norm = std::sqrt(s);
    });
    return norm;
}

}  // namespace

const std::array<AtomicLevel, kAtomDim>& atomic_levels() {
    static const std::array<AtomicLevel, kAtomDim> levels = [] {
        std::array<AtomicLevel, kAtomDim> out{};
        int i = 0;
        for (Manifold man : {Manifold::ground, Manifold::excited})
            for (int F = 1; F <= 2; ++F)
                for (int m = -F; m <= F; ++m) out[i++] = {man, F, m};
        return out;
    }();
    return levels;
}

int level_index(Manifold manifold, int F, int m) {
    if (F < 1 || F > 2 || std::abs(m) > F)
        throw std::domain_error("invalid hyperfine quantum numbers");
    const int base = (manifold == Manifold::ground ? 0 : 8) + (F == 1 ? 0 : 3);
    return base + (m + F);
}

double dipole_element(int F, int m, int Fp, int mp, int p) {
    if (F < 1 || F > 2 || Fp < 1 || Fp > 2 || p < -1 || p > 1)
        throw std::domain_error("invalid dipole transition arguments");
    if (std::abs(m) > F || std::abs(mp) > Fp)
        throw std::domain_error("magnetic quantum number out of range");
    return raw_element(F, m, Fp, mp, p) / normalization();
}

Operator transition_operator(int F, int Fp, int p, const SpaceLayout& layout) {
    if (F < 1 || F > 2 || Fp < 1 || Fp > 2 || p < -1 || p > 1)
        throw std::domain_error("invalid dipole transition arguments");
    const int k = layout.factor_index(kAtomLabel);
    if (layout.factors[k].dim != kAtomDim)
        throw std::invalid_argument("atom factor must have dimension 16");

    int left = 1, right = 1;
    for (int i = 0; i < k; ++i) left *= layout.factors[i].dim;
    for (size_t i = k + 1; i < layout.factors.size(); ++i) right *= layout.factors[i].dim;

    const int dim = layout.total_dim();
    SpMat out(dim, dim);
    std::vector<Eigen::Triplet<Complex>> trip;
    for (int m = -F; m <= F; ++m) {
        const int mp = m + p;
        if (std::abs(mp) > Fp) continue;
        const double v = dipole_element(F, m, Fp, mp, p);
        if (v == 0.0) continue;
        const int row_a = level_index(Manifold::ground, F, m);
        const int col_a = level_index(Manifold::excited, Fp, mp);
        for (int l = 0; l < left; ++l)
            for (int r = 0; r < right; ++r)
                trip.emplace_back((l * kAtomDim + row_a) * right + r,
                                  (l * kAtomDim + col_a) * right + r, v);
    }
    out.setFromTriplets(trip.begin(), trip.end());
    return Operator(layout, std::move(out));
}

}  // namespace rabi
