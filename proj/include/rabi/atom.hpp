// atom.hpp — Rb-87 D1 level structure, dipole matrix elements, and the
// hyperfine transition operators entering the full Hamiltonian.

#pragma once

#include <array>

#include "rabi/space.hpp"

namespace rabi {

struct AtomConstants {
    double omega2 = 6835.0;   // ground hyperfine splitting, MHz
    double omega21p = 812.0;  // excited hyperfine splitting, MHz
    double gamma = 5.7;       // D1 decay rate, MHz
};

enum class Manifold { ground, excited };

struct AtomicLevel {
    Manifold manifold;
    int F;
    int m;
};

inline constexpr int kAtomDim = 16;
inline constexpr const char* kAtomLabel = "atom";

/// All 16 D1 levels: ground F=1, ground F=2, excited F'=1, excited F'=2,
/// each with m ascending. This order fixes the atomic basis everywhere.
const std::array<AtomicLevel, kAtomDim>& atomic_levels();
int level_index(Manifold manifold, int F, int m);

/// Signed dipole element <F,m|mu_p|F',mp>, Condon-Shortley phases,
/// normalized so every excited sublevel couples with total weight 1.
/// Zero unless mp = m + p; throws on invalid quantum numbers.
double dipole_element(int F, int m, int Fp, int mp, int p);

/// Lowering operator A^(p)_{FF'} = sum_m <F,m|mu_p|F',m+p> |F,m><F',m+p|
/// embedded in `layout` (identity on non-atomic factors).
Operator transition_operator(int F, int Fp, int p, const SpaceLayout& layout);

}  // namespace rabi
