#include <catch2/catch_amalgamated.hpp>

#include "rabi/angular.hpp"
#include "rabi/atom.hpp"

using namespace rabi;
using Catch::Approx;

TEST_CASE("wigner symbols match reference values", "[atom]") {
    // arguments are doubled quantum numbers
    CHECK(wigner_3j(2, 2, 2, 2, -2, 0) == Approx(0.408248290463863).margin(1e-14));
    CHECK(wigner_3j(4, 2, 2, 0, 0, 0) == Approx(0.3651483716701107).margin(1e-14));
    CHECK(wigner_3j(3, 2, 1, 1, 0, -1) == Approx(0.408248290463863).margin(1e-14));
    CHECK(wigner_3j(2, 2, 2, 2, -1, 0) == 0.0);  // m-sum selection rule
    CHECK(wigner_6j(1, 1, 2, 1, 1, 2) == Approx(1.0 / 6.0).margin(1e-14));
    CHECK(wigner_6j(1, 1, 2, 3, 3, 2) == Approx(0.26352313834736496).margin(1e-14));
    CHECK(wigner_6j(1, 1, 2, 4, 4, 3) == Approx(-0.22360679774997896).margin(1e-14));
    CHECK(wigner_6j(2, 4, 6, 4, 2, 4) == Approx(0.04364357804719848).margin(1e-14));
    CHECK(wigner_6j(1, 1, 6, 1, 1, 2) == 0.0);  // triangle violation
}

namespace {

// Frozen regression table generated once from an independent recoupling
// oracle: {F, m, F', m', p, element}.
struct DipoleEntry {
    int F, m, Fp, mp, p;
    double value;
};

constexpr DipoleEntry kDipoleTable[] = {
    {1, 0, 1, -1, -1, +0.288675134594813},  {1, -1, 1, -1, 0, +0.288675134594813},
    {2, 0, 1, -1, -1, +0.288675134594813},  {2, -1, 1, -1, 0, +0.500000000000000},
    {2, -2, 1, -1, +1, +0.707106781186547}, {1, +1, 1, 0, -1, +0.288675134594813},
    {1, -1, 1, 0, +1, -0.288675134594813},  {2, +1, 1, 0, -1, +0.500000000000000},
    {2, 0, 1, 0, 0, +0.577350269189626},    {2, -1, 1, 0, +1, +0.500000000000000},
    {1, +1, 1, +1, 0, -0.288675134594813},  {1, 0, 1, +1, +1, -0.288675134594813},
    {2, +2, 1, +1, -1, +0.707106781186547}, {2, +1, 1, +1, 0, +0.500000000000000},
    {2, 0, 1, +1, +1, +0.288675134594813},  {1, -1, 2, -2, -1, -0.707106781186547},
    {2, -1, 2, -2, -1, -0.408248290463863}, {2, -2, 2, -2, 0, -0.577350269189626},
    {1, 0, 2, -1, -1, -0.500000000000000},  {1, -1, 2, -1, 0, +0.500000000000000},
    {2, 0, 2, -1, -1, -0.500000000000000},  {2, -1, 2, -1, 0, -0.288675134594813},
    {2, -2, 2, -1, +1, +0.408248290463863}, {1, +1, 2, 0, -1, -0.288675134594813},
    {1, 0, 2, 0, 0, +0.577350269189626},    {1, -1, 2, 0, +1, -0.288675134594813},
    {2, +1, 2, 0, -1, -0.500000000000000},  {2, -1, 2, 0, +1, +0.500000000000000},
    {1, +1, 2, +1, 0, +0.500000000000000},  {1, 0, 2, +1, +1, -0.500000000000000},
    {2, +2, 2, +1, -1, -0.408248290463863}, {2, +1, 2, +1, 0, +0.288675134594813},
    {2, 0, 2, +1, +1, +0.500000000000000},  {1, +1, 2, +2, +1, -0.707106781186547},
    {2, +2, 2, +2, 0, +0.577350269189626},  {2, +1, 2, +2, +1, +0.408248290463863},
};

}  // namespace

TEST_CASE("dipole elements match the frozen oracle table", "[atom]") {
    for (const auto& e : kDipoleTable)
        CHECK(dipole_element(e.F, e.m, e.Fp, e.mp, e.p) == Approx(e.value).margin(1e-12));
}

TEST_CASE("selection rule: zero unless mp = m + p", "[atom]") {
    for (int F = 1; F <= 2; ++F)
        for (int Fp = 1; Fp <= 2; ++Fp)
            for (int m = -F; m <= F; ++m)
                for (int mp = -Fp; mp <= Fp; ++mp)
                    for (int p = -1; p <= 1; ++p)
                        if (mp != m + p)
                            REQUIRE(dipole_element(F, m, Fp, mp, p) == 0.0);
    REQUIRE_THROWS_AS(dipole_element(3, 0, 1, 0, 0), std::domain_error);
    REQUIRE_THROWS_AS(dipole_element(1, 2, 1, 1, -1), std::domain_error);
    REQUIRE_THROWS_AS(dipole_element(1, 0, 2, -2, -2), std::domain_error);
}

TEST_CASE("every excited sublevel couples with unit total weight", "[atom]") {
    for (int Fp = 1; Fp <= 2; ++Fp)
        for (int mp = -Fp; mp <= Fp; ++mp) {
            double sum = 0.0;
            for (int F = 1; F <= 2; ++F)
                for (int p = -1; p <= 1; ++p) {
                    const int m = mp - p;
                    if (std::abs(m) <= F) {
                        const double d = dipole_element(F, m, Fp, mp, p);
                        sum += d * d;
                    }
                }
            REQUIRE(sum == Approx(1.0).margin(1e-12));
        }
}

TEST_CASE("Raman path products carry the adiabatic-elimination prefactors", "[atom]") {
    const double inv_sqrt6 = 1.0 / std::sqrt(6.0);
    // pi cavity emission after the sigma- laser leg
    CHECK(std::abs(dipole_element(1, -1, 2, -2, -1) * dipole_element(2, -2, 2, -2, 0)) ==
          Approx(inv_sqrt6).margin(1e-12));
    // the two intermediate levels of the sigma+ laser leg
    CHECK(std::abs(dipole_element(2, -2, 1, -1, +1) * dipole_element(1, -1, 1, -1, 0)) ==
          Approx(0.5 * inv_sqrt6).margin(1e-12));
    CHECK(std::abs(dipole_element(2, -2, 2, -1, +1) * dipole_element(1, -1, 2, -1, 0)) ==
          Approx(0.5 * inv_sqrt6).margin(1e-12));
}

TEST_CASE("transition operators are nilpotent lowering maps", "[atom]") {
    SpaceLayout layout{{kAtomLabel, kAtomDim}, {"fock", 3}};
    for (int F = 1; F <= 2; ++F)
        for (int Fp = 1; Fp <= 2; ++Fp)
            for (int p = -1; p <= 1; ++p) {
                Operator a = transition_operator(F, Fp, p, layout);
                REQUIRE(max_abs((a * a).sparse()) == 0.0);
            }
    REQUIRE_THROWS_AS(transition_operator(0, 1, 0, layout), std::domain_error);
}

TEST_CASE("summed A^dag A is the identity on the excited manifold", "[atom]") {
    SpaceLayout layout = SpaceLayout::single(kAtomLabel, kAtomDim);
    Matrix sum = Matrix::Zero(kAtomDim, kAtomDim);
    for (int F = 1; F <= 2; ++F)
        for (int Fp = 1; Fp <= 2; ++Fp)
            for (int p = -1; p <= 1; ++p) {
                Matrix a = transition_operator(F, Fp, p, layout).dense();
                sum += a.adjoint() * a;
            }
    for (int l = 0; l < kAtomDim; ++l) {
        const bool excited = atomic_levels()[l].manifold == Manifold::excited;
        REQUIRE(sum(l, l).real() == Approx(excited ? 1.0 : 0.0).margin(1e-12));
    }
    REQUIRE((sum - sum.diagonal().asDiagonal().toDenseMatrix()).cwiseAbs().maxCoeff() < 1e-12);
}

TEST_CASE("pi-polarized F=1 to F'=1 block has rank 2", "[atom]") {
    SpaceLayout layout = SpaceLayout::single(kAtomLabel, kAtomDim);
    Matrix a = transition_operator(1, 1, 0, layout).dense();
    Eigen::JacobiSVD<Matrix> svd(a);
    int rank = 0;
    for (int i = 0; i < svd.singularValues().size(); ++i)
        if (svd.singularValues()[i] > 1e-12) ++rank;
    REQUIRE(rank == 2);  // the m = 0 -> m' = 0 element vanishes
}

TEST_CASE("adjoint of a transition operator raises what it lowers", "[atom]") {
    SpaceLayout layout = SpaceLayout::single(kAtomLabel, kAtomDim);
    Operator low = transition_operator(2, 1, +1, layout);
    Matrix up = low.adjoint().dense();
    // |1', -1><2, -2| entry present with the same (real) amplitude
    const int ge = level_index(Manifold::excited, 1, -1);
    const int gg = level_index(Manifold::ground, 2, -2);
    REQUIRE(up(ge, gg).real() == Approx(dipole_element(2, -2, 1, -1, +1)).margin(1e-14));
    REQUIRE(up(ge, gg).imag() == 0.0);
    REQUIRE(low.dense()(ge, gg) == Complex(0.0, 0.0));
}

TEST_CASE("atomic level indexing is the documented order", "[atom]") {
    REQUIRE(level_index(Manifold::ground, 1, -1) == 0);
    REQUIRE(level_index(Manifold::ground, 2, -2) == 3);
    REQUIRE(level_index(Manifold::excited, 1, -1) == 8);
    REQUIRE(level_index(Manifold::excited, 2, 2) == 15);
    REQUIRE(atomic_levels().size() == 16);
    REQUIRE_THROWS_AS(level_index(Manifold::ground, 2, 3), std::domain_error);
}
