#include <catch2/catch_amalgamated.hpp>

#include "rabi/models.hpp"
#include "rabi/observables.hpp"

#include "support.hpp"

using namespace rabi;
using Catch::Approx;

namespace {

DensityMatrix cavity_state(const Matrix& rho) {
    return DensityMatrix{SpaceLayout::single("fock", static_cast<int>(rho.rows())), rho};
}

DensityMatrix coherent_density(Complex alpha, int n_max) {
    Vector v = coherent_vector(alpha, n_max);
    return cavity_state(v * v.adjoint());
}

DensityMatrix thermal_density(double nbar, int n_max) {
    Matrix rho = Matrix::Zero(n_max, n_max);
    const double q = nbar / (1.0 + nbar);
    double w = 1.0;
    double norm = 0.0;
    for (int n = 0; n < n_max; ++n, w *= q) {
        rho(n, n) = w;
        norm += w;
    }
    rho /= norm;
    return cavity_state(rho);
}

}  // namespace

TEST_CASE("survival probability endpoints", "[observables]") {
    SpaceLayout layout{{kQubitLabel, 2}, {"fock", 4}};
    Vector psi = Vector::Zero(8);
    psi[0] = 1.0;
    DensityMatrix rho = DensityMatrix::from_pure(layout, psi);
    CHECK(survival_probability(rho, psi) == Approx(1.0).margin(1e-14));
    Vector orth = Vector::Zero(8);
    orth[5] = 1.0;
    CHECK(survival_probability(rho, orth) == Approx(0.0).margin(1e-14));
}

TEST_CASE("g2 of reference field states", "[observables]") {
    CHECK(g2_zero(coherent_density(Complex(1.3, 0.4), 40)) == Approx(1.0).margin(1e-8));

    Matrix fock1 = Matrix::Zero(6, 6);
    fock1(1, 1) = 1.0;
    CHECK(g2_zero(cavity_state(fock1)) == Approx(0.0).margin(1e-14));

    CHECK(g2_zero(thermal_density(2.0, 60)) == Approx(2.0).margin(1e-6));

    Matrix vac = Matrix::Zero(6, 6);
    vac(0, 0) = 1.0;
    REQUIRE_THROWS_AS(g2_zero(cavity_state(vac)), UndefinedCorrelationError);
}

TEST_CASE("mixtures of coherent states are never sub-Poissonian", "[observables]") {
    std::uniform_real_distribution<double> amp(0.2, 2.0), phase(0.0, 2 * M_PI),
        weight(0.1, 1.0);
    const int n_max = 40;
    for (int trial = 0; trial < 8; ++trial) {
        Matrix rho = Matrix::Zero(n_max, n_max);
        double wsum = 0.0;
        for (int k = 0; k < 4; ++k) {
            const double w = weight(test::rng());
            const Complex a = std::polar(amp(test::rng()), phase(test::rng()));
            Vector v = coherent_vector(a, n_max);
            rho += w * (v * v.adjoint());
            wsum += w;
        }
        rho /= wsum;
        REQUIRE(g2_zero(cavity_state(rho)) >= 1.0 - 1e-9);
    }
}

TEST_CASE("wigner of the vacuum and of coherent states", "[observables]") {
    Matrix vac = Matrix::Zero(24, 24);
    vac(0, 0) = 1.0;
    WignerSpec spec;
    spec.x_min = spec.y_min = -4.0;
    spec.x_max = spec.y_max = 4.0;
    spec.nx = spec.ny = 81;
    WignerGrid w = wigner(cavity_state(vac), spec);
    const int mid = 40;  // x = y = 0
    CHECK(w.values[mid][mid] == Approx(2.0 / M_PI).margin(1e-8));
    CHECK(w.integral() == Approx(1.0).margin(0.03));

    const Complex alpha0(0.8, -0.6);
    WignerGrid wc = wigner(coherent_density(alpha0, 30), spec);
    for (int iy = 10; iy < 81; iy += 20)
        for (int ix = 10; ix < 81; ix += 20) {
            const Complex a(wc.x_axis[ix] / std::sqrt(2.0), wc.y_axis[iy] / std::sqrt(2.0));
            const double expect = (2.0 / M_PI) * std::exp(-2.0 * std::norm(a - alpha0));
            REQUIRE(wc.values[iy][ix] == Approx(expect).margin(1e-6));
        }
    CHECK(wc.integral() == Approx(1.0).margin(0.03));

    // an even cat has exactly two dominant peaks on this grid
    const int n_max = 40;
    Vector cat = coherent_vector(Complex(2.0, 0.0), n_max) +
                 coherent_vector(Complex(-2.0, 0.0), n_max);
    cat /= cat.norm();
    WignerGrid wcat = wigner(cavity_state(Matrix(cat * cat.adjoint())), spec);
    int big = 0;
    for (const auto& p : wcat.local_maxima(0.5)) big += p.value > 0.0 ? 1 : 0;
    CHECK(big == 2);
}

TEST_CASE("log negativity of reference states", "[observables]") {
    SpaceLayout two_qubits{{"A", 2}, {"B", 2}};
    // product states carry none
    DensityMatrix a = test::random_density_matrix(SpaceLayout::single("A", 2));
    DensityMatrix b = test::random_density_matrix(SpaceLayout::single("B", 2));
    Matrix prod = Matrix::Zero(4, 4);
    for (int i = 0; i < 2; ++i)
        for (int j = 0; j < 2; ++j) prod.block(i * 2, j * 2, 2, 2) = a.rho(i, j) * b.rho;
    CHECK(log_negativity(DensityMatrix{two_qubits, prod}, "A") == Approx(0.0).margin(1e-10));

    Vector bell = Vector::Zero(4);
    bell[0] = bell[3] = 1.0 / std::sqrt(2.0);
    CHECK(log_negativity(DensityMatrix::from_pure(two_qubits, bell), "A") ==
          Approx(1.0).margin(1e-10));

    // qubit (x) field cat with well-separated branches approaches one ebit
    const int n_max = 40;
    SpaceLayout qf{{kQubitLabel, 2}, {"fock", n_max}};
    Vector plus = coherent_vector(Complex(2.5, 0.0), n_max);
    Vector minus = coherent_vector(Complex(-2.5, 0.0), n_max);
    Vector psi = Vector::Zero(2 * n_max);
    psi.segment(0, n_max) = plus;
    psi.segment(n_max, n_max) = minus;
    psi /= psi.norm();
    const double en = log_negativity(DensityMatrix::from_pure(qf, psi), kQubitLabel);
    CHECK(en > 0.99);
    CHECK(en <= 1.0 + 1e-9);
}

TEST_CASE("log negativity is invariant under local unitaries", "[observables]") {
    SpaceLayout layout{{"A", 2}, {"B", 5}};
    DensityMatrix rho = DensityMatrix::from_pure(layout, test::random_state_vector(10));
    const double before = log_negativity(rho, "A");
    for (int trial = 0; trial < 4; ++trial) {
        Matrix ua = test::random_unitary(2);
        Matrix ub = test::random_unitary(5);
        Matrix u = Matrix::Zero(10, 10);
        for (int i = 0; i < 2; ++i)
            for (int j = 0; j < 2; ++j) u.block(i * 5, j * 5, 5, 5) = ua(i, j) * ub;
        DensityMatrix rotated{layout, u * rho.rho * u.adjoint()};
        REQUIRE(log_negativity(rotated, "A") == Approx(before).margin(1e-8));
    }
}

TEST_CASE("cat fidelity endpoints", "[observables]") {
    const int n_max = 40;
    SpaceLayout qf{{kQubitLabel, 2}, {"fock", n_max}};
    const Complex alpha(1.7, 0.4);
    Vector plus = coherent_vector(alpha, n_max), minus = coherent_vector(-alpha, n_max);
    Vector psi = Vector::Zero(2 * n_max);
    psi.segment(0, n_max) = -0.5 * (plus - minus);
    psi.segment(n_max, n_max) = 0.5 * (plus + minus);
    psi /= psi.norm();
    DensityMatrix rho = DensityMatrix::from_pure(qf, psi);
    CHECK(cat_fidelity(rho, alpha) == Approx(1.0).margin(1e-12));

    // vacuum (x) |g> has essentially no overlap with a separated cat
    Vector g0 = Vector::Zero(2 * n_max);
    g0[0] = 1.0;
    CHECK(cat_fidelity(DensityMatrix::from_pure(qf, g0), Complex(2.0, 0.0)) ==
          Approx(0.0).margin(1e-3));
}

TEST_CASE("parity of the pole states", "[observables]") {
    const int n_max = 6;
    SpaceLayout qf{{kQubitLabel, 2}, {"fock", n_max}};
    Vector g0 = Vector::Zero(2 * n_max), e0 = Vector::Zero(2 * n_max);
    g0[0] = 1.0;
    e0[n_max] = 1.0;
    CHECK(parity_expectation(DensityMatrix::from_pure(qf, g0)) == Approx(1.0).margin(1e-14));
    CHECK(parity_expectation(DensityMatrix::from_pure(qf, e0)) == Approx(-1.0).margin(1e-14));
}
