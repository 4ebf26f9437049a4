// support.hpp — shared helpers for the test suite

#pragma once

#include <random>

#include "rabi/space.hpp"

namespace rabi::test {

inline std::mt19937_64& rng() {
    static std::mt19937_64 gen(0x5eed5eedULL);
    return gen;
}

inline Matrix random_complex_matrix(int rows, int cols) {
    std::normal_distribution<double> dist(0.0, 1.0);
    Matrix m(rows, cols);
    for (int i = 0; i < rows; ++i)
        for (int j = 0; j < cols; ++j) m(i, j) = Complex(dist(rng()), dist(rng()));
    return m;
}

inline Vector random_state_vector(int dim) {
    Vector v = random_complex_matrix(dim, 1);
    return v / v.norm();
}

// Haar-ish unitary from the QR of a Gaussian matrix
inline Matrix random_unitary(int dim) {
    Eigen::HouseholderQR<Matrix> qr(random_complex_matrix(dim, dim));
    Matrix q = qr.householderQ();
    return q;
}

inline DensityMatrix random_density_matrix(const SpaceLayout& layout) {
    const int d = layout.total_dim();
    Matrix g = random_complex_matrix(d, d);
    Matrix rho = g * g.adjoint();
    rho /= rho.trace().real();
    return DensityMatrix{layout, rho};
}

}  // namespace rabi::test
