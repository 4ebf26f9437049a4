// space.hpp — Composite Hilbert-space layouts, operators, density matrices,
// and the small linear-algebra surface the rest of the library builds on.

#pragma once

#include <complex>
#include <span>
#include <stdexcept>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include <Eigen/Dense>
#include <Eigen/Sparse>

namespace rabi {

using Complex = std::complex<double>;
using Matrix = Eigen::MatrixXcd;
using Vector = Eigen::VectorXcd;
using RealVector = Eigen::VectorXd;
using SpMat = Eigen::SparseMatrix<Complex, Eigen::RowMajor>;

inline constexpr double kTwoPi = 6.283185307179586476925286766559;

/// Thrown when an operator or state would exceed its truncated basis.
struct TruncationError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

/// Ordered tensor factors making up a composite space.
struct SpaceLayout {
    struct Factor {
        std::string label;
        int dim = 0;
    };
    std::vector<Factor> factors;

    SpaceLayout() = default;
    SpaceLayout(std::initializer_list<Factor> fs);

    int total_dim() const;
    int factor_index(std::string_view label) const;  // throws on unknown label
    bool has_factor(std::string_view label) const;
    bool operator==(const SpaceLayout& other) const;

    static SpaceLayout single(std::string label, int dim);
    static SpaceLayout concat(const SpaceLayout& a, const SpaceLayout& b);
};

/// A (possibly sparse) square matrix tagged with its space layout.
class Operator {
public:
    Operator() = default;
    Operator(SpaceLayout layout, SpMat mat);
    Operator(SpaceLayout layout, const Matrix& mat);

    const SpaceLayout& layout() const { return layout_; }
    int dim() const { return static_cast<int>(mat_.rows()); }
    const SpMat& sparse() const { return mat_; }
    Matrix dense() const { return Matrix(mat_); }

    Operator adjoint() const;
    bool is_hermitian(double rel_tol = 1e-12) const;

    Operator& operator+=(const Operator& o);
    Operator& operator-=(const Operator& o);
    Operator& operator*=(Complex c);
    friend Operator operator+(Operator a, const Operator& b) { return a += b; }
    friend Operator operator-(Operator a, const Operator& b) { return a -= b; }
    friend Operator operator*(Complex c, Operator a) { return a *= c; }
    friend Operator operator*(const Operator& a, const Operator& b);

private:
    SpaceLayout layout_;
    SpMat mat_;
};

/// Dense Hermitian, unit-trace, positive (within tolerance) state.
struct DensityMatrix {
    SpaceLayout layout;
    Matrix rho;

    int dim() const { return static_cast<int>(rho.rows()); }

    /// Asserts the state invariants; throws std::runtime_error on violation.
    void validate(double trace_tol = 1e-8, double herm_tol = 1e-10,
                  double positivity_tol = 1e-8) const;

    static DensityMatrix from_pure(const SpaceLayout& layout, const Vector& psi);
};

// --- elementary constructions ------------------------------------------------

/// Annihilation and number operators on an n_max-dimensional Fock space.
/// The factor is labelled "fock". Requires n_max >= 2.
std::pair<Operator, Operator> fock_ops(int n_max);

/// Normalized coherent-state vector in the truncated Fock basis.
Vector coherent_vector(Complex alpha, int n_max);

/// Kronecker product in the given factor order; layouts are concatenated.
Operator tensor(std::span<const Operator> ops);
Operator tensor(const Operator& a, const Operator& b);

/// Reduce onto the factor named `keep`, tracing out all others.
DensityMatrix partial_trace(const DensityMatrix& rho, std::string_view keep);

/// Transpose the factor named `part` of a bipartite state.
Operator partial_transpose(const DensityMatrix& rho, std::string_view part);

/// exp(alpha a^dag - alpha^* a) on a truncated Fock space. Refuses to build
/// when |alpha|^2 + 6|alpha| + 10 > n_max unless `force` is set.
Operator displacement(Complex alpha, int n_max, bool force = false);

// --- linear-algebra capability surface ---------------------------------------

/// Eigenvalues of a Hermitian matrix, ascending.
RealVector hermitian_eigenvalues(const Matrix& m);

/// Eigen-decomposition of a Hermitian matrix: {values, vectors (columns)}.
std::pair<RealVector, Matrix> hermitian_eig(const Matrix& m);

/// Eigenvalues of a general (small) real matrix.
Eigen::VectorXcd general_eigenvalues(const Eigen::MatrixXd& m);

/// Dense LU linear solve.
Vector lu_solve(const Matrix& a, const Vector& b);

double frobenius_norm(const Matrix& m);
double trace_norm_hermitian(const Matrix& m);  // sum |eigenvalues|
double max_abs(const SpMat& m);

}  // namespace rabi
