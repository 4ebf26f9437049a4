// space.cpp — layouts, tensor algebra, partial trace/transpose, displacement

#include "rabi/space.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>

#include <Eigen/Eigenvalues>

namespace rabi {

SpaceLayout::SpaceLayout(std::initializer_list<Factor> fs) : factors(fs) {
    for (const auto& f : factors) {
        if (f.dim < 1) throw std::invalid_argument("factor dimension must be positive");
    }
    for (size_t i = 0; i < factors.size(); ++i)
        for (size_t j = i + 1; j < factors.size(); ++j)
            if (factors[i].label == factors[j].label)
                throw std::invalid_argument("duplicate factor label: " + factors[i].label);
}

int SpaceLayout::total_dim() const {
    int d = 1;
    for (const auto& f : factors) d *= f.dim;
    return d;
}

int SpaceLayout::factor_index(std::string_view label) const {
    for (size_t i = 0; i < factors.size(); ++i)
        if (factors[i].label == label) return static_cast<int>(i);
    throw std::out_of_range("unknown factor label: " + std::string(label));
}

bool SpaceLayout::has_factor(std::string_view label) const {
    return std::any_of(factors.begin(), factors.end(),
                       [&](const Factor& f) { return f.label == label; });
}

bool SpaceLayout::operator==(const SpaceLayout& other) const {
    if (factors.size() != other.factors.size()) return false;
    for (size_t i = 0; i < factors.size(); ++i)
        if (factors[i].label != other.factors[i].label || factors[i].dim != other.factors[i].dim)
            return false;
    return true;
}

SpaceLayout SpaceLayout::single(std::string label, int dim) {
    SpaceLayout l;
    l.factors.push_back({std::move(label), dim});
    if (dim < 1) throw std::invalid_argument("factor dimension must be positive");
    return l;
}

SpaceLayout SpaceLayout::concat(const SpaceLayout& a, const SpaceLayout& b) {
    SpaceLayout l = a;
    for (const auto& f : b.factors) {
        if (l.has_factor(f.label))
            throw std::invalid_argument("duplicate factor label: " + f.label);
        l.factors.push_back(f);
    }
    return l;
}

Operator::Operator(SpaceLayout layout, SpMat mat)
    : layout_(std::move(layout)), mat_(std::move(mat)) {
    if (mat_.rows() != mat_.cols()) throw std::invalid_argument("operator must be square");
    if (mat_.rows() != layout_.total_dim())
        throw std::invalid_argument("operator dimension does not match layout");
}

Operator::Operator(SpaceLayout layout, const Matrix& mat)
    : Operator(std::move(layout), SpMat(mat.sparseView())) {}

Operator Operator::adjoint() const {
    return Operator(layout_, SpMat(mat_.adjoint()));
}

bool Operator::is_hermitian(double rel_tol) const {
    const double scale = std::max(max_abs(mat_), 1e-300);
    SpMat diff = SpMat(mat_.adjoint()) - mat_;
    return max_abs(diff) < rel_tol * scale;
}

Operator& Operator::operator+=(const Operator& o) {
    if (!(layout_ == o.layout_)) throw std::invalid_argument("layout mismatch in operator sum");
    mat_ += o.mat_;
    return *this;
}

Operator& Operator::operator-=(const Operator& o) {
    if (!(layout_ == o.layout_)) throw std::invalid_argument("layout mismatch in operator sum");
    mat_ -= o.mat_;
    return *this;
}

Operator& Operator::operator*=(Complex c) {
    mat_ *= c;
    return *this;
}

Operator operator*(const Operator& a, const Operator& b) {
    if (!(a.layout() == b.layout()))
        throw std::invalid_argument("layout mismatch in operator product");
    return Operator(a.layout(), SpMat(a.sparse() * b.sparse()));
}

void DensityMatrix::validate(double trace_tol, double herm_tol, double positivity_tol) const {
    if (rho.rows() != rho.cols() || rho.rows() != layout.total_dim())
        throw std::runtime_error("density matrix dimension does not match layout");
    const double tr_err = std::abs(rho.trace() - Complex(1.0, 0.0));
    if (tr_err > trace_tol)
        throw std::runtime_error("density matrix trace deviates from 1 by " + std::to_string(tr_err));
    const double herm_err = (rho - rho.adjoint()).cwiseAbs().maxCoeff();
    if (herm_err > herm_tol)
        throw std::runtime_error("density matrix is not Hermitian: deviation " + std::to_string(herm_err));
    const double min_ev = hermitian_eigenvalues(0.5 * (rho + rho.adjoint())).minCoeff();
    if (min_ev < -positivity_tol)
        throw std::runtime_error("density matrix has negative eigenvalue " + std::to_string(min_ev));
}

DensityMatrix DensityMatrix::from_pure(const SpaceLayout& layout, const Vector& psi) {
    if (psi.size() != layout.total_dim())
        throw std::invalid_argument("state vector dimension does not match layout");
    const double n = psi.norm();
    if (n == 0.0) throw std::invalid_argument("zero state vector");
    Vector v = psi / n;
    return DensityMatrix{layout, v * v.adjoint()};
}

std::pair<Operator, Operator> fock_ops(int n_max) {
    if (n_max < 2) throw std::invalid_argument("Fock cutoff must be at least 2");
    SpaceLayout layout = SpaceLayout::single("fock", n_max);
    SpMat a(n_max, n_max), num(n_max, n_max);
    std::vector<Eigen::Triplet<Complex>> ta, tn;
    for (int n = 1; n < n_max; ++n) {
        ta.emplace_back(n - 1, n, std::sqrt(static_cast<double>(n)));
        tn.emplace_back(n, n, static_cast<double>(n));
    }
    a.setFromTriplets(ta.begin(), ta.end());
    num.setFromTriplets(tn.begin(), tn.end());
    return {Operator(layout, std::move(a)), Operator(layout, std::move(num))};
}

Vector coherent_vector(Complex alpha, int n_max) {
    Vector v(n_max);
    v[0] = 1.0;
    for (int n = 1; n < n_max; ++n) v[n] = v[n - 1] * alpha / std::sqrt(static_cast<double>(n));
    v *= std::exp(-0.5 * std::norm(alpha));
    return v / v.norm();
}

Operator tensor(std::span<const Operator> ops) {
    if (ops.empty()) throw std::invalid_argument("tensor of zero operators");
    Operator out = ops[0];
    for (size_t k = 1; k < ops.size(); ++k) out = tensor(out, ops[k]);
    return out;
}

Operator tensor(const Operator& a, const Operator& b) {
    const SpMat& A = a.sparse();
    const SpMat& B = b.sparse();
    const int db = static_cast<int>(B.rows());
    SpMat out(A.rows() * db, A.cols() * db);
    std::vector<Eigen::Triplet<Complex>> trip;
    trip.reserve(static_cast<size_t>(A.nonZeros()) * B.nonZeros());
    for (int i = 0; i < A.outerSize(); ++i)
        for (SpMat::InnerIterator ia(A, i); ia; ++ia)
            for (int j = 0; j < B.outerSize(); ++j)
                for (SpMat::InnerIterator ib(B, j); ib; ++ib)
                    trip.emplace_back(static_cast<int>(ia.row()) * db + static_cast<int>(ib.row()),
                                      static_cast<int>(ia.col()) * db + static_cast<int>(ib.col()),
                                      ia.value() * ib.value());
    out.setFromTriplets(trip.begin(), trip.end());
    return Operator(SpaceLayout::concat(a.layout(), b.layout()), std::move(out));
}

namespace {

// strides around factor k: rho index = (left*dim_k + m)*right + r
struct FactorStrides {
    int left = 1, dim = 1, right = 1;
};

FactorStrides strides_for(const SpaceLayout& layout, int k) {
    FactorStrides s;
    for (int i = 0; i < k; ++i) s.left *= layout.factors[i].dim;
    s.dim = layout.factors[k].dim;
    for (size_t i = k + 1; i < layout.factors.size(); ++i)
        s.right *= layout.factors[i].dim;
    return s;
}

}  // namespace

DensityMatrix partial_trace(const DensityMatrix& rho, std::string_view keep) {
    const int k = rho.layout.factor_index(keep);
    const FactorStrides s = strides_for(rho.layout, k);
    Matrix out = Matrix::Zero(s.dim, s.dim);
    for (int m = 0; m < s.dim; ++m)
        for (int mp = 0; mp < s.dim; ++mp) {
            Complex acc = 0.0;
            for (int l = 0; l < s.left; ++l)
                for (int r = 0; r < s.right; ++r) {
                    const int row = (l * s.dim + m) * s.right + r;
                    const int col = (l * s.dim + mp) * s.right + r;
                    acc += rho.rho(row, col);
                }
            out(m, mp) = acc;
        }
    return DensityMatrix{SpaceLayout::single(rho.layout.factors[k].label, s.dim), std::move(out)};
}

Operator partial_transpose(const DensityMatrix& rho, std::string_view part) {
    if (rho.layout.factors.size() != 2)
        throw std::invalid_argument("partial transpose requires a bipartite layout");
    const int k = rho.layout.factor_index(part);
    const int d0 = rho.layout.factors[0].dim;
    const int d1 = rho.layout.factors[1].dim;
    Matrix out(rho.dim(), rho.dim());
    for (int i0 = 0; i0 < d0; ++i0)
        for (int i1 = 0; i1 < d1; ++i1)
            for (int j0 = 0; j0 < d0; ++j0)
                for (int j1 = 0; j1 < d1; ++j1) {
                    const int row = i0 * d1 + i1;
                    const int col = j0 * d1 + j1;
                    const int trow = (k == 0 ? j0 : i0) * d1 + (k == 1 ? j1 : i1);
                    const int tcol = (k == 0 ? i0 : j0) * d1 + (k == 1 ? i1 : j1);
                    out(trow, tcol) = rho.rho(row, col);
                }
    return Operator(rho.layout, out);
}

Operator displacement(Complex alpha, int n_max, bool force) {
    if (n_max < 2) throw std::invalid_argument("Fock cutoff must be at least 2");
    const double amag = std::abs(alpha);
    if (!force && amag * amag + 6.0 * amag + 10.0 > static_cast<double>(n_max))
        throw TruncationError("displacement amplitude too large for Fock cutoff " +
                              std::to_string(n_max));
    auto [a_op, num] = fock_ops(n_max);
    (void)num;
    Matrix a = a_op.dense();
    // alpha a^dag - alpha^* a is anti-Hermitian; exponentiate via K = -i(...)
    Matrix K = Complex(0.0, -1.0) * (alpha * a.adjoint() - std::conj(alpha) * a);
    auto [vals, vecs] = hermitian_eig(K);
    Vector phases(n_max);
    for (int i = 0; i < n_max; ++i) phases[i] = std::exp(Complex(0.0, vals[i]));
    Matrix D = vecs * phases.asDiagonal() * vecs.adjoint();
    return Operator(a_op.layout(), D);
}

RealVector hermitian_eigenvalues(const Matrix& m) {
    Eigen::SelfAdjointEigenSolver<Matrix> es(m, Eigen::EigenvaluesOnly);
    return es.eigenvalues();
}

std::pair<RealVector, Matrix> hermitian_eig(const Matrix& m) {
    Eigen::SelfAdjointEigenSolver<Matrix> es(m);
    return {es.eigenvalues(), es.eigenvectors()};
}

Eigen::VectorXcd general_eigenvalues(const Eigen::MatrixXd& m) {
    Eigen::EigenSolver<Eigen::MatrixXd> es(m, false);
    return es.eigenvalues();
}

Vector lu_solve(const Matrix& a, const Vector& b) {
    return a.partialPivLu().solve(b);
}

double frobenius_norm(const Matrix& m) { return m.norm(); }

double trace_norm_hermitian(const Matrix& m) {
    return hermitian_eigenvalues(m).cwiseAbs().sum();
}

double max_abs(const SpMat& m) {
    double v = 0.0;
    for (int i = 0; i < m.outerSize(); ++i)
        for (SpMat::InnerIterator it(m, i); it; ++it) v = std::max(v, std::abs(it.value()));
    return v;
}

}  // namespace rabi
