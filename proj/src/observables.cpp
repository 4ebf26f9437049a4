// observables.cpp

#include "rabi/observables.hpp"

#include <cmath>

#include "rabi/models.hpp"

namespace rabi {

namespace {

struct FockView {
    int left = 1, dim = 0, right = 1;
};

FockView fock_view(const SpaceLayout& layout) {
    const int k = layout.factor_index("fock");
    FockView v;
    for (int i = 0; i < k; ++i) v.left *= layout.factors[i].dim;
    v.dim = layout.factors[k].dim;
    for (size_t i = k + 1; i < layout.factors.size(); ++i) v.right *= layout.factors[i].dim;
    return v;
}

// <f(n)> for a diagonal Fock function
template <class F>
double fock_diagonal_expectation(const DensityMatrix& rho, F&& f) {
    const FockView v = fock_view(rho.layout);
    double acc = 0.0;
    for (int n = 0; n < v.dim; ++n) {
        const double w = f(n);
        if (w == 0.0) continue;
        for (int l = 0; l < v.left; ++l)
            for (int r = 0; r < v.right; ++r) {
                const int idx = (l * v.dim + n) * v.right + r;
                acc += w * rho.rho(idx, idx).real();
            }
    }
    return acc;
}

void require_qubit_fock(const DensityMatrix& rho) {
    if (rho.layout.factors.size() != 2 || rho.layout.factors[0].label != kQubitLabel ||
        rho.layout.factors[0].dim != 2 || rho.layout.factors[1].label != "fock")
        throw std::invalid_argument("expected a qubit (x) fock layout");
}

}  // namespace

double survival_probability(const DensityMatrix& rho, const Vector& psi0) {
    if (psi0.size() != rho.dim())
        throw std::invalid_argument("reference state dimension mismatch");
    return std::real(psi0.dot(rho.rho * psi0));
}

double g2_zero(const DensityMatrix& rho) {
    const double n1 = fock_diagonal_expectation(rho, [](int n) { return double(n); });
    if (n1 <= 1e-9)
        throw UndefinedCorrelationError("g2(0) undefined: vanishing photon number");
    const double n2f = fock_diagonal_expectation(
        rho, [](int n) { return double(n) * double(n - 1); });  // <adag adag a a>
    return n2f / (n1 * n1);
}

double WignerGrid::integral() const {
    if (x_axis.size() < 2 || y_axis.size() < 2) return 0.0;
    const double dx = x_axis[1] - x_axis[0];
    const double dy = y_axis[1] - y_axis[0];
    double s = 0.0;
    for (const auto& row : values)
        for (double v : row) s += v;
    return 0.5 * s * dx * dy;  // d^2alpha = dx dy / 2
}

std::vector<WignerGrid::Peak> WignerGrid::local_maxima(double rel_threshold) const {
    std::vector<Peak> peaks;
    double wmax = 0.0;
    for (const auto& row : values)
        for (double v : row) wmax = std::max(wmax, v);
    const int ny = static_cast<int>(y_axis.size());
    const int nx = static_cast<int>(x_axis.size());
    for (int iy = 1; iy + 1 < ny; ++iy)
        for (int ix = 1; ix + 1 < nx; ++ix) {
            const double v = values[iy][ix];
            if (v <= rel_threshold * wmax) continue;
            bool is_max = true;
            for (int dy = -1; dy <= 1 && is_max; ++dy)
                for (int dx = -1; dx <= 1; ++dx) {
                    if (dx == 0 && dy == 0) continue;
                    if (values[iy + dy][ix + dx] >= v) {
                        is_max = false;
                        break;
                    }
                }
            if (is_max) peaks.push_back({x_axis[ix], y_axis[iy], v});
        }
    return peaks;
}

WignerGrid wigner(const DensityMatrix& rho_cav, const WignerSpec& spec) {
    if (rho_cav.layout.factors.size() != 1 || rho_cav.layout.factors[0].label != "fock")
        throw std::invalid_argument("wigner expects a cavity-only state; partial-trace first");
    const int n_max = rho_cav.dim();
    const double adequate =
        0.5 * (std::sqrt(std::max({spec.x_max * spec.x_max + spec.y_max * spec.y_max,
                                   spec.x_min * spec.x_min + spec.y_min * spec.y_min})));
    if (adequate * adequate + 6.0 * adequate + 10.0 > n_max)
        std::fputs("wigner: grid extends beyond the truncation-adequate region\n", stderr);

    WignerGrid grid;
    grid.x_axis.resize(spec.nx);
    grid.y_axis.resize(spec.ny);
    for (int i = 0; i < spec.nx; ++i)
        grid.x_axis[i] = spec.x_min + (spec.x_max - spec.x_min) * i / (spec.nx - 1);
    for (int i = 0; i < spec.ny; ++i)
        grid.y_axis[i] = spec.y_min + (spec.y_max - spec.y_min) * i / (spec.ny - 1);

    // D(x+iy) = e^{i phi} D(iy) D(x); the phase cancels inside the trace, so
    // per-row and per-column displacements are cached and composed.
    std::vector<Matrix> dx_cache(spec.nx), dy_cache(spec.ny);
    for (int i = 0; i < spec.nx; ++i)
        dx_cache[i] = displacement(Complex(grid.x_axis[i] / std::sqrt(2.0), 0.0), n_max,
                                   /*force=*/true).dense();
    for (int i = 0; i < spec.ny; ++i)
        dy_cache[i] = displacement(Complex(0.0, grid.y_axis[i] / std::sqrt(2.0)), n_max,
                                   /*force=*/true).dense();

    Vector parity(n_max);
    for (int n = 0; n < n_max; ++n) parity[n] = (n % 2 == 0) ? 1.0 : -1.0;

    grid.values.assign(spec.ny, std::vector<double>(spec.nx, 0.0));
    Matrix tmp(n_max, n_max), moved(n_max, n_max);
    for (int iy = 0; iy < spec.ny; ++iy) {
        const Matrix rho_y = dy_cache[iy].adjoint() * rho_cav.rho * dy_cache[iy];
        for (int ix = 0; ix < spec.nx; ++ix) {
            tmp.noalias() = dx_cache[ix].adjoint() * rho_y;
            moved.noalias() = tmp * dx_cache[ix];
            Complex tr = 0.0;
            for (int n = 0; n < n_max; ++n) tr += moved(n, n) * parity[n];
            grid.values[iy][ix] = (2.0 / M_PI) * tr.real();
        }
    }
    return grid;
}

double log_negativity(const DensityMatrix& rho, std::string_view part) {
    const Operator pt = partial_transpose(rho, part);
    const double tn = trace_norm_hermitian(pt.dense());
    return std::log2(std::max(tn, 1.0));
}

double cat_fidelity(const DensityMatrix& rho, Complex alpha) {
    require_qubit_fock(rho);
    const int n_max = rho.layout.factors[1].dim;
    const Vector plus = coherent_vector(alpha, n_max);
    const Vector minus = coherent_vector(-alpha, n_max);
    Vector psi = Vector::Zero(2 * n_max);
    psi.segment(0, n_max) = -0.5 * (plus - minus);      // |g> component
    psi.segment(n_max, n_max) = 0.5 * (plus + minus);   // |e> component
    const double norm = psi.norm();
    if (norm < 1e-12) return 0.0;
    psi /= norm;
    return survival_probability(rho, psi);
}

double parity_expectation(const DensityMatrix& rho) {
    require_qubit_fock(rho);
    const int n_max = rho.layout.factors[1].dim;
    double acc = 0.0;
    for (int q = 0; q < 2; ++q) {
        const double sz = (q == 0) ? -1.0 : 1.0;  // basis [g, e]
        for (int n = 0; n < n_max; ++n) {
            const double pn = (n % 2 == 0) ? 1.0 : -1.0;
            const int idx = q * n_max + n;
            acc += -sz * pn * rho.rho(idx, idx).real();
        }
    }
    return acc;
}

double mean_photon_number(const DensityMatrix& rho) {
    return fock_diagonal_expectation(rho, [](int n) { return double(n); });
}

double atomic_inversion(const DensityMatrix& rho) {
    require_qubit_fock(rho);
    const int n_max = rho.layout.factors[1].dim;
    double acc = 0.0;
    for (int n = 0; n < n_max; ++n)
        acc += rho.rho(n_max + n, n_max + n).real() - rho.rho(n, n).real();
    return acc;
}

double branch_phase(const DensityMatrix& rho) {
    require_qubit_fock(rho);
    const int n_max = rho.layout.factors[1].dim;
    // tr(sigma_x a rho) with sigma_x a |q, n> structure worked out directly
    Complex acc = 0.0;
    for (int n = 0; n + 1 < n_max; ++n) {
        const double s = std::sqrt(double(n + 1));
        // (sigma_x a)(g n; e n+1) and (e n; g n+1) entries hit rho(col, row)
        acc += s * rho.rho(n_max + n + 1, n);      // <e,n+1| rho |g,n>
        acc += s * rho.rho(n + 1, n_max + n);      // <g,n+1| rho |e,n>
    }
    if (std::abs(acc) < 1e-12) return 0.0;
    return std::arg(acc);
}

}  // namespace rabi
