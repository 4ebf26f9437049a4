// dynamics.cpp — Lindblad propagation kernels and the steady-state solver

#include "rabi/dynamics.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>

#include <Eigen/SparseLU>

#include "rabi/detail/dp45.hpp"

namespace rabi {

namespace {

using RMatrix = Eigen::Matrix<Complex, Eigen::Dynamic, Eigen::Dynamic, Eigen::RowMajor>;

std::vector<int> nonzero_rows(const SpMat& m) {
    std::vector<int> rows;
    for (int i = 0; i < m.outerSize(); ++i)
        if (m.outerIndexPtr()[i + 1] > m.outerIndexPtr()[i]) rows.push_back(i);
    return rows;
}

// compressed row storage with raw arrays for the propagation hot path
struct Csr {
    int dim = 0;
    std::vector<int> ptr, col;
    std::vector<Complex> val;

    static Csr from(const SpMat& m0) {
        SpMat m = m0;
        m.makeCompressed();
        Csr c;
        c.dim = static_cast<int>(m.rows());
        c.ptr.assign(m.outerIndexPtr(), m.outerIndexPtr() + m.rows() + 1);
        c.col.assign(m.innerIndexPtr(), m.innerIndexPtr() + m.nonZeros());
        c.val.assign(m.valuePtr(), m.valuePtr() + m.nonZeros());
        return c;
    }
};

// row = v * x  /  row += v * x over interleaved re/im doubles
inline void row_assign_scaled(double* __restrict row, const double* __restrict x,
                              double vr, double vi, int n) {
    for (int j = 0; j < n; ++j) {
        const double xr = x[2 * j], xi = x[2 * j + 1];
        row[2 * j] = vr * xr - vi * xi;
        row[2 * j + 1] = vr * xi + vi * xr;
    }
}

inline void row_add_scaled(double* __restrict row, const double* __restrict x, double vr,
                           double vi, int n) {
    for (int j = 0; j < n; ++j) {
        const double xr = x[2 * j], xi = x[2 * j + 1];
        row[2 * j] += vr * xr - vi * xi;
        row[2 * j + 1] += vr * xi + vi * xr;
    }
}

// out = m * x with per-row assignment-first accumulation
void left_product(RMatrix& out, const Csr& m, const RMatrix& x) {
    const int d = m.dim;
    const double* xp = reinterpret_cast<const double*>(x.data());
    double* op = reinterpret_cast<double*>(out.data());
    for (int i = 0; i < d; ++i) {
        double* orow = op + 2 * static_cast<size_t>(i) * d;
        int k = m.ptr[i];
        const int end = m.ptr[i + 1];
        if (k == end) {
            std::fill(orow, orow + 2 * d, 0.0);
            continue;
        }
        row_assign_scaled(orow, xp + 2 * static_cast<size_t>(m.col[k]) * d,
                          m.val[k].real(), m.val[k].imag(), d);
        for (++k; k < end; ++k)
            row_add_scaled(orow, xp + 2 * static_cast<size_t>(m.col[k]) * d,
                           m.val[k].real(), m.val[k].imag(), d);
    }
}

// out += out^dag, in place (the argument then equals X + X^dag)
void add_own_adjoint(RMatrix& out) {
    const int d = static_cast<int>(out.rows());
    constexpr int B = 16;
    for (int ib = 0; ib < d; ib += B)
        for (int jb = 0; jb <= ib; jb += B) {
            const int imax = std::min(ib + B, d);
            for (int i = ib; i < imax; ++i) {
                const int jmax = std::min({jb + B, i + 1, d});
                for (int j = jb; j < jmax; ++j) {
                    if (i == j) {
                        out(i, i) = Complex(2.0 * out(i, i).real(), 0.0);
                    } else {
                        const Complex s = out(i, j) + std::conj(out(j, i));
                        out(i, j) = s;
                        out(j, i) = std::conj(s);
                    }
                }
            }
        }
}

// Applies L[sigma] for Hermitian sigma. Uses
//   L[s] = G(t) s + (G(t) s)^dag + sum_j 2 r_j c_j s c_j^dag,
//   G(t) = -i H(t) - sum_j r_j c_j^dag c_j,
// which holds because every commutator/anticommutator piece of a Hermitian
// argument is X + X^dag for X = G s.
class LiouvilleKernel {
public:
    explicit LiouvilleKernel(const TimeDependentGenerator& gen) : gen_(&gen) {
        const int d = gen.layout.total_dim();
        SpMat k_half(d, d);
        for (const auto& j : gen.jumps)
            k_half += j.rate * SpMat(SpMat(j.op.adjoint()) * j.op);
        SpMat g_static = SpMat(Complex(0.0, -1.0) * gen.h_static) - k_half;
        g_static.makeCompressed();

        // frozen union pattern; values rebuilt per evaluation when harmonics
        // contribute time-dependent pieces
        SpMat pattern = g_static;
        for (const auto& h : gen.harmonics)
            pattern += SpMat(h.op + SpMat(h.op.adjoint()));
        pattern.makeCompressed();
        g_ = Csr::from(pattern);
        base_val_.assign(g_.val.size(), Complex(0.0, 0.0));
        accumulate_slots(g_static, Complex(1.0, 0.0), base_val_);
        g_.val = base_val_;
        for (const auto& h : gen.harmonics) {
            HarmonicOp ho;
            ho.nu = h.nu;
            scatter_slots(h.op, ho.slots, ho.vals);
            scatter_slots(SpMat(h.op.adjoint()), ho.slots_d, ho.vals_d);
            harmonic_ops_.push_back(std::move(ho));
        }

        for (const auto& j : gen.jumps) {
            JumpOp jo;
            jo.two_rate = 2.0 * j.rate;
            jo.c = Csr::from(j.op);
            jo.rows = nonzero_rows(j.op);
            jumps_.push_back(std::move(jo));
        }
        t_rows_.resize(d, d);
        t_rows_.setZero();
    }

    int dim() const { return gen_->layout.total_dim(); }
    const TimeDependentGenerator& generator() const { return *gen_; }

    void apply(double t, const RMatrix& sigma, RMatrix& out) {
        refresh_values(t);
        left_product(out, g_, sigma);
        add_own_adjoint(out);  // out = G sigma + (G sigma)^dag

        const int d = g_.dim;
        const double* sp = reinterpret_cast<const double*>(sigma.data());
        double* tp = reinterpret_cast<double*>(t_rows_.data());
        for (const auto& j : jumps_) {
            // T = c sigma on the rows c touches
            for (int i : j.rows) {
                int k = j.c.ptr[i];
                const int end = j.c.ptr[i + 1];
                double* trow = tp + 2 * static_cast<size_t>(i) * d;
                row_assign_scaled(trow, sp + 2 * static_cast<size_t>(j.c.col[k]) * d,
                                  j.c.val[k].real(), j.c.val[k].imag(), d);
                for (++k; k < end; ++k)
                    row_add_scaled(trow, sp + 2 * static_cast<size_t>(j.c.col[k]) * d,
                                   j.c.val[k].real(), j.c.val[k].imag(), d);
            }
            // out += two_rate * T c^dag, nonzero only on rows(c) x rows(c)
            for (int i : j.rows) {
                const double* trow = tp + 2 * static_cast<size_t>(i) * d;
                for (int jj : j.rows) {
                    double ar = 0.0, ai = 0.0;
                    for (int k = j.c.ptr[jj]; k < j.c.ptr[jj + 1]; ++k) {
                        const int cjk = j.c.col[k];
                        const double cr = j.c.val[k].real(), ci = -j.c.val[k].imag();
                        const double tr = trow[2 * cjk], ti = trow[2 * cjk + 1];
                        ar += tr * cr - ti * ci;
                        ai += tr * ci + ti * cr;
                    }
                    out(i, jj) += j.two_rate * Complex(ar, ai);
                }
            }
        }
    }

private:
    struct HarmonicOp {
        double nu;
        std::vector<int> slots, slots_d;
        std::vector<Complex> vals, vals_d;
    };
    struct JumpOp {
        double two_rate;
        Csr c;
        std::vector<int> rows;
    };

    int slot_of(int row, int colv) const {
        for (int k = g_.ptr[row]; k < g_.ptr[row + 1]; ++k)
            if (g_.col[k] == colv) return k;
        throw std::logic_error("pattern union is missing an entry");
    }

    void accumulate_slots(const SpMat& m, Complex scale, std::vector<Complex>& dest) const {
        for (int i = 0; i < m.outerSize(); ++i)
            for (SpMat::InnerIterator it(m, i); it; ++it)
                dest[slot_of(static_cast<int>(it.row()), static_cast<int>(it.col()))] +=
                    scale * it.value();
    }

    void scatter_slots(const SpMat& m, std::vector<int>& slots,
                       std::vector<Complex>& vals) const {
        for (int i = 0; i < m.outerSize(); ++i)
            for (SpMat::InnerIterator it(m, i); it; ++it) {
                slots.push_back(slot_of(static_cast<int>(it.row()),
                                        static_cast<int>(it.col())));
                vals.push_back(it.value());
            }
    }

    void refresh_values(double t) {
        if (harmonic_ops_.empty()) return;
        g_.val = base_val_;
        for (const auto& h : harmonic_ops_) {
            const Complex z = std::exp(Complex(0.0, -kTwoPi * h.nu * t));
            const Complex zi = Complex(0.0, -1.0) * z;
            const Complex zi_conj = Complex(0.0, -1.0) * std::conj(z);
            for (size_t s = 0; s < h.slots.size(); ++s) g_.val[h.slots[s]] += zi * h.vals[s];
            for (size_t s = 0; s < h.slots_d.size(); ++s)
                g_.val[h.slots_d[s]] += zi_conj * h.vals_d[s];
        }
    }

    const TimeDependentGenerator* gen_;
    Csr g_;
    std::vector<Complex> base_val_;
    std::vector<HarmonicOp> harmonic_ops_;
    std::vector<JumpOp> jumps_;
    RMatrix t_rows_;
};

Complex sparse_trace_product(const SpMat& op, const RMatrix& rho) {
    Complex acc = 0.0;
    for (int i = 0; i < op.outerSize(); ++i)
        for (SpMat::InnerIterator it(op, i); it; ++it)
            acc += it.value() * rho(it.col(), i);
    return acc;
}

void hermitize(RMatrix& m) {
    const int d = static_cast<int>(m.rows());
    constexpr int B = 16;
    for (int ib = 0; ib < d; ib += B)
        for (int jb = 0; jb <= ib; jb += B) {
            const int imax = std::min(ib + B, d);
            for (int i = ib; i < imax; ++i) {
                const int jmax = std::min({jb + B, i + 1, d});
                for (int j = jb; j < jmax; ++j) {
                    if (i == j) {
                        m(i, i) = Complex(m(i, i).real(), 0.0);
                    } else {
                        const Complex s = 0.5 * (m(i, j) + std::conj(m(j, i)));
                        m(i, j) = s;
                        m(j, i) = std::conj(s);
                    }
                }
            }
        }
}

struct FockGuardInfo {
    int left = 1, dim = 0, right = 1;  // strides of the fock factor
};

FockGuardInfo fock_strides(const SpaceLayout& layout) {
    FockGuardInfo g;
    if (!layout.has_factor("fock")) return g;
    const int k = layout.factor_index("fock");
    for (int i = 0; i < k; ++i) g.left *= layout.factors[i].dim;
    g.dim = layout.factors[k].dim;
    for (size_t i = k + 1; i < layout.factors.size(); ++i) g.right *= layout.factors[i].dim;
    return g;
}

double top_two_population(const RMatrix& rho, const FockGuardInfo& g) {
    if (g.dim < 2) return 0.0;
    double pop = 0.0;
    for (int n = g.dim - 2; n < g.dim; ++n)
        for (int l = 0; l < g.left; ++l)
            for (int r = 0; r < g.right; ++r) {
                const int idx = (l * g.dim + n) * g.right + r;
                pop += rho(idx, idx).real();
            }
    return pop;
}

}  // namespace

const std::vector<double>& Trajectory::series(const std::string& name) const {
    auto it = observables.find(name);
    if (it == observables.end()) throw std::out_of_range("no observable named " + name);
    return it->second;
}

Trajectory evolve(const TimeDependentGenerator& gen, const DensityMatrix& rho0,
                  std::span<const double> t_grid, const SolverOptions& opts,
                  std::span<const NamedObservable> observables, bool store_snapshots) {
    if (t_grid.size() < 1) throw std::invalid_argument("empty time grid");
    for (size_t i = 1; i < t_grid.size(); ++i)
        if (t_grid[i] <= t_grid[i - 1])
            throw std::invalid_argument("time grid must be strictly increasing");
    if (!(rho0.layout == gen.layout))
        throw std::invalid_argument("initial state layout does not match generator");
    for (const auto& ob : observables)
        if (!(ob.op.layout() == gen.layout))
            throw std::invalid_argument("observable layout does not match generator");

    LiouvilleKernel kernel(gen);
    const int d = kernel.dim();
    const FockGuardInfo fock = fock_strides(gen.layout);

    double dt_fixed = 0.0;
    if (opts.method == SolverOptions::Method::fixed_rk4) {
        dt_fixed = opts.dt;
        if (dt_fixed <= 0.0) {
            const double f_max = gen.max_harmonic_frequency();
            if (f_max <= 0.0)
                throw std::invalid_argument("fixed_rk4 needs an explicit dt for a static generator");
            dt_fixed = 1.0 / (40.0 * f_max);
        }
    } else if (opts.rtol < 1e-12) {
        throw std::invalid_argument("adaptive rtol must be at least 1e-12");
    }

    RMatrix rho = rho0.rho;
    Trajectory traj;
    auto rhs = [&kernel](double t, const RMatrix& y, RMatrix& dydt) {
        kernel.apply(t, y, dydt);
    };

    RMatrix k1(d, d), k2(d, d), k3(d, d), k4(d, d), work(d, d);
    auto rk4_span = [&](double t_from, double t_to) {
        const double span = t_to - t_from;
        const long nsub = std::max(1L, std::lround(std::ceil(span / dt_fixed)));
        const double h = span / static_cast<double>(nsub);
        double t = t_from;
        for (long s = 0; s < nsub; ++s) {
            kernel.apply(t, rho, k1);
            work = rho + (0.5 * h) * k1;
            kernel.apply(t + 0.5 * h, work, k2);
            work = rho + (0.5 * h) * k2;
            kernel.apply(t + 0.5 * h, work, k3);
            work = rho + h * k3;
            kernel.apply(t + h, work, k4);
            rho += (h / 6.0) * (k1 + 2.0 * k2 + 2.0 * k3 + k4);
            hermitize(rho);
            t = t_from + (s + 1) * span / static_cast<double>(nsub);
        }
    };

    double h_hint = 0.0;
    auto sample = [&](double t) {
        traj.times.push_back(t);
        for (const auto& ob : observables)
            traj.observables[ob.name].push_back(
                sparse_trace_product(ob.op.sparse(), rho).real());
        const double tr_err = std::abs(rho.trace() - Complex(1.0, 0.0));
        if (tr_err > 1e-8)
            throw std::runtime_error("trace deviated by " + std::to_string(tr_err) +
                                     " at t = " + std::to_string(t));
        if (opts.fock_guard && fock.dim >= 2) {
            const double pop = top_two_population(rho, fock);
            if (pop > opts.fock_guard_threshold)
                throw TruncationError("top-two Fock population " + std::to_string(pop) +
                                      " exceeds guard at t = " + std::to_string(t) + " us");
        }
        if (store_snapshots) {
            DensityMatrix snap{gen.layout, Matrix(rho)};
            const double min_ev = hermitian_eigenvalues(snap.rho).minCoeff();
            traj.min_eigenvalue_seen = std::min(traj.min_eigenvalue_seen, min_ev);
            if (min_ev < -1e-6)
                throw std::runtime_error("state positivity violated: eigenvalue " +
                                         std::to_string(min_ev));
            traj.snapshots.emplace_back(t, std::move(snap));
        }
    };

    sample(t_grid[0]);
    for (size_t i = 1; i < t_grid.size(); ++i) {
        if (opts.method == SolverOptions::Method::fixed_rk4) {
            rk4_span(t_grid[i - 1], t_grid[i]);
        } else {
            try {
                detail::dp45_integrate(
                    rho, t_grid[i - 1], t_grid[i], rhs, opts.rtol, opts.atol,
                    [](RMatrix& y) { hermitize(y); }, h_hint);
            } catch (const std::runtime_error& e) {
                throw StiffnessError(e.what());
            }
            h_hint = 0.0;  // conservative restart per interval
        }
        sample(t_grid[i]);
    }
    return traj;
}

namespace {

using ColSpMat = Eigen::SparseMatrix<Complex, Eigen::ColMajor>;

// Vectorized Liouvillian in row-major convention: rho(i,j) lives at i*d+j.
ColSpMat vectorized_liouvillian(const TimeDependentGenerator& gen) {
    const int d = gen.layout.total_dim();
    std::vector<Eigen::Triplet<Complex>> trip;
    const SpMat& h = gen.h_static;
    for (int r = 0; r < h.outerSize(); ++r)
        for (SpMat::InnerIterator it(h, r); it; ++it) {
            const int i = static_cast<int>(it.row());
            const int k = static_cast<int>(it.col());
            for (int j = 0; j < d; ++j) {
                trip.emplace_back(i * d + j, k * d + j, Complex(0, -1) * it.value());
                trip.emplace_back(j * d + k, j * d + i, Complex(0, 1) * it.value());
            }
        }
    for (const auto& jmp : gen.jumps) {
        SpMat c = jmp.op;
        c.makeCompressed();
        SpMat m = SpMat(SpMat(c.adjoint()) * c);
        for (int r = 0; r < m.outerSize(); ++r)
            for (SpMat::InnerIterator it(m, r); it; ++it) {
                const int i = static_cast<int>(it.row());
                const int k = static_cast<int>(it.col());
                for (int j = 0; j < d; ++j) {
                    trip.emplace_back(i * d + j, k * d + j, -jmp.rate * it.value());
                    trip.emplace_back(j * d + k, j * d + i, -jmp.rate * it.value());
                }
            }
        for (int r1 = 0; r1 < c.outerSize(); ++r1)
            for (SpMat::InnerIterator it1(c, r1); it1; ++it1)
                for (int r2 = 0; r2 < c.outerSize(); ++r2)
                    for (SpMat::InnerIterator it2(c, r2); it2; ++it2)
                        trip.emplace_back(
                            static_cast<int>(it1.row()) * d + static_cast<int>(it2.row()),
                            static_cast<int>(it1.col()) * d + static_cast<int>(it2.col()),
                            2.0 * jmp.rate * it1.value() * std::conj(it2.value()));
    }
    ColSpMat L(d * d, d * d);
    L.setFromTriplets(trip.begin(), trip.end());
    return L;
}

Matrix solve_with_constraint_row(const ColSpMat& L, int d, int constraint_row) {
    ColSpMat Lc = L;
    // zero the chosen row, then set the trace functional there
    for (int col = 0; col < Lc.outerSize(); ++col)
        for (ColSpMat::InnerIterator it(Lc, col); it; ++it)
            if (it.row() == constraint_row) it.valueRef() = Complex(0.0, 0.0);
    std::vector<Eigen::Triplet<Complex>> ones;
    for (int m = 0; m < d; ++m) ones.emplace_back(constraint_row, m * d + m, 1.0);
    ColSpMat C(d * d, d * d);
    C.setFromTriplets(ones.begin(), ones.end());
    Lc += C;
    Lc.prune(Complex(0.0), 0.0);
    Lc.makeCompressed();

    Eigen::SparseLU<ColSpMat> lu;
    lu.analyzePattern(Lc);
    lu.factorize(Lc);
    if (lu.info() != Eigen::Success)
        throw DegenerateSteadyStateError("Liouvillian factorization failed; steady state "
                                         "is likely non-unique");
    Vector b = Vector::Zero(d * d);
    b[constraint_row] = 1.0;
    Vector x = lu.solve(b);
    if (!x.allFinite())
        throw DegenerateSteadyStateError("Liouvillian solve returned non-finite values");
    Matrix rho(d, d);
    for (int i = 0; i < d; ++i)
        for (int j = 0; j < d; ++j) rho(i, j) = x[i * d + j];
    rho = 0.5 * (rho + rho.adjoint()).eval();
    const Complex tr = rho.trace();
    if (std::abs(tr) < 1e-12)
        throw DegenerateSteadyStateError("steady-state candidate has vanishing trace");
    return rho / tr;
}

}  // namespace

SteadyStateResult steady_state(const TimeDependentGenerator& gen, const SteadyOptions& opts) {
    if (!gen.harmonics.empty())
        throw std::invalid_argument("steady_state requires a harmonic-free generator");
    if (gen.jumps.empty())
        throw std::invalid_argument("steady_state requires dissipation");
    const int d = gen.layout.total_dim();

    ColSpMat L = vectorized_liouvillian(gen);
    const double l_norm = L.norm();

    // constraint goes on the diagonal-element row with the largest |diagonal|
    std::vector<std::pair<double, int>> diag_rows;
    for (int k = 0; k < d; ++k) {
        const int r = k * d + k;
        diag_rows.emplace_back(std::abs(L.coeff(r, r)), r);
    }
    std::sort(diag_rows.rbegin(), diag_rows.rend());

    Matrix rho1 = solve_with_constraint_row(L, d, diag_rows[0].second);
    Matrix rho2 = solve_with_constraint_row(L, d, diag_rows[1].second);
    if ((rho1 - rho2).norm() > opts.degeneracy_tol)
        throw DegenerateSteadyStateError("two constraint placements disagree; steady state "
                                         "is not unique");

    SteadyStateResult out;
    out.rho = DensityMatrix{gen.layout, rho1};

    LiouvilleKernel kernel(gen);
    RMatrix sigma = rho1, lrho(d, d);
    kernel.apply(0.0, sigma, lrho);
    out.residual = lrho.norm() / l_norm;
    if (out.residual <= opts.residual_tol) {
        out.method = SteadyStateResult::Method::direct;
        return out;
    }

    // fall back to time marching from the candidate
    out.method = SteadyStateResult::Method::time_marched;
    SolverOptions sopts;
    sopts.fock_guard = false;
    const double step = 5.0;
    double t = 0.0;
    DensityMatrix state = out.rho;
    while (t < opts.march_horizon) {
        const std::vector<double> grid = {0.0, step};
        Trajectory tr = evolve(gen, state, grid, sopts, {}, true);
        state = tr.snapshots.back().second;
        t += step;
        sigma = state.rho;
        kernel.apply(0.0, sigma, lrho);
        if (lrho.norm() < opts.march_tol) break;
    }
    out.rho = state;
    sigma = state.rho;
    kernel.apply(0.0, sigma, lrho);
    out.residual = lrho.norm() / l_norm;
    return out;
}

LeakageFit leakage_probe(const TimeDependentGenerator& gen, const DensityMatrix& rho0,
                         double horizon, const SolverOptions& opts, double sample_dt) {
    const int k = gen.layout.factor_index(kAtomLabel);
    (void)k;
    const int n_max = gen.layout.factors[gen.layout.factor_index("fock")].dim;
    const int dim = gen.layout.total_dim();
    SpMat proj(dim, dim);
    std::vector<Eigen::Triplet<Complex>> trip;
    for (int idx : {level_index(Manifold::ground, 1, -1), level_index(Manifold::ground, 2, -2)})
        for (int n = 0; n < n_max; ++n)
            trip.emplace_back(idx * n_max + n, idx * n_max + n, 1.0);
    proj.setFromTriplets(trip.begin(), trip.end());

    std::vector<double> grid;
    for (double t = 0.0; t <= horizon + 1e-9; t += sample_dt) grid.push_back(t);
    std::vector<NamedObservable> obs{{"subspace", Operator(gen.layout, proj)}};
    Trajectory traj = evolve(gen, rho0, grid, opts, obs, false);

    // least-squares line through P(t)
    const auto& p = traj.series("subspace");
    const size_t n = p.size();
    double st = 0, sp = 0, stt = 0, stp = 0;
    for (size_t i = 0; i < n; ++i) {
        st += traj.times[i];
        sp += p[i];
        stt += traj.times[i] * traj.times[i];
        stp += traj.times[i] * p[i];
    }
    const double denom = n * stt - st * st;
    const double slope = (n * stp - st * sp) / denom;
    const double intercept = (sp - slope * st) / n;
    double rss = 0.0;
    for (size_t i = 0; i < n; ++i) {
        const double e = p[i] - (intercept + slope * traj.times[i]);
        rss += e * e;
    }
    LeakageFit fit;
    fit.gamma_fit = -slope / kTwoPi;
    fit.residual = std::sqrt(rss / n);
    return fit;
}

double top_two_fock_population(const DensityMatrix& rho) {
    const FockGuardInfo g = fock_strides(rho.layout);
    if (g.dim < 2) return 0.0;
    RMatrix r = rho.rho;
    return top_two_population(r, g);
}

}  // namespace rabi
