// semiclassical.cpp

#include "rabi/semiclassical.hpp"

#include <cmath>

#include "rabi/detail/dp45.hpp"

namespace rabi {

SemiState semi_rhs(const SemiState& s, const SemiParams& p) {
    const Complex i(0.0, 1.0);
    SemiState d;
    d.alpha = kTwoPi * (-i * (p.omega - i * p.kappa + 0.5 * p.U * s.w) * s.alpha -
                        i * p.g * (s.beta + std::conj(s.beta)));
    d.beta = kTwoPi * (-i * (p.omega0 + p.U * std::norm(s.alpha)) * s.beta +
                       i * p.g * (s.alpha + std::conj(s.alpha)) * s.w);
    d.w = kTwoPi * (-4.0 * p.g * 2.0 * s.alpha.real() * s.beta.imag());
    return d;
}

std::vector<SemiState> semi_integrate(const SemiState& s0, const SemiParams& p,
                                      std::span<const double> t_grid) {
    if (t_grid.empty()) return {};
    using Vec5 = Eigen::Matrix<double, 5, 1>;
    auto pack = [](const SemiState& s) {
        Vec5 v;
        v << s.alpha.real(), s.alpha.imag(), s.beta.real(), s.beta.imag(), s.w;
        return v;
    };
    auto unpack = [](const Vec5& v) {
        return SemiState{{v[0], v[1]}, {v[2], v[3]}, v[4]};
    };
    auto rhs = [&](double, const Vec5& v, Vec5& dv) {
        dv = pack(semi_rhs(unpack(v), p));
    };
    std::vector<SemiState> out;
    out.reserve(t_grid.size());
    Vec5 y = pack(s0);
    out.push_back(unpack(y));
    for (size_t k = 1; k < t_grid.size(); ++k) {
        try {
            detail::dp45_integrate(y, t_grid[k - 1], t_grid[k], rhs, 1e-10, 1e-12,
                                   [](Vec5&) {});
        } catch (const std::runtime_error& e) {
            throw std::runtime_error(std::string("semiclassical integration: ") + e.what());
        }
        out.push_back(unpack(y));
    }
    return out;
}

namespace {

Eigen::Matrix<double, 5, 5> analytic_jacobian(const SemiState& s, const SemiParams& p) {
    // coordinates (x, y, u, v, w) = (Re a, Im a, Re b, Im b, w)
    const double x = s.alpha.real(), y = s.alpha.imag();
    const double u = s.beta.real(), v = s.beta.imag();
    const double w = s.w;
    const double wt = p.omega + 0.5 * p.U * w;     // field frequency seen at w
    const double w0t = p.omega0 + p.U * (x * x + y * y);
    Eigen::Matrix<double, 5, 5> J;
    J.setZero();
    // xdot = 2pi( wt*y - kappa*x ), ydot = 2pi( -wt*x - kappa*y - 2 g u )
    J(0, 0) = -p.kappa;
    J(0, 1) = wt;
    J(0, 4) = 0.5 * p.U * y;
    J(1, 0) = -wt;
    J(1, 1) = -p.kappa;
    J(1, 2) = -2.0 * p.g;
    J(1, 4) = -0.5 * p.U * x;
    // udot = 2pi( w0t*v ), vdot = 2pi( -w0t*u + 2 g x w )
    J(2, 0) = p.U * 2.0 * x * v;
    J(2, 1) = p.U * 2.0 * y * v;
    J(2, 3) = w0t;
    J(3, 0) = -p.U * 2.0 * x * u + 2.0 * p.g * w;
    J(3, 1) = -p.U * 2.0 * y * u;
    J(3, 2) = -w0t;
    J(3, 4) = 2.0 * p.g * x;
    // wdot = 2pi( -8 g x v )
    J(4, 0) = -8.0 * p.g * v;
    J(4, 3) = -8.0 * p.g * x;
    return kTwoPi * J;
}

}  // namespace

StabilityResult fixed_point_stability(const SemiParams& p, SemiFixedPoint which) {
    SemiState fp;
    fp.w = (which == SemiFixedPoint::normal) ? -1.0 : 1.0;
    StabilityResult out;
    out.jacobian = analytic_jacobian(fp, p);
    // at alpha = beta = 0 the w row vanishes and the (alpha, beta) block closes
    const Eigen::Matrix4d block = out.jacobian.topLeftCorner<4, 4>();
    const Eigen::VectorXcd ev = general_eigenvalues(block);
    double mx = -std::numeric_limits<double>::infinity();
    for (int i = 0; i < 4; ++i) {
        out.eigenvalues[i] = ev[i];
        mx = std::max(mx, ev[i].real());
    }
    out.max_re = mx;
    return out;
}

Eigen::Matrix<double, 5, 5> semi_jacobian_fd(const SemiState& s, const SemiParams& p,
                                             double h) {
    using Vec5 = Eigen::Matrix<double, 5, 1>;
    auto pack = [](const SemiState& st) {
        Vec5 v;
        v << st.alpha.real(), st.alpha.imag(), st.beta.real(), st.beta.imag(), st.w;
        return v;
    };
    auto unpack = [](const Vec5& v) {
        return SemiState{{v[0], v[1]}, {v[2], v[3]}, v[4]};
    };
    Eigen::Matrix<double, 5, 5> J;
    const Vec5 v0 = pack(s);
    for (int j = 0; j < 5; ++j) {
        Vec5 vp = v0, vm = v0;
        vp[j] += h;
        vm[j] -= h;
        const Vec5 fp = pack(semi_rhs(unpack(vp), p));
        const Vec5 fm = pack(semi_rhs(unpack(vm), p));
        J.col(j) = (fp - fm) / (2.0 * h);
    }
    return J;
}

std::optional<double> stability_scan(const SemiParams& base, double u_lo, double u_hi,
                                     SemiFixedPoint which) {
    auto max_re_at = [&](double u) {
        SemiParams p = base;
        p.U = u;
        return fixed_point_stability(p, which).max_re;
    };
    // Locate a sign change on a fine grid first; the stable window adjacent
    // to the crossing can be narrower than 1e-3 in U.
    const int n_scan = 4096;
    double prev_u = u_lo, prev_f = max_re_at(u_lo);
    double lo = 0.0, hi = 0.0, f_lo = 0.0;
    bool found = false;
    for (int k = 1; k <= n_scan; ++k) {
        const double u = u_lo + (u_hi - u_lo) * k / n_scan;
        const double f = max_re_at(u);
        if (prev_f == 0.0 || f == 0.0 || (prev_f < 0.0) != (f < 0.0)) {
            lo = prev_u;
            hi = u;
            f_lo = prev_f;
            found = true;
            break;
        }
        prev_u = u;
        prev_f = f;
    }
    if (!found) return std::nullopt;
    while (hi - lo > 1e-3) {
        const double mid = 0.5 * (lo + hi);
        const double f_mid = max_re_at(mid);
        if (f_mid == 0.0) return mid;
        if ((f_mid < 0.0) == (f_lo < 0.0)) {
            lo = mid;
            f_lo = f_mid;
        } else {
            hi = mid;
        }
    }
    return 0.5 * (lo + hi);
}

}  // namespace rabi
