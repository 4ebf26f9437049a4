// dp45.hpp — Dormand-Prince 5(4) adaptive stepper over Eigen states

#pragma once

#include <algorithm>
#include <cmath>
#include <stdexcept>

namespace rabi::detail {

// Classic DOPRI5 tableau.
struct Dp45Coeffs {
    static constexpr double c2 = 1.0 / 5, c3 = 3.0 / 10, c4 = 4.0 / 5, c5 = 8.0 / 9;
    static constexpr double a21 = 1.0 / 5;
    static constexpr double a31 = 3.0 / 40, a32 = 9.0 / 40;
    static constexpr double a41 = 44.0 / 45, a42 = -56.0 / 15, a43 = 32.0 / 9;
    static constexpr double a51 = 19372.0 / 6561, a52 = -25360.0 / 2187,
                            a53 = 64448.0 / 6561, a54 = -212.0 / 729;
    static constexpr double a61 = 9017.0 / 3168, a62 = -355.0 / 33, a63 = 46732.0 / 5247,
                            a64 = 49.0 / 176, a65 = -5103.0 / 18656;
    static constexpr double b1 = 35.0 / 384, b3 = 500.0 / 1113, b4 = 125.0 / 192,
                            b5 = -2187.0 / 6784, b6 = 11.0 / 84;
    // embedded 4th-order weights
    static constexpr double e1 = 5179.0 / 57600, e3 = 7571.0 / 16695, e4 = 393.0 / 640,
                            e5 = -92097.0 / 339200, e6 = 187.0 / 2100, e7 = 1.0 / 40;
};

/// Integrates y' = f(t, y) from t0 to t1, calling f as f(t, y, dydt).
/// `post_step(y)` runs after each accepted step (e.g. re-hermitization).
template <class State, class Rhs, class PostStep>
void dp45_integrate(State& y, double t0, double t1, Rhs&& f, double rtol, double atol,
                    PostStep&& post_step, double h_init = 0.0) {
    using C = Dp45Coeffs;
    if (t1 <= t0) return;
    double t = t0;
    double h = (h_init > 0.0) ? h_init : (t1 - t0) / 100.0;
    h = std::min(h, t1 - t0);

    State k1 = y, k2 = y, k3 = y, k4 = y, k5 = y, k6 = y, k7 = y, ytmp = y, y5 = y;
    f(t, y, k1);
    int consecutive_rejects = 0;
    while (t < t1) {
        h = std::min(h, t1 - t);
        if (h < 1e-14 * std::max(1.0, std::abs(t)))
            throw std::runtime_error("step size underflow in adaptive integrator");

        ytmp = y + h * C::a21 * k1;
        f(t + C::c2 * h, ytmp, k2);
        ytmp = y + h * (C::a31 * k1 + C::a32 * k2);
        f(t + C::c3 * h, ytmp, k3);
        ytmp = y + h * (C::a41 * k1 + C::a42 * k2 + C::a43 * k3);
        f(t + C::c4 * h, ytmp, k4);
        ytmp = y + h * (C::a51 * k1 + C::a52 * k2 + C::a53 * k3 + C::a54 * k4);
        f(t + C::c5 * h, ytmp, k5);
        ytmp = y + h * (C::a61 * k1 + C::a62 * k2 + C::a63 * k3 + C::a64 * k4 + C::a65 * k5);
        f(t + h, ytmp, k6);
        y5 = y + h * (C::b1 * k1 + C::b3 * k3 + C::b4 * k4 + C::b5 * k5 + C::b6 * k6);
        f(t + h, y5, k7);

        ytmp = y + h * (C::e1 * k1 + C::e3 * k3 + C::e4 * k4 + C::e5 * k5 + C::e6 * k6 +
                        C::e7 * k7);  // embedded 4th-order solution
        const double err = ((y5 - ytmp).cwiseAbs().array() /
                            (atol + rtol * y5.cwiseAbs().array().max(y.cwiseAbs().array())))
                               .maxCoeff();
        if (err <= 1.0 || h <= 1e-13) {
            t += h;
            y = y5;
            post_step(y);
            f(t, y, k1);  // FSAL not exploited; post_step may alter y
            consecutive_rejects = 0;
        } else if (++consecutive_rejects > 60) {
            throw std::runtime_error("adaptive integrator failed to reach tolerance");
        }
        const double scale = 0.9 * std::pow(std::max(err, 1e-10), -0.2);
        h *= std::clamp(scale, 0.2, 5.0);
    }
}

}  // namespace rabi::detail
