#include <catch2/catch_amalgamated.hpp>

#include "rabi/semiclassical.hpp"

#include "support.hpp"

using namespace rabi;
using Catch::Approx;

namespace {

std::vector<double> linspace(double a, double b, int n) {
    std::vector<double> v(n);
    for (int i = 0; i < n; ++i) v[i] = a + (b - a) * i / (n - 1);
    return v;
}

double rhs_norm(const SemiState& s, const SemiParams& p) {
    const SemiState d = semi_rhs(s, p);
    return std::sqrt(std::norm(d.alpha) + std::norm(d.beta) + d.w * d.w);
}

}  // namespace

TEST_CASE("normal and inverted states are exact fixed points", "[semiclassical]") {
    for (double w : {-1.0, 1.0}) {
        SemiState s{0.0, 0.0, w};
        for (const SemiParams& p :
             {SemiParams{1.0, 1.0, 2.0, -2.1, 0.2}, SemiParams{0.7, 1.3, 0.4, 3.0, 0.0}}) {
            const SemiState d = semi_rhs(s, p);
            REQUIRE(std::abs(d.alpha) == 0.0);
            REQUIRE(std::abs(d.beta) == 0.0);
            REQUIRE(d.w == 0.0);
        }
    }
}

TEST_CASE("decoupled field decays at the cavity rate", "[semiclassical]") {
    SemiParams p{1.0, 1.0, 0.0, 0.5, 0.3};
    SemiState s0{Complex(1.0, 0.0), 0.0, -1.0};
    auto grid = linspace(0.0, 2.0, 9);
    auto states = semi_integrate(s0, p, grid);
    for (size_t i = 0; i < grid.size(); ++i) {
        const double t = grid[i];
        // alpha(t) = exp(-i 2pi (w + U w/2) t - 2pi kappa t)
        const double expect_mag = std::exp(-kTwoPi * p.kappa * t);
        REQUIRE(std::abs(states[i].alpha) == Approx(expect_mag).margin(1e-8));
        const double phase = -kTwoPi * (p.omega + 0.5 * p.U * (-1.0)) * t;
        const Complex expect = std::polar(expect_mag, phase);
        REQUIRE(std::abs(states[i].alpha - expect) < 1e-7);
        REQUIRE(states[i].w == Approx(-1.0).margin(1e-12));
    }
}

TEST_CASE("integrating from a fixed point stays put", "[semiclassical]") {
    SemiParams p{1.0, 1.0, 2.0, -1.0, 0.2};
    auto grid = linspace(0.0, 100.0, 5);
    auto states = semi_integrate(SemiState{0.0, 0.0, -1.0}, p, grid);
    for (const auto& s : states) {
        REQUIRE(std::abs(s.alpha) < 1e-10);
        REQUIRE(std::abs(s.beta) < 1e-10);
        REQUIRE(std::abs(s.w + 1.0) < 1e-10);
    }
}

TEST_CASE("spin length is conserved in the undamped resonant flow", "[semiclassical]") {
    SemiParams p{1.0, 1.0, 1.5, 0.8, 0.0};
    SemiState s0{Complex(0.3, -0.2), Complex(0.1, 0.25), 0.0};
    s0.w = std::sqrt(1.0 - 4.0 * std::norm(s0.beta));  // start on the Bloch sphere
    const double len0 = s0.spin_length_sq();
    auto grid = linspace(0.0, 100.0, 11);
    auto states = semi_integrate(s0, p, grid);
    for (const auto& s : states) REQUIRE(s.spin_length_sq() == Approx(len0).margin(1e-8));
}

TEST_CASE("overdamped weak coupling relaxes to the normal state", "[semiclassical]") {
    SemiParams p{1.0, 1.0, 0.1, 0.0, 20.0};
    SemiState s0{Complex(0.4, 0.1), Complex(0.05, -0.02), -0.995};
    auto grid = linspace(0.0, 60.0, 4);
    auto states = semi_integrate(s0, p, grid);
    const SemiState& last = states.back();
    REQUIRE(std::abs(last.alpha) < 1e-4);
    REQUIRE(std::abs(last.beta) < 2e-2);
}

TEST_CASE("persistent oscillations beyond the inverted-state crossing", "[semiclassical]") {
    SemiParams p{1.0, 1.0, 2.0, 3.0, 0.2};
    SemiState s0{Complex(0.01, 0.0), Complex(0.01, 0.0), -0.9998};
    auto grid = linspace(0.0, 200.0, 9);
    auto states = semi_integrate(s0, p, grid);
    REQUIRE(rhs_norm(states.back(), p) > 1e-4);
}

TEST_CASE("analytic Jacobian matches finite differences", "[semiclassical]") {
    std::uniform_real_distribution<double> u(-0.8, 0.8);
    for (int trial = 0; trial < 6; ++trial) {
        SemiState s{Complex(u(test::rng()), u(test::rng())),
                    Complex(0.5 * u(test::rng()), 0.5 * u(test::rng())), u(test::rng())};
        SemiParams p{1.0, 1.0, 2.0, -2.1, 0.2};
        // evaluate the analytic form through the stability entry point at the
        // fixed point, and generally through finite differences
        const auto fd = semi_jacobian_fd(s, p);
        // reconstruct the analytic Jacobian by differencing semi_rhs is the
        // oracle; compare it against the closed form used for stability
        SemiState fp{0.0, 0.0, s.w < 0 ? -1.0 : 1.0};
        const auto res = fixed_point_stability(
            p, s.w < 0 ? SemiFixedPoint::normal : SemiFixedPoint::inverted);
        const auto fd_fp = semi_jacobian_fd(fp, p);
        const double scale = std::max(1.0, fd_fp.cwiseAbs().maxCoeff());
        REQUIRE((res.jacobian - fd_fp).cwiseAbs().maxCoeff() < 1e-6 * scale);
        REQUIRE(fd.allFinite());
    }
}

TEST_CASE("decoupled linearization splits into field and spin sectors", "[semiclassical]") {
    SemiParams p{1.0, 1.0, 0.0, 0.5, 0.3};
    StabilityResult r = fixed_point_stability(p, SemiFixedPoint::normal);
    // eigenvalues { -kappa +- i (w - U/2), +- i w0 } in angular units
    std::vector<double> re, im;
    for (const auto& ev : r.eigenvalues) {
        re.push_back(ev.real() / kTwoPi);
        im.push_back(std::abs(ev.imag()) / kTwoPi);
    }
    std::sort(re.begin(), re.end());
    CHECK(re[0] == Approx(-0.3).margin(1e-12));
    CHECK(re[1] == Approx(-0.3).margin(1e-12));
    CHECK(re[2] == Approx(0.0).margin(1e-12));  // spin sector is marginal at g = 0
    CHECK(re[3] == Approx(0.0).margin(1e-12));
    CHECK(r.max_re == Approx(0.0).margin(1e-12));
}

TEST_CASE("stability crossings sit at the expected couplings", "[semiclassical]") {
    SemiParams fig7{1.0, 1.0, 2.0, 0.0, 0.2};
    auto normal = stability_scan(fig7, 1.8, 2.2, SemiFixedPoint::normal);
    REQUIRE(normal.has_value());
    CHECK(*normal > 1.8);
    CHECK(*normal < 2.2);
    auto inverted = stability_scan(fig7, -2.2, -1.8, SemiFixedPoint::inverted);
    REQUIRE(inverted.has_value());
    CHECK(*inverted > -2.2);
    CHECK(*inverted < -1.8);
    CHECK(*inverted == Approx(-*normal).margin(2e-3));

    // weak coupling: the normal-state crossing approaches U = 2 omega exactly
    SemiParams weak{1.0, 1.0, 1e-3, 0.0, 0.2};
    auto weak_cross = stability_scan(weak, 1.5, 2.5, SemiFixedPoint::normal);
    REQUIRE(weak_cross.has_value());
    CHECK(*weak_cross == Approx(2.0).margin(2e-3));

    // no crossing available in a window far from criticality
    auto none = stability_scan(fig7, 0.0, 0.5, SemiFixedPoint::normal);
    REQUIRE_FALSE(none.has_value());
}
