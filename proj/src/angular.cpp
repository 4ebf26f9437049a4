// angular.cpp — Racah formulas; exact in double precision for the small
// momenta needed here (j <= 3).

#include "rabi/angular.hpp"

#include <array>
#include <cmath>
#include <stdexcept>

namespace rabi {

namespace {

// factorials of half-integer-doubled arguments: fact(2n) = n!
double fact(int two_n) {
    if (two_n < 0 || two_n % 2 != 0) throw std::domain_error("factorial of non-integer");
    double f = 1.0;
    for (int k = 2; k <= two_n; k += 2) f *= k / 2;
    return f;
}

bool triangle_ok(int two_a, int two_b, int two_c) {
    return two_c >= std::abs(two_a - two_b) && two_c <= two_a + two_b &&
           (two_a + two_b + two_c) % 2 == 0;
}

// sqrt of the triangle coefficient Delta(abc)
double triangle_coeff(int two_a, int two_b, int two_c) {
    return std::sqrt(fact(two_a + two_b - two_c) * fact(two_a - two_b + two_c) *
                     fact(-two_a + two_b + two_c) / fact(two_a + two_b + two_c + 2));
}

}  // namespace

double wigner_3j(int two_j1, int two_j2, int two_j3,
                 int two_m1, int two_m2, int two_m3) {
    if (two_m1 + two_m2 + two_m3 != 0) return 0.0;
    if (!triangle_ok(two_j1, two_j2, two_j3)) return 0.0;
    if (std::abs(two_m1) > two_j1 || std::abs(two_m2) > two_j2 || std::abs(two_m3) > two_j3)
        return 0.0;
    if ((two_j1 + two_m1) % 2 != 0 || (two_j2 + two_m2) % 2 != 0 || (two_j3 + two_m3) % 2 != 0)
        return 0.0;

    const double pre = triangle_coeff(two_j1, two_j2, two_j3) *
        std::sqrt(fact(two_j1 + two_m1) * fact(two_j1 - two_m1) *
                  fact(two_j2 + two_m2) * fact(two_j2 - two_m2) *
                  fact(two_j3 + two_m3) * fact(two_j3 - two_m3));

    const int t_min = std::max({0, two_j2 - two_j3 - two_m1, two_j1 - two_j3 + two_m2});
    const int t_max = std::min({two_j1 + two_j2 - two_j3, two_j1 - two_m1, two_j2 + two_m2});
    double sum = 0.0;
    for (int two_t = t_min; two_t <= t_max; two_t += 2) {
        const double den = fact(two_t) * fact(two_j3 - two_j2 + two_m1 + two_t) *
            fact(two_j3 - two_j1 - two_m2 + two_t) * fact(two_j1 + two_j2 - two_j3 - two_t) *
            fact(two_j1 - two_m1 - two_t) * fact(two_j2 + two_m2 - two_t);
        sum += ((two_t / 2) % 2 == 0 ? 1.0 : -1.0) / den;
    }
    const int phase_exp = (two_j1 - two_j2 - two_m3) / 2;
    const double phase = (phase_exp % 2 == 0) ? 1.0 : -1.0;
    return phase * pre * sum;
}

double wigner_6j(int two_j1, int two_j2, int two_j3,
                 int two_j4, int two_j5, int two_j6) {
    const std::array<std::array<int, 3>, 4> triads = {{{two_j1, two_j2, two_j3},
                                                       {two_j1, two_j5, two_j6},
                                                       {two_j4, two_j2, two_j6},
                                                       {two_j4, two_j5, two_j3}}};
    double pre = 1.0;
    for (const auto& t : triads) {
        if (!triangle_ok(t[0], t[1], t[2])) return 0.0;
        pre *= triangle_coeff(t[0], t[1], t[2]);
    }

    const int a = two_j1 + two_j2 + two_j3;
    const int b = two_j1 + two_j5 + two_j6;
    const int c = two_j4 + two_j2 + two_j6;
    const int d = two_j4 + two_j5 + two_j3;
    const int e = two_j1 + two_j2 + two_j4 + two_j5;
    const int f = two_j2 + two_j3 + two_j5 + two_j6;
    const int g = two_j3 + two_j1 + two_j6 + two_j4;

    const int t_min = std::max({a, b, c, d});
    const int t_max = std::min({e, f, g});
    double sum = 0.0;
    for (int two_t = t_min; two_t <= t_max; two_t += 2) {
        const double num = fact(two_t + 2);
        const double den = fact(two_t - a) * fact(two_t - b) * fact(two_t - c) *
            fact(two_t - d) * fact(e - two_t) * fact(f - two_t) * fact(g - two_t);
        sum += ((two_t / 2) % 2 == 0 ? 1.0 : -1.0) * num / den;
    }
    return pre * sum;
}

}  // namespace rabi
