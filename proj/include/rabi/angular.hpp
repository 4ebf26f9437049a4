// angular.hpp — Wigner 3-j and 6-j symbols for small angular momenta.

#pragma once

namespace rabi {

// Arguments are twice the (half-)integer quantum numbers, so j=3/2 -> 3.
double wigner_3j(int two_j1, int two_j2, int two_j3,
                 int two_m1, int two_m2, int two_m3);
double wigner_6j(int two_j1, int two_j2, int two_j3,
                 int two_j4, int two_j5, int two_j6);

}  // namespace rabi
