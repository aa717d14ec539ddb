#pragma once

// Angular momentum algebra: Wigner 3j/6j symbols and Clebsch-Gordan
// coefficients, evaluated from the Racah factorial sums. Arguments are
// integers or half-integers; selection-rule violations return 0.

namespace rydsim {

double wigner3j(double j1, double j2, double j3, double m1, double m2, double m3);

double wigner6j(double j1, double j2, double j3, double j4, double j5, double j6);

// <j1 m1 j2 m2 | J M>
double clebsch_gordan(double j1, double m1, double j2, double m2, double J, double M);

} // namespace rydsim
