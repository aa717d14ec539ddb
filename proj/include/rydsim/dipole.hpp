#pragma once

#include "rydsim/atomic.hpp"
#include "rydsim/radial.hpp"

namespace rydsim {

// Reduced dipole matrix element <a||d||b> in a0*e (radial integral times
// orbital and spin-recoupling factors).
double reduced_dipole(const RydbergState& a, const RydbergState& b,
                      const QuantumDefectTable& defects, const GridSpec& grid = {});

// Spherical component <a, mj_a| d_q |b, mj_b> in a0*e, q in {-1, 0, +1}.
// Selection-rule violations return 0; |delta L| != 1 is a domain error.
double dipole_moment(const RydbergState& a, const RydbergState& b, int q,
                     const QuantumDefectTable& defects, const GridSpec& grid = {});

// Scalar polarizability of |state> restricted to the mj of the state, from
// the second-order sum over n' in [n - window, n + window], L' = L +- 1,
// both j' series. Sign convention: level shift = -alpha F^2 / 2.
// Result in MHz/(V/cm)^2.
double polarizability(const RydbergState& state, const QuantumDefectTable& defects,
                      int window = 5, double degeneracy_threshold_ghz = 1.0,
                      const GridSpec& grid = {});

} // namespace rydsim
