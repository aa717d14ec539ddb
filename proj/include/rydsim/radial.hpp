#pragma once

#include <vector>

#include "rydsim/atomic.hpp"

namespace rydsim {

// Radial grid parameters. Integration runs on a uniform lattice in x = sqrt(r)
// (step in x), inward from r_out. r_out = 0 selects 2n(n+15) a0.
struct GridSpec {
    double step = 0.01;
    double r_out = 0.0;
};

// u(r) = r R(r) on a strictly increasing r grid, normalized so that
// int u^2 dr = 1. Samples share a global lattice x_k = k * step so that
// functions from the same GridSpec can be integrated against each other.
struct RadialWavefunction {
    RydbergState state;
    double step = 0.0;  // lattice step in x = sqrt(r)
    int k_min = 0;      // first lattice index
    std::vector<double> r;
    std::vector<double> u;

    double norm() const;        // int u^2 dr (trapezoid)
    int node_count() const;     // interior sign changes
    double peak_r() const;      // abscissa of max |u|
};

// Coulomb-approximation bound state at the quantum-defect energy, integrated
// inward with the Numerov method; the divergent inner tail below the
// classical turning point is truncated.
RadialWavefunction radial_wavefunction(const RydbergState& state,
                                       const QuantumDefectTable& defects,
                                       const GridSpec& grid = {});

// <a| r |b> in Bohr radii. Requires |L_a - L_b| = 1.
double radial_matrix_element(const RydbergState& a, const RydbergState& b,
                             const QuantumDefectTable& defects,
                             const GridSpec& grid = {});

// Same integral on precomputed wavefunctions (must share a GridSpec).
double radial_matrix_element(const RadialWavefunction& a, const RadialWavefunction& b);

} // namespace rydsim
