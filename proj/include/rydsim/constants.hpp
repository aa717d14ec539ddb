#pragma once

// Physical constants and unit conversions. Internal atomic-structure work is
// done in atomic units; interfaces use um, us, V/cm, MHz, GHz and a0*e.

namespace rydsim {

// CODATA 2018
inline constexpr double kBohrRadiusUm = 5.29177210903e-5;     // a0 in um
inline constexpr double kHartreeGHz = 6.579683920502e6;       // E_h/h in GHz
inline constexpr double kHartreeMHz = 6.579683920502e9;       // E_h/h in MHz
inline constexpr double kAtomicFieldVPerCm = 5.14220674763e9; // E_h/(e*a0) in V/cm

// (a0*e)^2 / um^3 expressed in MHz: prefactor of the dipole-dipole coupling
// when dipoles are in a0*e and distances in um.
inline constexpr double kDipoleDipoleMHz =
    kHartreeMHz * kBohrRadiusUm * kBohrRadiusUm * kBohrRadiusUm;

// Atomic-unit polarizability expressed in MHz/(V/cm)^2.
inline constexpr double kPolarizabilityAuToMHz =
    kHartreeMHz / (kAtomicFieldVPerCm * kAtomicFieldVPerCm);

} // namespace rydsim
