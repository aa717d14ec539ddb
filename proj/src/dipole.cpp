#include "rydsim/dipole.hpp"

#include <cmath>
#include <map>
#include <sstream>

#include "rydsim/angular.hpp"
#include "rydsim/constants.hpp"
#include "rydsim/errors.hpp"

namespace rydsim {

namespace {

constexpr double kSpin = 0.5;

// <L_a || C^(1) || L_b>
double reduced_orbital(int La, int Lb) {
    return ((La % 2 == 0) ? 1.0 : -1.0) * std::sqrt((2.0 * La + 1) * (2.0 * Lb + 1)) *
           wigner3j(La, 1, Lb, 0, 0, 0);
}

double reduced_dipole_from_radial(const RydbergState& a, const RydbergState& b, double radial) {
    // Edmonds 7.1.7: tensor acting on the orbital part of (L s) j coupling
    const int phase2 = static_cast<int>(std::lround(2 * a.L + 2 * kSpin + 2 * b.j + 2));
    const double sign = (phase2 / 2) % 2 == 0 ? 1.0 : -1.0;
    return sign * std::sqrt((2.0 * a.j + 1) * (2.0 * b.j + 1)) *
           wigner6j(a.L, a.j, kSpin, b.j, b.L, 1) * reduced_orbital(a.L, b.L) * radial;
}

} // namespace

double reduced_dipole(const RydbergState& a, const RydbergState& b,
                      const QuantumDefectTable& defects, const GridSpec& grid) {
    if (std::abs(a.L - b.L) != 1)
        throw DomainError("dipole-forbidden: |delta L| != 1 between " + a.label() + " and " +
                          b.label());
    return reduced_dipole_from_radial(a, b, radial_matrix_element(a, b, defects, grid));
}

double dipole_moment(const RydbergState& a, const RydbergState& b, int q,
                     const QuantumDefectTable& defects, const GridSpec& grid) {
    if (q < -1 || q > 1) throw DomainError("spherical component q must be -1, 0 or +1");
    if (std::abs(a.L - b.L) != 1)
        throw DomainError("dipole-forbidden: |delta L| != 1 between " + a.label() + " and " +
                          b.label());
    if (std::abs(a.j - b.j) > 1.0 + 1e-12) return 0.0;
    if (std::abs(b.mj + q - a.mj) > 1e-12) return 0.0;

    const double threej = wigner3j(a.j, 1.0, b.j, -a.mj, q, b.mj);
    if (threej == 0.0) return 0.0;
    const int phase2 = static_cast<int>(std::lround(2 * a.j - 2 * a.mj));
    const double sign = (phase2 / 2) % 2 == 0 ? 1.0 : -1.0;
    return sign * threej * reduced_dipole(a, b, defects, grid);
}

double polarizability(const RydbergState& state, const QuantumDefectTable& defects, int window,
                      double degeneracy_threshold_ghz, const GridSpec& grid) {
    if (window < 4) throw DomainError("polarizability window must span at least +-4 in n");

    const double e0 = energy_level(state, defects);
    const RadialWavefunction wf0 = radial_wavefunction(state, defects, grid);

    double alpha_au = 0.0;
    for (int Lk : {state.L - 1, state.L + 1}) {
        if (Lk < 0) continue;
        for (int nk = state.n - window; nk <= state.n + window; ++nk) {
            if (nk < Lk + 1) continue;
            for (int twojk : {2 * Lk - 1, 2 * Lk + 1}) {
                if (twojk < 1) continue;
                const double jk = 0.5 * twojk;
                if (std::abs(state.mj) > jk) continue;
                if (!defects.has(Lk, jk)) continue;
                const RydbergState inter(nk, Lk, jk, state.mj, state.species);
                if (defects.effective_n(inter) <= Lk) continue;

                const double ek = energy_level(inter, defects);
                const double gap_ghz = ek - e0;
                if (std::abs(gap_ghz) < degeneracy_threshold_ghz) {
                    std::ostringstream os;
                    os << "near-degenerate pair " << state.label() << " / " << inter.label()
                       << " (gap " << gap_ghz << " GHz): perturbative Stark model invalid, "
                       << "use the empirical mode";
                    throw NumericalError(os.str());
                }

                const double radial = radial_matrix_element(wf0, radial_wavefunction(inter, defects, grid));
                const double mu = [&] {
                    const double threej = wigner3j(state.j, 1.0, jk, -state.mj, 0.0, state.mj);
                    const int phase2 = static_cast<int>(std::lround(2 * state.j - 2 * state.mj));
                    const double sign = (phase2 / 2) % 2 == 0 ? 1.0 : -1.0;
                    return sign * threej * reduced_dipole_from_radial(state, inter, radial);
                }();
                alpha_au += 2.0 * mu * mu / (gap_ghz / kHartreeGHz);
            }
        }
    }
    return alpha_au * kPolarizabilityAuToMHz;
}

} // namespace rydsim
