#include "rydsim/radial.hpp"

#include <algorithm>
#include <cmath>
#include <sstream>

#include "rydsim/errors.hpp"

namespace rydsim {

namespace {

// x-space form of u'' = W(r) u under r = x^2, u = sqrt(x) v:
// v'' = G(x) v with G = (4 L(L+1) + 3/4)/x^2 - 8/1 * (E + 1/r) * x^2 ...
// written out for the Coulomb potential -1/r and energy E (Hartree):
// G(x) = (4 L(L+1) + 3/4)/x^2 - 8 - 8 E x^2
double g_of_x(double x, int L, double energy_au) {
    const double cf = 4.0 * L * (L + 1) + 0.75;
    return cf / (x * x) - 8.0 - 8.0 * energy_au * x * x;
}

} // namespace

double RadialWavefunction::norm() const {
    // trapezoid of u^2 dr on the x lattice: dr = 2 x dx
    double s = 0.0;
    for (std::size_t i = 0; i < u.size(); ++i) {
        const double x = std::sqrt(r[i]);
        const double w = (i == 0 || i + 1 == u.size()) ? 0.5 : 1.0;
        s += w * u[i] * u[i] * 2.0 * x * step;
    }
    return s;
}

int RadialWavefunction::node_count() const {
    double peak = 0.0;
    for (double v : u) peak = std::max(peak, std::abs(v));
    const double floor = 1e-10 * peak;
    int nodes = 0;
    double prev = 0.0;
    for (double v : u) {
        if (std::abs(v) < floor) continue;
        if (prev != 0.0 && v * prev < 0.0) ++nodes;
        prev = v;
    }
    return nodes;
}

double RadialWavefunction::peak_r() const {
    std::size_t best = 0;
    for (std::size_t i = 1; i < u.size(); ++i)
        if (std::abs(u[i]) > std::abs(u[best])) best = i;
    return r[best];
}

RadialWavefunction radial_wavefunction(const RydbergState& state,
                                       const QuantumDefectTable& defects,
                                       const GridSpec& grid) {
    const double nstar = defects.effective_n(state);
    if (nstar <= state.L)
        throw DomainError("effective n* <= L for " + state.label());

    const double h = grid.step;
    const double r_out = grid.r_out > 0 ? grid.r_out : 2.0 * state.n * (state.n + 15.0);
    const double energy_au = -0.5 / (nstar * nstar);
    const int L = state.L;

    const int k_out = static_cast<int>(std::ceil(std::sqrt(r_out) / h));
    const int k_in = 1;
    const int npts = k_out - k_in + 1;

    // Numerov, integrating inward; v indexed by lattice position k_in..k_out
    std::vector<double> v(npts, 0.0);
    auto G = [&](int k) { return g_of_x(k * h, L, energy_au); };
    v[npts - 1] = 1e-12;
    v[npts - 2] = 1.01e-12;
    const double h2 = h * h;
    for (int i = npts - 3; i >= 0; --i) {
        const int k = k_in + i;
        v[i] = ((2.0 + 5.0 * h2 * G(k + 1) / 6.0) * v[i + 1] -
                (1.0 - h2 * G(k + 2) / 12.0) * v[i + 2]) /
               (1.0 - h2 * G(k) / 12.0);
    }

    // Truncate the divergent tail below the inner classical turning point.
    int cut = 0;
    if (L > 0) {
        const double disc = 1.0 - L * (L + 1) / (nstar * nstar);
        const double r_tp = nstar * nstar * (1.0 - std::sqrt(std::max(0.0, disc)));
        const int k_tp = static_cast<int>(std::floor(std::sqrt(std::max(r_tp, 0.0)) / h));
        if (k_tp > k_in) {
            int best = 0;
            const int last = std::min(k_tp - k_in, npts - 1);
            for (int i = 1; i <= last; ++i)
                if (std::abs(v[i]) < std::abs(v[best])) best = i;
            cut = best;
            for (int i = 0; i < cut; ++i) v[i] = 0.0;
        }
    }

    RadialWavefunction wf;
    wf.state = state;
    wf.step = h;
    wf.k_min = k_in + cut;
    wf.r.resize(npts - cut);
    wf.u.resize(npts - cut);
    for (int i = cut; i < npts; ++i) {
        const double x = (k_in + i) * h;
        wf.r[i - cut] = x * x;
        wf.u[i - cut] = std::sqrt(x) * v[i];
    }

    const double nrm = wf.norm();
    if (!(nrm > 0.0) || !std::isfinite(nrm)) {
        std::ostringstream os;
        os << "radial normalization failed for " << state.label() << ": integral = " << nrm
           << " (step=" << h << ", r_out=" << r_out << ", points=" << npts << ")";
        throw NumericalError(os.str());
    }
    const double scale = 1.0 / std::sqrt(nrm);
    for (double& uu : wf.u) uu *= scale;
    return wf;
}

double radial_matrix_element(const RadialWavefunction& a, const RadialWavefunction& b) {
    if (a.step != b.step)
        throw DomainError("radial wavefunctions live on different lattices");
    const int lo = std::max(a.k_min, b.k_min);
    const int hi = std::min(a.k_min + static_cast<int>(a.u.size()),
                            b.k_min + static_cast<int>(b.u.size())) -
                   1;
    if (lo > hi) return 0.0;
    // int u_a r u_b dr = 2 h sum x^3 u_a u_b
    double s = 0.0;
    for (int k = lo; k <= hi; ++k) {
        const double x = k * a.step;
        const double w = (k == lo || k == hi) ? 0.5 : 1.0;
        s += w * a.u[k - a.k_min] * b.u[k - b.k_min] * x * x * x;
    }
    return 2.0 * a.step * s;
}

double radial_matrix_element(const RydbergState& a, const RydbergState& b,
                             const QuantumDefectTable& defects, const GridSpec& grid) {
    if (std::abs(a.L - b.L) != 1)
        throw DomainError("dipole-forbidden radial element: |delta L| != 1 between " + a.label() +
                          " and " + b.label());
    return radial_matrix_element(radial_wavefunction(a, defects, grid),
                                 radial_wavefunction(b, defects, grid));
}

} // namespace rydsim
