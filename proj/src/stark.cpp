#include "rydsim/stark.hpp"

#include <cmath>
#include <sstream>

#include "rydsim/dipole.hpp"
#include "rydsim/errors.hpp"

namespace rydsim {

CouplingChannel make_channel(const QuantumDefectTable& defects, const GridSpec& grid) {
    CouplingChannel ch;
    ch.d_upper = RydbergState(41, 2, 1.5, 0.5);
    ch.d_lower = RydbergState(42, 1, 0.5, 0.5);
    ch.s_lower = RydbergState(49, 0, 0.5, 0.5);
    ch.s_upper = RydbergState(49, 1, 1.5, 0.5);
    ch.p43 = RydbergState(43, 1, 1.5, 0.5);

    ch.mu1_a0e = dipole_moment(ch.d_upper, ch.d_lower, 0, defects, grid);
    ch.mu2_a0e = dipole_moment(ch.s_lower, ch.s_upper, 0, defects, grid);
    ch.mu_43p_a0e = dipole_moment(ch.d_upper, ch.p43, 0, defects, grid);

    const double up_ghz = energy_level(ch.s_upper, defects) - energy_level(ch.s_lower, defects);
    const double down_ghz = energy_level(ch.d_upper, defects) - energy_level(ch.d_lower, defects);
    ch.delta0_mhz = (up_ghz - down_ghz) * 1e3;
    return ch;
}

StarkModel StarkModel::empirical(double f1_vpcm, double f2_vpcm, double slope_mhz_per_vpcm) {
    if (!(f1_vpcm < f2_vpcm)) throw ConfigError("empirical Stark model requires F1 < F2");
    if (!(slope_mhz_per_vpcm > 0)) throw ConfigError("empirical Stark slope must be positive");
    StarkModel m;
    m.empirical_ = true;
    m.f1_ = f1_vpcm;
    m.f2_ = f2_vpcm;
    m.slope_ = slope_mhz_per_vpcm;
    return m;
}

StarkModel StarkModel::perturbative(const CouplingChannel& channel,
                                    const QuantumDefectTable& defects, int window,
                                    const GridSpec& grid) {
    StarkModel m;
    m.empirical_ = false;
    m.delta0_mhz_ = channel.delta0_mhz;
    m.alpha_49s_ = polarizability(channel.s_lower, defects, window, 1.0, grid);
    m.alpha_41d_ = polarizability(channel.d_upper, defects, window, 1.0, grid);
    m.alpha_42p_ = polarizability(channel.d_lower, defects, window, 1.0, grid);
    RydbergState p12 = channel.s_upper;
    p12.mj = 0.5;
    RydbergState p32 = channel.s_upper;
    p32.mj = 1.5;
    m.alpha_49p_mj12_ = polarizability(p12, defects, window, 1.0, grid);
    m.alpha_49p_mj32_ = polarizability(p32, defects, window, 1.0, grid);
    return m;
}

double StarkModel::detuning_mhz(double field_vpcm, MjBranch branch) const {
    if (field_vpcm < 0) throw DomainError("electric field must be >= 0");
    if (empirical_) {
        const double f0 = branch == MjBranch::F1 ? f1_ : f2_;
        return slope_ * (field_vpcm - f0);
    }
    const double dalpha = alpha_sum_initial() - alpha_sum_final(branch);
    return delta0_mhz_ + 0.5 * dalpha * field_vpcm * field_vpcm;
}

double StarkModel::resonance_field_vpcm(MjBranch branch) const {
    if (empirical_) return branch == MjBranch::F1 ? f1_ : f2_;

    constexpr double kLo = 0.0, kHi = 2.0, kTol = 1e-4;
    double lo = kLo, hi = kHi;
    double flo = detuning_mhz(lo, branch);
    double fhi = detuning_mhz(hi, branch);
    if (flo * fhi > 0) {
        std::ostringstream os;
        os << "no detuning zero crossing in [0, 2] V/cm (Delta(0)=" << flo << " MHz, Delta(2)="
           << fhi << " MHz)";
        throw NumericalError(os.str());
    }
    while (hi - lo > kTol) {
        const double mid = 0.5 * (lo + hi);
        const double fmid = detuning_mhz(mid, branch);
        if (fmid == 0.0) return mid;
        if (flo * fmid < 0) {
            hi = mid;
        } else {
            lo = mid;
            flo = fmid;
        }
    }
    return 0.5 * (lo + hi);
}

} // namespace rydsim
