#pragma once

#include "rydsim/atomic.hpp"
#include "rydsim/radial.hpp"

namespace rydsim {

// The two field resonances of the transfer reaction; F1 tunes the
// 49p3/2 |mj|=1/2 branch into resonance, F2 the |mj|=3/2 branch.
enum class MjBranch { F1, F2 };

// The resonant pair transition: (41d3/2 -> 42p1/2) on one atom together with
// (49s1/2 -> 49p3/2) on the other. mu1/mu2 are the pi components used by the
// scalar coupling model; delta0 is the zero-field energy defect of the
// reaction (positive when the products lie above the reactants).
struct CouplingChannel {
    RydbergState d_lower;  // 42p1/2
    RydbergState d_upper;  // 41d3/2
    RydbergState s_lower;  // 49s1/2
    RydbergState s_upper;  // 49p3/2
    RydbergState p43;      // 43p3/2 spectator level
    double mu1_a0e = 0.0;      // <41d3/2,1/2| d_0 |42p1/2,1/2>
    double mu2_a0e = 0.0;      // <49s1/2,1/2| d_0 |49p3/2,1/2>
    double mu_43p_a0e = 0.0;   // <41d3/2,1/2| d_0 |43p3/2,1/2>, spectator exchange
    double delta0_mhz = 0.0;
};

// Builds the reaction channel ab initio from the defect table.
CouplingChannel make_channel(const QuantumDefectTable& defects, const GridSpec& grid = {});

// Stark tuning of the channel defect.
//   empirical:    Delta(F) = slope * (F - F_branch)
//   perturbative: Delta(F) = Delta0 + (alpha_init - alpha_final) F^2 / 2
class StarkModel {
public:
    static StarkModel empirical(double f1_vpcm, double f2_vpcm, double slope_mhz_per_vpcm);

    // Second-order polarizabilities for all four channel states (both 49p3/2
    // |mj| branches), evaluated from the defect table.
    static StarkModel perturbative(const CouplingChannel& channel,
                                   const QuantumDefectTable& defects, int window = 5,
                                   const GridSpec& grid = {});

    bool is_empirical() const { return empirical_; }

    double detuning_mhz(double field_vpcm, MjBranch branch) const;

    // Field solving detuning = 0. Empirical mode returns the configured value;
    // perturbative mode bisects on [0, 2] V/cm to 1e-4 V/cm.
    double resonance_field_vpcm(MjBranch branch) const;

    // Perturbative diagnostics (zero in empirical mode).
    double alpha_sum_initial() const { return alpha_49s_ + alpha_41d_; }
    double alpha_sum_final(MjBranch b) const {
        return alpha_42p_ + (b == MjBranch::F1 ? alpha_49p_mj12_ : alpha_49p_mj32_);
    }
    double delta0_mhz() const { return delta0_mhz_; }

private:
    StarkModel() = default;

    bool empirical_ = true;
    double f1_ = 0.0, f2_ = 0.0, slope_ = 0.0;
    double delta0_mhz_ = 0.0;
    double alpha_49s_ = 0.0, alpha_41d_ = 0.0, alpha_42p_ = 0.0;
    double alpha_49p_mj12_ = 0.0, alpha_49p_mj32_ = 0.0;
};

} // namespace rydsim
