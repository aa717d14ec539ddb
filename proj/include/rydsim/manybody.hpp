#pragma once

#include <Eigen/Dense>
#include <cstdint>
#include <iosfwd>
#include <vector>

#include "rydsim/atomic.hpp"
#include "rydsim/coupling.hpp"
#include "rydsim/geometry.hpp"
#include "rydsim/stark.hpp"

namespace rydsim {

enum class AtomRole { SAtom, DAtom, Spectator42p, Spectator43p };

// Level bookkeeping codes for the five states that appear in the dynamics.
enum class LevelKind : std::uint8_t { S49, P49, D41, P42, P43 };

struct LocalLevel {
    LevelKind kind;
    RydbergState state;
};

struct AtomSite {
    Vec3 position_um;
    AtomRole role = AtomRole::SAtom;
    std::vector<RydbergState> levels; // declared level set of the role
};

AtomSite make_site(const Vec3& position_um, AtomRole role, const CouplingChannel& channel);

// The excitation-conserving configuration basis. A configuration assigns each
// site an index into its level table; configurations are those reachable from
// the initial product state via transfer flips and intra-cylinder exchange,
// stored in lexicographic order.
struct Basis {
    std::vector<std::vector<LocalLevel>> site_levels;
    std::vector<std::uint8_t> initial_levels;
    std::vector<std::vector<std::uint8_t>> configs;
    int initial_index = -1;

    int dimension() const { return static_cast<int>(configs.size()); }
    int transfers(int config_index) const; // completed transfers = # of 49p
};

Basis build_basis(const std::vector<AtomSite>& sites, const CouplingChannel& channel,
                  CouplingMode mode = CouplingMode::Scalar, int max_transfers = 0,
                  int basis_cap = 20000);

struct AssemblyParams {
    double detuning_mhz = 0.0;      // channel detuning (tensor mode: |mj|=1/2 branch)
    double detuning_mj32_mhz = 0.0; // tensor mode: |mj|=3/2 branch
    std::vector<double> noise_detunings_mhz; // per site; empty = no noise
    Vec3 quant_axis{1.0, 0.0, 0.0};
    CouplingMode mode = CouplingMode::Scalar;
    PairLimits limits{};
};

struct ManyBodyProblem {
    std::vector<AtomSite> sites;
    Basis basis;
    Eigen::MatrixXcd h_mhz; // Hermitian by construction
    int initial_index = -1;
    int n_s_atoms = 0;
    std::vector<double> p49_counts; // per configuration
};

ManyBodyProblem assemble_hamiltonian(const std::vector<AtomSite>& sites,
                                     const CouplingChannel& channel, const Basis& basis,
                                     const AssemblyParams& params);

// Plain-text dump of the basis and matrix for cross-checks.
void dump_problem(const ManyBodyProblem& problem, std::ostream& out);

} // namespace rydsim
