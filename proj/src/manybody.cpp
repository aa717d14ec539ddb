#include "rydsim/manybody.hpp"

#include <algorithm>
#include <cmath>
#include <deque>
#include <map>
#include <ostream>
#include <sstream>

#include "rydsim/angular.hpp"
#include "rydsim/dipole.hpp"
#include "rydsim/errors.hpp"

namespace rydsim {

namespace {

const char* kind_name(LevelKind k) {
    switch (k) {
        case LevelKind::S49: return "49s";
        case LevelKind::P49: return "49p";
        case LevelKind::D41: return "41d";
        case LevelKind::P42: return "42p";
        case LevelKind::P43: return "43p";
    }
    return "?";
}

bool is_d_volume(AtomRole r) { return r != AtomRole::SAtom; }

RydbergState with_mj(RydbergState s, double mj) {
    s.mj = mj;
    return s;
}

// Dynamic level table of one site. In scalar mode every atom is a two-level
// system over mj = +1/2 representatives (three levels per d-volume atom once
// 43p spectators are present); tensor mode carries the full mj multiplets.
std::vector<LocalLevel> level_table(const AtomSite& site, const CouplingChannel& ch,
                                    CouplingMode mode, bool any_43p) {
    std::vector<LocalLevel> t;
    const bool tensor = mode == CouplingMode::Tensor;
    auto add = [&](LevelKind kind, const RydbergState& tmpl) {
        if (tensor) {
            for (int twomj = -static_cast<int>(std::lround(2 * tmpl.j));
                 twomj <= static_cast<int>(std::lround(2 * tmpl.j)); twomj += 2)
                t.push_back({kind, with_mj(tmpl, 0.5 * twomj)});
        } else {
            t.push_back({kind, with_mj(tmpl, 0.5)});
        }
    };
    if (site.role == AtomRole::SAtom) {
        add(LevelKind::S49, ch.s_lower);
        add(LevelKind::P49, ch.s_upper);
    } else {
        add(LevelKind::D41, ch.d_upper);
        add(LevelKind::P42, ch.d_lower);
        if (any_43p) add(LevelKind::P43, ch.p43);
    }
    return t;
}

int initial_level_index(const AtomSite& site, const std::vector<LocalLevel>& table) {
    LevelKind want = LevelKind::S49;
    switch (site.role) {
        case AtomRole::SAtom: want = LevelKind::S49; break;
        case AtomRole::DAtom: want = LevelKind::D41; break;
        case AtomRole::Spectator42p: want = LevelKind::P42; break;
        case AtomRole::Spectator43p: want = LevelKind::P43; break;
    }
    for (std::size_t i = 0; i < table.size(); ++i)
        if (table[i].kind == want && table[i].state.mj == 0.5) return static_cast<int>(i);
    throw DomainError("initial level missing from level table");
}

// allowed state swaps for the intra-cylinder exchange moves
bool exchange_pair(LevelKind a, LevelKind b) {
    return (a == LevelKind::S49 && b == LevelKind::P49) ||
           (a == LevelKind::P49 && b == LevelKind::S49) ||
           (a == LevelKind::D41 && b == LevelKind::P42) ||
           (a == LevelKind::P42 && b == LevelKind::D41) ||
           (a == LevelKind::D41 && b == LevelKind::P43) ||
           (a == LevelKind::P43 && b == LevelKind::D41);
}

// Calls visit(i, new_level_i, j, new_level_j) for every coupling move leaving
// `config`. Pairs are scanned in site order; the enumeration is deterministic.
template <typename F>
void for_each_move(const std::vector<std::vector<LocalLevel>>& tables,
                   const std::vector<std::uint8_t>& config, int max_transfers, F&& visit) {
    const int n = static_cast<int>(config.size());
    int transfers = 0;
    for (int i = 0; i < n; ++i)
        if (tables[i][config[i]].kind == LevelKind::P49) ++transfers;

    auto targets = [&](int site, LevelKind kind, double mj_from, auto&& fn) {
        const auto& table = tables[site];
        for (std::size_t li = 0; li < table.size(); ++li) {
            if (table[li].kind != kind) continue;
            if (std::abs(table[li].state.mj - mj_from) > 1.0 + 1e-12) continue;
            fn(static_cast<std::uint8_t>(li));
        }
    };

    for (int i = 0; i < n; ++i) {
        const LocalLevel& a = tables[i][config[i]];
        for (int j = i + 1; j < n; ++j) {
            const LocalLevel& b = tables[j][config[j]];

            // transfer: 49s + 41d -> 49p + 42p (and back)
            auto transfer = [&](int si, int di, const LocalLevel& s_lv, const LocalLevel& d_lv,
                                LevelKind s_to, LevelKind d_to) {
                targets(si, s_to, s_lv.state.mj, [&](std::uint8_t ls) {
                    targets(di, d_to, d_lv.state.mj, [&](std::uint8_t ld) {
                        if (si < di)
                            visit(si, ls, di, ld);
                        else
                            visit(di, ld, si, ls);
                    });
                });
            };
            const bool can_forward = max_transfers <= 0 || transfers < max_transfers;
            if (a.kind == LevelKind::S49 && b.kind == LevelKind::D41 && can_forward)
                transfer(i, j, a, b, LevelKind::P49, LevelKind::P42);
            else if (a.kind == LevelKind::D41 && b.kind == LevelKind::S49 && can_forward)
                transfer(j, i, b, a, LevelKind::P49, LevelKind::P42);
            else if (a.kind == LevelKind::P49 && b.kind == LevelKind::P42)
                transfer(i, j, a, b, LevelKind::S49, LevelKind::D41);
            else if (a.kind == LevelKind::P42 && b.kind == LevelKind::P49)
                transfer(j, i, b, a, LevelKind::S49, LevelKind::D41);
            else if (exchange_pair(a.kind, b.kind)) {
                targets(i, b.kind, a.state.mj, [&](std::uint8_t li) {
                    targets(j, a.kind, b.state.mj, [&](std::uint8_t lj) { visit(i, li, j, lj); });
                });
            }
        }
    }
}

} // namespace

AtomSite make_site(const Vec3& position_um, AtomRole role, const CouplingChannel& channel) {
    AtomSite site;
    site.position_um = position_um;
    site.role = role;
    switch (role) {
        case AtomRole::SAtom:
            site.levels = {channel.s_lower, channel.s_upper};
            break;
        case AtomRole::DAtom:
            site.levels = {channel.d_upper, channel.d_lower};
            break;
        case AtomRole::Spectator42p:
            site.levels = {channel.d_lower};
            break;
        case AtomRole::Spectator43p:
            site.levels = {channel.p43};
            break;
    }
    return site;
}

int Basis::transfers(int config_index) const {
    const auto& cfg = configs[config_index];
    int count = 0;
    for (std::size_t i = 0; i < cfg.size(); ++i)
        if (site_levels[i][cfg[i]].kind == LevelKind::P49) ++count;
    return count;
}

Basis build_basis(const std::vector<AtomSite>& sites, const CouplingChannel& channel,
                  CouplingMode mode, int max_transfers, int basis_cap) {
    int n_s = 0, n_d = 0;
    bool any_43p = false;
    for (const auto& s : sites) {
        if (s.role == AtomRole::SAtom) ++n_s;
        if (s.role == AtomRole::DAtom) ++n_d;
        if (s.role == AtomRole::Spectator43p) any_43p = true;
    }
    if (n_s < 1 || n_d < 1)
        throw DomainError("basis needs at least one 49s atom and one 41d atom");

    Basis basis;
    basis.site_levels.reserve(sites.size());
    basis.initial_levels.reserve(sites.size());
    for (const auto& s : sites) {
        basis.site_levels.push_back(level_table(s, channel, mode, any_43p));
        basis.initial_levels.push_back(
            static_cast<std::uint8_t>(initial_level_index(s, basis.site_levels.back())));
    }

    std::map<std::vector<std::uint8_t>, int> seen;
    std::deque<std::vector<std::uint8_t>> frontier;
    seen.emplace(basis.initial_levels, 0);
    frontier.push_back(basis.initial_levels);
    while (!frontier.empty()) {
        const auto config = frontier.front();
        frontier.pop_front();
        for_each_move(basis.site_levels, config, max_transfers,
                      [&](int i, std::uint8_t li, int j, std::uint8_t lj) {
                          auto next = config;
                          next[i] = li;
                          next[j] = lj;
                          if (seen.emplace(next, 0).second) {
                              if (static_cast<int>(seen.size()) > basis_cap) {
                                  std::ostringstream os;
                                  os << "basis exceeds cap of " << basis_cap << " configurations ("
                                     << sites.size() << " atoms: " << n_s << " s, " << n_d
                                     << " d, " << sites.size() - n_s - n_d << " spectators)";
                                  throw ResourceError(os.str());
                              }
                              frontier.push_back(next);
                          }
                      });
    }

    basis.configs.reserve(seen.size());
    for (const auto& [config, _] : seen) basis.configs.push_back(config); // map iterates sorted
    const auto it = std::lower_bound(basis.configs.begin(), basis.configs.end(),
                                     basis.initial_levels);
    basis.initial_index = static_cast<int>(it - basis.configs.begin());
    return basis;
}

ManyBodyProblem assemble_hamiltonian(const std::vector<AtomSite>& sites,
                                     const CouplingChannel& channel, const Basis& basis,
                                     const AssemblyParams& params) {
    if (!params.noise_detunings_mhz.empty() && params.noise_detunings_mhz.size() != sites.size())
        throw DomainError("noise detuning list must match the number of sites");
    if (!std::isfinite(params.detuning_mhz) || !std::isfinite(params.detuning_mj32_mhz))
        throw DomainError("detuning must be finite");

    const int dim = basis.dimension();
    ManyBodyProblem problem;
    problem.sites = sites;
    problem.basis = basis;
    problem.initial_index = basis.initial_index;
    problem.h_mhz = Eigen::MatrixXcd::Zero(dim, dim);
    problem.n_s_atoms = 0;
    for (const auto& s : sites)
        if (s.role == AtomRole::SAtom) ++problem.n_s_atoms;

    const bool tensor = params.mode == CouplingMode::Tensor;

    // reduced matrix elements <to||d||from> per transition, tensor mode only
    std::map<std::pair<LevelKind, LevelKind>, double> reduced;
    if (tensor) {
        auto put = [&](const RydbergState& a, const RydbergState& b, double mu_pi) {
            // recover the reduced element from the stored pi component
            const double threej = wigner3j(a.j, 1.0, b.j, -0.5, 0.0, 0.5);
            const int phase2 = static_cast<int>(std::lround(2 * a.j - 1.0));
            const double sign = (phase2 / 2) % 2 == 0 ? 1.0 : -1.0;
            return mu_pi / (sign * threej);
        };
        const double red_sd = put(channel.s_lower, channel.s_upper, channel.mu2_a0e);
        const double red_dd = put(channel.d_upper, channel.d_lower, channel.mu1_a0e);
        const double red_43 = channel.mu_43p_a0e != 0.0
                                  ? put(channel.d_upper, channel.p43, channel.mu_43p_a0e)
                                  : 0.0;
        // <a||d||b> = (-1)^(ja-jb) <b||d||a> for real radial integrals
        auto both = [&](LevelKind ka, double ja, LevelKind kb, double jb, double red_ab) {
            reduced[{ka, kb}] = red_ab;
            const int p2 = static_cast<int>(std::lround(2 * ja - 2 * jb));
            reduced[{kb, ka}] = ((p2 / 2) % 2 == 0 ? 1.0 : -1.0) * red_ab;
        };
        both(LevelKind::S49, channel.s_lower.j, LevelKind::P49, channel.s_upper.j, red_sd);
        both(LevelKind::D41, channel.d_upper.j, LevelKind::P42, channel.d_lower.j, red_dd);
        if (red_43 != 0.0)
            both(LevelKind::D41, channel.d_upper.j, LevelKind::P43, channel.p43.j, red_43);
    }

    // <to| d_q |from> in a0*e for one site transition
    auto component = [&](const LocalLevel& to, const LocalLevel& from) -> double {
        if (!tensor) {
            const auto pair = std::minmax(to.kind, from.kind);
            if (pair.first == LevelKind::S49 && pair.second == LevelKind::P49)
                return channel.mu2_a0e;
            if (pair.first == LevelKind::D41 && pair.second == LevelKind::P42)
                return channel.mu1_a0e;
            return channel.mu_43p_a0e;
        }
        const double q = to.state.mj - from.state.mj;
        const double threej =
            wigner3j(to.state.j, 1.0, from.state.j, -to.state.mj, q, from.state.mj);
        const int phase2 = static_cast<int>(std::lround(2 * to.state.j - 2 * to.state.mj));
        const double sign = (phase2 / 2) % 2 == 0 ? 1.0 : -1.0;
        return sign * threej * reduced.at({to.kind, from.kind});
    };

    problem.p49_counts.resize(dim);
    std::map<std::vector<std::uint8_t>, int> index;
    for (int c = 0; c < dim; ++c) index.emplace(basis.configs[c], c);

    for (int c = 0; c < dim; ++c) {
        const auto& config = basis.configs[c];

        // diagonal: completed transfers times the channel detuning, plus the
        // per-atom noise detunings of every atom not in its initial level
        double diag = 0.0;
        double p49 = 0.0;
        for (std::size_t i = 0; i < config.size(); ++i) {
            const LocalLevel& lv = basis.site_levels[i][config[i]];
            if (lv.kind == LevelKind::P49) {
                p49 += 1.0;
                diag += (tensor && std::abs(lv.state.mj) > 1.0) ? params.detuning_mj32_mhz
                                                                : params.detuning_mhz;
            }
            if (!params.noise_detunings_mhz.empty() && config[i] != basis.initial_levels[i])
                diag += params.noise_detunings_mhz[i];
        }
        problem.p49_counts[c] = p49;
        problem.h_mhz(c, c) = diag;

        for_each_move(basis.site_levels, config, 0,
                      [&](int i, std::uint8_t li, int j, std::uint8_t lj) {
                          auto next = config;
                          next[i] = li;
                          next[j] = lj;
                          const auto it = index.find(next);
                          if (it == index.end()) return; // outside max_transfers window
                          const int c2 = it->second;
                          if (c2 <= c) return; // fill upper triangle once, mirror below

                          const LocalLevel& from_i = basis.site_levels[i][config[i]];
                          const LocalLevel& to_i = basis.site_levels[i][li];
                          const LocalLevel& from_j = basis.site_levels[j][config[j]];
                          const LocalLevel& to_j = basis.site_levels[j][lj];

                          std::complex<double> elem;
                          if (tensor) {
                              const int qi = static_cast<int>(
                                  std::lround(to_i.state.mj - from_i.state.mj));
                              const int qj = static_cast<int>(
                                  std::lround(to_j.state.mj - from_j.state.mj));
                              elem = pair_coupling_tensor(
                                  sites[i].position_um, sites[j].position_um, qi, qj,
                                  component(to_i, from_i), component(to_j, from_j),
                                  params.quant_axis, params.limits);
                          } else {
                              elem = pair_coupling_scalar(
                                  sites[i].position_um, sites[j].position_um,
                                  component(to_i, from_i), component(to_j, from_j),
                                  params.quant_axis, params.limits);
                          }
                          problem.h_mhz(c2, c) = elem;
                          problem.h_mhz(c, c2) = std::conj(elem);
                      });
    }
    return problem;
}

void dump_problem(const ManyBodyProblem& problem, std::ostream& out) {
    out << "sites " << problem.sites.size() << "\n";
    for (std::size_t i = 0; i < problem.sites.size(); ++i) {
        const auto& s = problem.sites[i];
        const char* role = s.role == AtomRole::SAtom          ? "s"
                           : s.role == AtomRole::DAtom        ? "d"
                           : s.role == AtomRole::Spectator42p ? "42p"
                                                              : "43p";
        out << "  " << i << " " << role << " (" << s.position_um.x << ", " << s.position_um.y
            << ", " << s.position_um.z << ")\n";
    }
    out << "basis " << problem.basis.dimension() << " (initial " << problem.initial_index
        << ")\n";
    for (int c = 0; c < problem.basis.dimension(); ++c) {
        out << "  " << c << ":";
        for (std::size_t i = 0; i < problem.sites.size(); ++i) {
            const auto& lv = problem.basis.site_levels[i][problem.basis.configs[c][i]];
            out << " " << kind_name(lv.kind) << "(" << lv.state.mj << ")";
        }
        out << "\n";
    }
    out << "hamiltonian_mhz\n";
    for (int r = 0; r < problem.h_mhz.rows(); ++r) {
        for (int c = 0; c < problem.h_mhz.cols(); ++c) {
            const auto v = problem.h_mhz(r, c);
            out << v.real();
            if (v.imag() != 0.0) out << (v.imag() > 0 ? "+" : "") << v.imag() << "i";
            out << (c + 1 < problem.h_mhz.cols() ? " " : "\n");
        }
    }
}

} // namespace rydsim
