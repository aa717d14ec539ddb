#include "rydsim/coupling.hpp"

#include <cmath>
#include <sstream>

#include "rydsim/constants.hpp"
#include "rydsim/errors.hpp"

namespace rydsim {

PairGeometry pair_geometry(const Vec3& r1, const Vec3& r2, const Vec3& quant_axis) {
    const Vec3 axis = quant_axis.normalized();
    const Vec3 d = r2 - r1;
    PairGeometry g;
    g.distance_um = d.norm();
    if (g.distance_um == 0.0) throw DomainError("coincident atom positions");
    const Vec3 rhat = d * (1.0 / g.distance_um);
    g.cos_theta = rhat.dot(axis);

    // deterministic transverse frame for the azimuth
    Vec3 ref = std::abs(axis.x) < 0.9 ? Vec3{1, 0, 0} : Vec3{0, 1, 0};
    const Vec3 e1 = axis.cross(ref).normalized();
    const Vec3 e2 = axis.cross(e1);
    g.phi = std::atan2(rhat.dot(e2), rhat.dot(e1));
    if (!std::isfinite(g.phi)) g.phi = 0.0;
    return g;
}

namespace {

double guarded_distance(double r_um, const PairLimits& limits) {
    if (r_um >= limits.min_distance_um) return r_um;
    if (limits.policy == ClosePairPolicy::Cap) return limits.min_distance_um;
    std::ostringstream os;
    os << "close pair: distance " << r_um << " um below the " << limits.min_distance_um
       << " um floor";
    throw DomainError(os.str());
}

} // namespace

double pair_coupling_scalar(const Vec3& r1, const Vec3& r2, double mu1_a0e, double mu2_a0e,
                            const Vec3& quant_axis, const PairLimits& limits) {
    const PairGeometry g = pair_geometry(r1, r2, quant_axis);
    const double r = guarded_distance(g.distance_um, limits);
    const double c2 = g.cos_theta * g.cos_theta;
    return kDipoleDipoleMHz * mu1_a0e * mu2_a0e * (1.0 - 3.0 * c2) / (r * r * r);
}

std::complex<double> tensor_weight(int q1, int q2, double cos_theta, double phi) {
    const double c = cos_theta;
    const double s2 = 1.0 - c * c;
    const double s = std::sqrt(std::max(0.0, s2));
    const std::complex<double> eip(std::cos(phi), std::sin(phi));
    const int key = 3 * q1 + q2; // q in {-1,0,1}

    switch (key) {
        case 0: // (0, 0)
            return {1.0 - 3.0 * c * c, 0.0};
        case 2:  // (+1, -1)
        case -2: // (-1, +1)
            return {-1.0 + 1.5 * s2, 0.0};
        case 1: // (0, +1)
        case 3: // (+1, 0)
            return 3.0 / std::sqrt(2.0) * s * c * std::conj(eip);
        case -1: // (0, -1)
        case -3: // (-1, 0)
            return -3.0 / std::sqrt(2.0) * s * c * eip;
        case 4: // (+1, +1)
            return -1.5 * s2 * std::conj(eip * eip);
        case -4: // (-1, -1)
            return -1.5 * s2 * eip * eip;
        default:
            throw DomainError("spherical components must be in {-1, 0, +1}");
    }
}

std::complex<double> pair_coupling_tensor(const Vec3& r1, const Vec3& r2, int q1, int q2,
                                          double d1_component_a0e, double d2_component_a0e,
                                          const Vec3& quant_axis, const PairLimits& limits) {
    const PairGeometry g = pair_geometry(r1, r2, quant_axis);
    const double r = guarded_distance(g.distance_um, limits);
    return tensor_weight(q1, q2, g.cos_theta, g.phi) * kDipoleDipoleMHz * d1_component_a0e *
           d2_component_a0e / (r * r * r);
}

} // namespace rydsim
