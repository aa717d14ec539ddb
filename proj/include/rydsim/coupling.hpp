#pragma once

#include <complex>

#include "rydsim/geometry.hpp"

namespace rydsim {

enum class CouplingMode { Scalar, Tensor };

enum class ClosePairPolicy { Reject, Cap };

// Distance guard shared by all coupling evaluations. Reject throws a
// DomainError (the shot records it and is excluded); Cap clamps the distance.
struct PairLimits {
    double min_distance_um = 0.5;
    ClosePairPolicy policy = ClosePairPolicy::Reject;
};

// Scalar dipole-dipole coupling mu1 mu2 (1 - 3 cos^2 theta) / R^3 in MHz,
// with mu in a0*e and positions in um; theta measured from quant_axis.
double pair_coupling_scalar(const Vec3& r1, const Vec3& r2, double mu1_a0e, double mu2_a0e,
                            const Vec3& quant_axis, const PairLimits& limits = {});

// Angular weight of the (q1, q2) spherical component pair in the
// dipole-dipole operator: V = sum_{q1 q2} w_{q1 q2} d1^{q1} d2^{q2} / R^3.
// w(0,0) reduces to (1 - 3 cos^2 theta).
std::complex<double> tensor_weight(int q1, int q2, double cos_theta, double phi);

// Full tensor-mode coupling for one product transition, in MHz.
std::complex<double> pair_coupling_tensor(const Vec3& r1, const Vec3& r2, int q1, int q2,
                                          double d1_component_a0e, double d2_component_a0e,
                                          const Vec3& quant_axis, const PairLimits& limits = {});

} // namespace rydsim
