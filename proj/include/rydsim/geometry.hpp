#pragma once

#include <cmath>

namespace rydsim {

struct Vec3 {
    double x = 0.0, y = 0.0, z = 0.0;

    Vec3 operator+(const Vec3& o) const { return {x + o.x, y + o.y, z + o.z}; }
    Vec3 operator-(const Vec3& o) const { return {x - o.x, y - o.y, z - o.z}; }
    Vec3 operator*(double s) const { return {x * s, y * s, z * s}; }
    double dot(const Vec3& o) const { return x * o.x + y * o.y + z * o.z; }
    Vec3 cross(const Vec3& o) const {
        return {y * o.z - z * o.y, z * o.x - x * o.z, x * o.y - y * o.x};
    }
    double norm() const { return std::sqrt(dot(*this)); }
    Vec3 normalized() const {
        const double n = norm();
        return {x / n, y / n, z / n};
    }
    bool operator==(const Vec3& o) const { return x == o.x && y == o.y && z == o.z; }
};

// Relative geometry of an atom pair with respect to the quantization axis.
struct PairGeometry {
    double distance_um = 0.0;
    double cos_theta = 0.0; // angle between the pair axis and the quantization axis
    double phi = 0.0;       // azimuth around the quantization axis
};

PairGeometry pair_geometry(const Vec3& r1, const Vec3& r2, const Vec3& quant_axis);

} // namespace rydsim
