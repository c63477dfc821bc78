#pragma once

#include <cmath>

namespace rsh {

// Plain 3-vector over double. Everything here is constexpr-friendly and
// allocation-free; curves hand these around by value.
struct Vec3 {
    double x = 0.0;
    double y = 0.0;
    double z = 0.0;

    constexpr Vec3() = default;
    constexpr Vec3(double x_, double y_, double z_) : x(x_), y(y_), z(z_) {}

    constexpr Vec3 operator+(const Vec3& o) const { return {x + o.x, y + o.y, z + o.z}; }
    constexpr Vec3 operator-(const Vec3& o) const { return {x - o.x, y - o.y, z - o.z}; }
    constexpr Vec3 operator-() const { return {-x, -y, -z}; }
    constexpr Vec3 operator*(double k) const { return {x * k, y * k, z * k}; }
    constexpr Vec3 operator/(double k) const { return {x / k, y / k, z / k}; }

    constexpr Vec3& operator+=(const Vec3& o) {
        x += o.x;
        y += o.y;
        z += o.z;
        return *this;
    }
    constexpr Vec3& operator-=(const Vec3& o) {
        x -= o.x;
        y -= o.y;
        z -= o.z;
        return *this;
    }
    constexpr Vec3& operator*=(double k) {
        x *= k;
        y *= k;
        z *= k;
        return *this;
    }

    constexpr bool operator==(const Vec3& o) const = default;
};

constexpr Vec3 operator*(double k, const Vec3& v) { return v * k; }

constexpr double dot(const Vec3& a, const Vec3& b) { return a.x * b.x + a.y * b.y + a.z * b.z; }

constexpr Vec3 cross(const Vec3& a, const Vec3& b) {
    return {a.y * b.z - a.z * b.y, a.z * b.x - a.x * b.z, a.x * b.y - a.y * b.x};
}

inline double norm(const Vec3& v) { return std::sqrt(dot(v, v)); }

constexpr double norm_squared(const Vec3& v) { return dot(v, v); }

inline Vec3 normalized(const Vec3& v) { return v / norm(v); }

// Scalar triple product det(a, b, c).
constexpr double triple(const Vec3& a, const Vec3& b, const Vec3& c) { return dot(cross(a, b), c); }

// Largest absolute component, useful for scale-aware tolerances.
inline double max_abs(const Vec3& v) {
    return std::max({std::fabs(v.x), std::fabs(v.y), std::fabs(v.z)});
}

}  // namespace rsh
