#ifndef DENSITYLAB_GEOMETRY_HPP
#define DENSITYLAB_GEOMETRY_HPP

#include <cmath>
#include <cstddef>
#include <stdexcept>
#include <vector>

namespace densitylab {

/// Point in R^3, dimensionless length units.
struct Vec3 {
    double x = 0.0;
    double y = 0.0;
    double z = 0.0;

    double norm_sq() const { return x * x + y * y + z * z; }
    double norm() const { return std::sqrt(norm_sq()); }
    bool finite() const {
        return std::isfinite(x) && std::isfinite(y) && std::isfinite(z);
    }
};

inline Vec3 operator+(Vec3 a, Vec3 b) { return {a.x + b.x, a.y + b.y, a.z + b.z}; }
inline Vec3 operator-(Vec3 a, Vec3 b) { return {a.x - b.x, a.y - b.y, a.z - b.z}; }
inline Vec3 operator*(double s, Vec3 a) { return {s * a.x, s * a.y, s * a.z}; }
inline Vec3 operator*(Vec3 a, double s) { return s * a; }
inline Vec3 operator/(Vec3 a, double s) { return {a.x / s, a.y / s, a.z / s}; }
inline double dot(Vec3 a, Vec3 b) { return a.x * b.x + a.y * b.y + a.z * b.z; }
inline double distance(Vec3 a, Vec3 b) { return (a - b).norm(); }

/// Unit vector a/|a|; caller must keep a away from 0.
inline Vec3 unit(Vec3 a) {
    const double r = a.norm();
    return {a.x / r, a.y / r, a.z / r};
}

/// N electron positions, the argument of psi, F and V.
struct Configuration {
    std::vector<Vec3> positions;

    Configuration() = default;
    explicit Configuration(std::vector<Vec3> p) : positions(std::move(p)) {}

    std::size_t size() const { return positions.size(); }
    Vec3& operator[](std::size_t i) { return positions[i]; }
    const Vec3& operator[](std::size_t i) const { return positions[i]; }

    bool finite() const {
        for (const auto& p : positions)
            if (!p.finite()) return false;
        return true;
    }

    std::vector<double> flat() const {
        std::vector<double> out;
        out.reserve(3 * positions.size());
        for (const auto& p : positions) {
            out.push_back(p.x);
            out.push_back(p.y);
            out.push_back(p.z);
        }
        return out;
    }

    static Configuration from_flat(const std::vector<double>& v) {
        if (v.size() % 3 != 0)
            throw std::invalid_argument("flat coordinate vector length must be a multiple of 3");
        Configuration c;
        c.positions.reserve(v.size() / 3);
        for (std::size_t i = 0; i < v.size(); i += 3)
            c.positions.push_back({v[i], v[i + 1], v[i + 2]});
        return c;
    }
};

/// Gradient in R^{3N}, stored as one Vec3 block per electron.
using Gradient3N = std::vector<Vec3>;

inline double norm_sq(const Gradient3N& g) {
    double s = 0.0;
    for (const auto& b : g) s += b.norm_sq();
    return s;
}

inline std::vector<double> flat(const Gradient3N& g) {
    std::vector<double> out;
    out.reserve(3 * g.size());
    for (const auto& b : g) {
        out.push_back(b.x);
        out.push_back(b.y);
        out.push_back(b.z);
    }
    return out;
}

} // namespace densitylab

#endif
