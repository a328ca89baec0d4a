#ifndef DENSITYLAB_SPHERE_HPP
#define DENSITYLAB_SPHERE_HPP

#include <functional>
#include <vector>

#include "densitylab/geometry.hpp"

namespace densitylab {

/// Quadrature rule on the unit sphere with total measure 4*pi
/// (the unnormalized convention of the sphere integrals used throughout).
struct SphereRule {
    std::vector<Vec3> nodes;
    std::vector<double> weights;
    int polar_points = 0;
    int azimuth_points = 0;

    /// Product rule: Gauss-Legendre in cos(theta) x uniform azimuth.
    /// azimuth_points defaults to 2 * polar_points.
    static SphereRule gauss_product(int polar_points, int azimuth_points = 0);

    void validate() const;
};

/// Integral of f over the unit sphere: sum w_i f(omega_i); total measure
/// 4*pi, not 1. Throws NumericError on a non-finite node value.
double sphere_average(const std::function<double(const Vec3&)>& f, const SphereRule& rule);

} // namespace densitylab

#endif
