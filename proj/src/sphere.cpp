#include "densitylab/sphere.hpp"

#include <cmath>
#include <numbers>
#include <stdexcept>

#include "densitylab/errors.hpp"
#include "densitylab/gauss.hpp"

namespace densitylab {

SphereRule SphereRule::gauss_product(int polar_points, int azimuth_points) {
    if (polar_points < 1) throw std::invalid_argument("polar_points must be >= 1");
    if (azimuth_points <= 0) azimuth_points = 2 * polar_points;

    SphereRule rule;
    rule.polar_points = polar_points;
    rule.azimuth_points = azimuth_points;
    const auto& gl = gauss_legendre(polar_points);
    const double dphi = 2.0 * std::numbers::pi / azimuth_points;
    rule.nodes.reserve(static_cast<std::size_t>(polar_points) * azimuth_points);
    rule.weights.reserve(rule.nodes.capacity());
    for (int i = 0; i < polar_points; ++i) {
        const double ct = gl.nodes[i];
        const double st = std::sqrt(std::max(0.0, 1.0 - ct * ct));
        for (int j = 0; j < azimuth_points; ++j) {
            const double phi = dphi * (j + 0.5);
            rule.nodes.push_back({st * std::cos(phi), st * std::sin(phi), ct});
            rule.weights.push_back(gl.weights[i] * dphi);
        }
    }
    return rule;
}

void SphereRule::validate() const {
    if (nodes.size() != weights.size() || nodes.empty())
        throw std::invalid_argument("sphere rule has mismatched nodes/weights");
    double total = 0.0;
    for (std::size_t i = 0; i < nodes.size(); ++i) {
        if (std::abs(nodes[i].norm() - 1.0) > 1e-12)
            throw std::invalid_argument("sphere rule node not on the unit sphere");
        if (!(weights[i] > 0.0)) throw std::invalid_argument("sphere rule weight not positive");
        total += weights[i];
    }
    if (std::abs(total - 4.0 * std::numbers::pi) > 1e-12 * 4.0 * std::numbers::pi)
        throw std::invalid_argument("sphere rule weights do not sum to 4*pi");
}

double sphere_average(const std::function<double(const Vec3&)>& f, const SphereRule& rule) {
    double acc = 0.0;
    for (std::size_t i = 0; i < rule.nodes.size(); ++i) {
        const double v = f(rule.nodes[i]);
        if (!std::isfinite(v)) throw NumericError("sphere_average: non-finite node value");
        acc += rule.weights[i] * v;
    }
    return acc;
}

} // namespace densitylab
