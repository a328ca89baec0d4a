#ifndef DENSITYLAB_FINITE_DIFF_HPP
#define DENSITYLAB_FINITE_DIFF_HPP

#include <functional>
#include <vector>

namespace densitylab {

/// Central differences with Richardson extrapolation over halved steps.
struct FDScheme {
    double base_step = 1e-3;
    int richardson_levels = 2;

    void validate() const;
};

using ScalarFn = std::function<double(double)>;
using FieldFn = std::function<double(const std::vector<double>&)>;

/// d f / dx by central differences, Richardson extrapolated.
double fd_derivative(const ScalarFn& f, double x, const FDScheme& fd);

/// One-sided 3-point derivative stepping to the right of x; used at the
/// domain boundary r = 0 of radial profiles.
double fd_derivative_forward(const ScalarFn& f, double x, const FDScheme& fd);

/// d^2 f / dx^2 by central differences, Richardson extrapolated.
double fd_second_derivative(const ScalarFn& f, double x, const FDScheme& fd);

/// Laplacian in R^m: sum of second central differences over all coordinates.
double fd_laplacian(const FieldFn& f, const std::vector<double>& x, const FDScheme& fd);

/// Gradient in R^m by central differences per coordinate.
std::vector<double> fd_gradient(const FieldFn& f, const std::vector<double>& x,
                                const FDScheme& fd);

/// Radial Laplacian f'' + (2/r) f' for profile functions on (0, inf).
double fd_radial_laplacian(const ScalarFn& f, double r, const FDScheme& fd);

} // namespace densitylab

#endif
