#include "densitylab/finite_diff.hpp"

#include <array>
#include <cmath>
#include <stdexcept>

namespace densitylab {

void FDScheme::validate() const {
    if (!(base_step > 0.0)) throw std::invalid_argument("FD base step must be positive");
    if (richardson_levels < 1 || richardson_levels > 4)
        throw std::invalid_argument("richardson_levels must be in [1, 4]");
}

namespace {

// Richardson tableau for an O(h^p) base rule under step halving.
template <class Rule>
double richardson(const Rule& rule, double h, int levels, int base_order) {
    std::array<double, 5> row{};
    std::array<double, 5> prev{};
    for (int i = 0; i < levels; ++i) {
        prev = row;
        row[0] = rule(h / (1 << i));
        double factor = 1.0;
        for (int j = 1; j <= i; ++j) {
            factor *= static_cast<double>(1 << base_order);
            row[j] = row[j - 1] + (row[j - 1] - prev[j - 1]) / (factor - 1.0);
        }
    }
    return row[levels - 1];
}

} // namespace

double fd_derivative(const ScalarFn& f, double x, const FDScheme& fd) {
    fd.validate();
    auto rule = [&](double h) { return (f(x + h) - f(x - h)) / (2.0 * h); };
    return richardson(rule, fd.base_step, fd.richardson_levels, 2);
}

double fd_derivative_forward(const ScalarFn& f, double x, const FDScheme& fd) {
    fd.validate();
    auto rule = [&](double h) {
        return (-3.0 * f(x) + 4.0 * f(x + h) - f(x + 2.0 * h)) / (2.0 * h);
    };
    return richardson(rule, fd.base_step, fd.richardson_levels, 2);
}

double fd_second_derivative(const ScalarFn& f, double x, const FDScheme& fd) {
    fd.validate();
    auto rule = [&](double h) { return (f(x + h) - 2.0 * f(x) + f(x - h)) / (h * h); };
    return richardson(rule, fd.base_step, fd.richardson_levels, 2);
}

double fd_laplacian(const FieldFn& f, const std::vector<double>& x, const FDScheme& fd) {
    fd.validate();
    const double f0 = f(x);
    auto rule = [&](double h) {
        double acc = 0.0;
        std::vector<double> y = x;
        for (std::size_t i = 0; i < x.size(); ++i) {
            y[i] = x[i] + h;
            const double fp = f(y);
            y[i] = x[i] - h;
            const double fm = f(y);
            y[i] = x[i];
            acc += (fp - 2.0 * f0 + fm) / (h * h);
        }
        return acc;
    };
    return richardson(rule, fd.base_step, fd.richardson_levels, 2);
}

std::vector<double> fd_gradient(const FieldFn& f, const std::vector<double>& x,
                                const FDScheme& fd) {
    fd.validate();
    std::vector<double> g(x.size());
    std::vector<double> y = x;
    for (std::size_t i = 0; i < x.size(); ++i) {
        auto rule = [&](double h) {
            y[i] = x[i] + h;
            const double fp = f(y);
            y[i] = x[i] - h;
            const double fm = f(y);
            y[i] = x[i];
            return (fp - fm) / (2.0 * h);
        };
        g[i] = richardson(rule, fd.base_step, fd.richardson_levels, 2);
    }
    return g;
}

double fd_radial_laplacian(const ScalarFn& f, double r, const FDScheme& fd) {
    if (!(r > 0.0)) throw std::invalid_argument("radial Laplacian requires r > 0");
    return fd_second_derivative(f, r, fd) + 2.0 / r * fd_derivative(f, r, fd);
}

} // namespace densitylab
