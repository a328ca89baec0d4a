#ifndef DENSITYLAB_REDUCED_HPP
#define DENSITYLAB_REDUCED_HPP

#include <algorithm>
#include <cmath>
#include <numbers>
#include <vector>

#include "densitylab/errors.hpp"
#include "densitylab/estimate.hpp"
#include "densitylab/gauss.hpp"

namespace densitylab {

/// Controls for the exact dimension reduction of integrals over x2 for
/// S-symmetric kernels g(r1, r2, r12):
///
///   int_{R^3} g dx2 = (2 pi / r1) int_0^inf r2 dr2
///                      int_{|r1-r2|}^{r1+r2} r12 g dr12,
///
/// with the r1 = 0 limit 4 pi int r2^2 g(0, r2, r2) dr2. The outer integral
/// uses geometric Gauss-Legendre panels (an edge is pinned at r2 = r1 where
/// the inner result has a derivative kink) plus an exponential substitution
/// for the tail; the inner integral is a single Gauss-Legendre rule.
struct ReducedQuadratureOptions {
    int outer_points = 16;          // GL points per r2 panel
    int inner_points = 64;          // GL points for the r12 integral
    double decay_rate = 1.0;        // kernel decay: g ~ exp(-decay_rate * r2)
    double panel_growth = 2.0;      // geometric growth of panel widths
    double first_panel = 0.25;      // first edge, in units of 1/decay_rate
    double tail_span = 40.0;        // panels cover r1 + tail_span/decay_rate
    double tail_check_tolerance = 1e-6;
};

namespace detail {

template <class Kernel>
double inner_r12(Kernel& g, double r1, double r2, int n_points) {
    const auto& gl = gauss_legendre(n_points);
    const double lo = std::abs(r1 - r2);
    const double hi = r1 + r2;
    const double half = 0.5 * (hi - lo);
    const double mid = 0.5 * (hi + lo);
    double acc = 0.0;
    for (int i = 0; i < n_points; ++i) {
        const double r12 = mid + half * gl.nodes[i];
        acc += gl.weights[i] * r12 * g(r1, r2, r12);
    }
    return acc * half;
}

template <class Kernel>
double outer_integrand(Kernel& g, double r1, double r2, int inner_points) {
    if (r1 == 0.0) return 4.0 * std::numbers::pi * r2 * r2 * g(0.0, r2, r2);
    return (2.0 * std::numbers::pi / r1) * r2 * inner_r12(g, r1, r2, inner_points);
}

template <class Kernel>
double segment(Kernel& g, double r1, double a, double b, int outer_points, int inner_points) {
    const auto& gl = gauss_legendre(outer_points);
    const double half = 0.5 * (b - a);
    const double mid = 0.5 * (b + a);
    double acc = 0.0;
    for (int i = 0; i < outer_points; ++i) {
        const double r2 = mid + half * gl.nodes[i];
        acc += gl.weights[i] * outer_integrand(g, r1, r2, inner_points);
    }
    return acc * half;
}

// Tail r2 in [r_tail, inf) via v = exp(-gamma_hat (r2 - r_tail)).
template <class Kernel>
double tail(Kernel& g, double r1, double r_tail, double gamma_hat, int outer_points,
            int inner_points) {
    const auto& gl = gauss_legendre(outer_points);
    double acc = 0.0;
    for (int i = 0; i < outer_points; ++i) {
        const double v = 0.5 * (gl.nodes[i] + 1.0);
        if (v <= 0.0) continue;
        const double r2 = r_tail - std::log(v) / gamma_hat;
        acc += 0.5 * gl.weights[i] * outer_integrand(g, r1, r2, inner_points) / (gamma_hat * v);
    }
    return acc;
}

struct ReducedRun {
    double total = 0.0;
    double last_decade = 0.0; // contribution of [r_tail/10, r_tail] plus the tail map
};

template <class Kernel>
ReducedRun run_reduced(Kernel& g, double r1, const ReducedQuadratureOptions& opt,
                       int outer_points) {
    const double gamma = opt.decay_rate;
    const double r_tail = r1 + opt.tail_span / gamma;
    std::vector<double> edges{0.0};
    double w = opt.first_panel / gamma;
    for (double e = w; e < r_tail; e *= opt.panel_growth) edges.push_back(e);
    edges.push_back(r_tail);
    if (r1 > 0.0 && r1 < r_tail) edges.push_back(r1);
    std::sort(edges.begin(), edges.end());
    edges.erase(std::unique(edges.begin(), edges.end()), edges.end());

    ReducedRun run;
    for (std::size_t i = 0; i + 1 < edges.size(); ++i) {
        const double s = segment(g, r1, edges[i], edges[i + 1], outer_points, opt.inner_points);
        run.total += s;
        if (edges[i] >= r_tail / 10.0) run.last_decade += std::abs(s);
    }
    const double t = tail(g, r1, r_tail, 0.7 * gamma, outer_points, opt.inner_points);
    run.total += t;
    run.last_decade += std::abs(t);
    return run;
}

} // namespace detail

/// Exact dimension reduction of int_{R^3} g(r1, r2, r12) dx2 for kernels
/// depending on x2 only through r2 and r12. Returns the fine-grid value with
/// a coarse-vs-fine truncation estimate as the error bar. Throws NumericError
/// when the last decade of the radial range still contributes noticeably
/// (non-convergent tail).
template <class Kernel>
EstimateWithError reduced_two_electron_integral(Kernel&& g, double r1,
                                                const ReducedQuadratureOptions& opt = {}) {
    if (r1 < 0.0) throw std::invalid_argument("r1 must be nonnegative");
    if (!(opt.decay_rate > 0.0)) throw std::invalid_argument("decay_rate must be positive");

    const auto fine = detail::run_reduced(g, r1, opt, opt.outer_points);
    const auto coarse = detail::run_reduced(g, r1, opt, std::max(6, opt.outer_points / 2));

    const double scale = std::max(std::abs(fine.total), 1e-300);
    if (fine.last_decade > opt.tail_check_tolerance * scale)
        throw NumericError("reduced integral: non-convergent tail (last decade contributes " +
                           std::to_string(fine.last_decade / scale) + " of the total)");

    EstimateWithError est;
    est.value = fine.total;
    est.stderr_ = std::abs(fine.total - coarse.total);
    est.method = EstimateMethod::Quadrature;
    return est;
}

} // namespace densitylab

#endif
