#ifndef DENSITYLAB_RADIAL_HPP
#define DENSITYLAB_RADIAL_HPP

#include <string>
#include <vector>

namespace densitylab {

/// Strictly increasing radial nodes; geometric spacing resolves both the
/// cusp region near r = 0 and the exponential tail.
struct RadialGrid {
    std::vector<double> nodes;

    static RadialGrid geometric(double r_min, double r_max, int count);

    void validate() const;
    double r_max() const { return nodes.empty() ? 0.0 : nodes.back(); }
    double r_min() const { return nodes.empty() ? 0.0 : nodes.front(); }
    std::size_t size() const { return nodes.size(); }
    bool same_as(const RadialGrid& other) const;
    /// True when r_max >= 10 / decay_rate, so the tail truncation error of a
    /// profile decaying like exp(-decay_rate * r) is negligible.
    bool covers_decay(double decay_rate) const;
    std::string describe() const;
};

/// Value and derivatives of a tabulated profile at r0, from a least-squares
/// local polynomial through the nearest nodes. The fit is linear in the data,
/// so node error bars propagate exactly through the fit weights.
struct LocalFit {
    double value = 0.0;
    double first = 0.0;
    double second = 0.0;
    double err_value = 0.0;
    double err_first = 0.0;
    double err_second = 0.0;
};

/// degree+1 <= stencil <= number of nodes; stencil = degree+1 interpolates.
LocalFit profile_local_fit(const std::vector<double>& r, const std::vector<double>& v,
                           const std::vector<double>* stderrs, double r0, int degree = 4,
                           int stencil = 5);

/// integral of v(r) r^2 dr over [0, inf): piecewise local cubics on the grid,
/// a constant-value head below the first node and a fitted exponential tail.
double integrate_profile_r2(const std::vector<double>& r, const std::vector<double>& v);

/// Ordinary least squares for y ~ polynomial of given degree in x.
/// Returns coefficients c0..c_degree (ascending powers).
std::vector<double> polyfit(const std::vector<double>& x, const std::vector<double>& y,
                            int degree);

} // namespace densitylab

#endif
