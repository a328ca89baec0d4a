#ifndef DENSITYLAB_ESTIMATE_HPP
#define DENSITYLAB_ESTIMATE_HPP

#include <cmath>
#include <string>

namespace densitylab {

enum class EstimateMethod { Quadrature, MonteCarlo };

/// A scalar numeric result with a standard-error bar. Quadrature estimates
/// carry a truncation bound (possibly 0), Monte Carlo estimates a
/// between-chain standard error.
struct EstimateWithError {
    double value = 0.0;
    double stderr_ = 0.0;
    EstimateMethod method = EstimateMethod::Quadrature;

    static EstimateWithError exact(double v) {
        return {v, 0.0, EstimateMethod::Quadrature};
    }
};

inline const char* method_name(EstimateMethod m) {
    return m == EstimateMethod::Quadrature ? "quadrature" : "mc";
}

inline EstimateWithError scaled(const EstimateWithError& e, double s) {
    return {s * e.value, std::abs(s) * e.stderr_, e.method};
}

/// Sum of independent estimates; errors combine in quadrature.
inline EstimateWithError combined_sum(const EstimateWithError& a, const EstimateWithError& b) {
    const auto method = (a.method == EstimateMethod::MonteCarlo ||
                         b.method == EstimateMethod::MonteCarlo)
                            ? EstimateMethod::MonteCarlo
                            : EstimateMethod::Quadrature;
    return {a.value + b.value, std::hypot(a.stderr_, b.stderr_), method};
}

} // namespace densitylab

#endif
