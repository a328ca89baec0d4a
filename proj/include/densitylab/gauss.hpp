#ifndef DENSITYLAB_GAUSS_HPP
#define DENSITYLAB_GAUSS_HPP

#include <vector>

namespace densitylab {

struct GaussRule {
    std::vector<double> nodes;   // on [-1, 1]
    std::vector<double> weights; // sum to 2
};

/// Gauss-Legendre rule with n points; results are cached per n.
const GaussRule& gauss_legendre(int n);

} // namespace densitylab

#endif
