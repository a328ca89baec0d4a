#ifndef DENSITYLAB_METROPOLIS_HPP
#define DENSITYLAB_METROPOLIS_HPP

#include <cstdint>
#include <functional>
#include <string>
#include <vector>

#include "densitylab/estimate.hpp"
#include "densitylab/geometry.hpp"

namespace densitylab {

struct MCConfig {
    int chain_count = 8;
    long steps_per_chain = 20000;
    long burn_in = 2000;
    double proposal_scale = 1.0;
    std::uint64_t seed = 20260810;

    void validate() const;
    std::string describe() const;
};

using WeightFn = std::function<double(const Configuration&)>;
using ObservableFn = std::function<double(const Configuration&)>;

struct MCExpectation {
    EstimateWithError estimate;
    std::vector<double> chain_means;
    double mean_acceptance = 0.0;
};

/// Markov chains with stationary density proportional to w >= 0. Proposal is
/// an isotropic Gaussian step per electron; the scale is tuned towards ~50%
/// acceptance during burn-in and then frozen. Each chain owns a private
/// sub-seeded generator, so a fixed seed replays bitwise-identically.
/// visit(sample, chain) is called for every post-burn-in sample.
void metropolis_sample(const WeightFn& w, int n_electrons, const MCConfig& mc,
                       const std::function<void(const Configuration&, int)>& visit,
                       double* mean_acceptance = nullptr);

/// Mean of obs over post-burn-in samples, standard error from the
/// between-chain spread. Requires at least 4 chains.
MCExpectation mc_expectation(const WeightFn& w, int n_electrons, const ObservableFn& obs,
                             const MCConfig& mc);

/// Plain importance sampling of int f dx over R^{3N} with the normalized
/// reference density prod_j rate^3/(8 pi) exp(-rate |x_j|). Used as the Monte
/// Carlo oracle for the reduced quadrature and as the general-N density path.
MCExpectation importance_integral_3n(const ObservableFn& f, int n_electrons, double rate,
                                     const MCConfig& mc);

} // namespace densitylab

#endif
