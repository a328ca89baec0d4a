#ifndef DENSITYLAB_DENSITY_HPP
#define DENSITYLAB_DENSITY_HPP

#include <string>
#include <vector>

#include "densitylab/estimate.hpp"
#include "densitylab/geometry.hpp"
#include "densitylab/metropolis.hpp"
#include "densitylab/radial.hpp"
#include "densitylab/reduced.hpp"
#include "densitylab/sphere.hpp"
#include "densitylab/system.hpp"
#include "densitylab/wavefunction.hpp"

namespace densitylab {

struct DensityOptions {
    enum class Method { Auto, Quadrature, MonteCarlo };
    Method method = Method::Auto;
    ReducedQuadratureOptions quad; // decay_rate is always derived from the model
    MCConfig mc;
};

/// rho~ tabulated on a radial grid. Values are unnormalized when the model
/// is; the norm of the model is estimated separately.
struct DensityProfile {
    RadialGrid grid;
    std::vector<EstimateWithError> rho_tilde;
    EstimateWithError at_origin;     // from the r1 = 0 reduced integral, not extrapolated
    EstimateWithError norm_estimate; // integral of rho over R^3

    std::vector<double> values() const;
    std::vector<double> stderrs() const;
};

/// h~ with its component breakdown: one-electron kinetic density, the
/// (H^{N-1} - E) term in quadratic form, and the electron repulsion density.
/// trial_defect is the sphere integral of the local eigenvalue-equation
/// defect, int (E_loc - E) psi^2 dx'; it vanishes for exact eigenpairs and
/// quantifies the trial-systematic offset of every PDE-derived identity.
struct HProfile {
    RadialGrid grid;
    std::vector<EstimateWithError> h_tilde;
    std::vector<EstimateWithError> kinetic;
    std::vector<EstimateWithError> ion;
    std::vector<EstimateWithError> repulsion;
    std::vector<double> trial_defect;
    EstimateWithError at_origin;
    double defect_at_origin = 0.0;
    double energy = 0.0;
    bool exact_eigenfunction = false;

    std::vector<double> values() const;
    std::vector<double> stderrs() const;
};

struct T1Profile {
    RadialGrid grid;
    std::vector<EstimateWithError> t1;
    EstimateWithError at_origin;

    std::vector<double> values() const;
    std::vector<double> stderrs() const;
};

/// The mu/beta/eta/G companions of the curvature formula:
///   mu~(r)  = e^{Zr} rho~(r) - rho~(0)
///   beta    = (h~(0) - (Z^2/2) rho~(0)) / 3
///   eta~(r) = mu~(r) - beta r^2
///   G(r)    = e^{Zr} h~(r) - (Z^2/2) rho~(r) e^{Zr} - 3 beta + 2 Z beta r
///             + Z eta~'(r)
/// and rho~''(0) = Z^2 rho~(0) + 2 beta, which is the same expression as
/// (2/3)(h~(0) + Z^2 rho~(0)) rearranged.
struct CurvatureDecomposition {
    RadialGrid grid;
    double beta = 0.0;
    std::vector<double> mu_tilde;
    std::vector<double> eta_tilde;
    std::vector<double> big_g;
    double rho_second_at_origin = 0.0;
};

struct HPointResult {
    EstimateWithError total;
    EstimateWithError kinetic;
    EstimateWithError ion;
    EstimateWithError repulsion;
    double defect = 0.0;
};

/// One-electron density at x1: |psi|^2 integrated over the other electrons.
/// N = 1 is exact, S-symmetric N = 2 uses the reduced quadrature, Monte Carlo
/// covers the general case (or is forced via options).
EstimateWithError rho_point(const WavefunctionModel& m, const Vec3& x1,
                            const DensityOptions& opt = {});

/// h at x1: the (H^{N-1} - E) expectation in quadratic form, the repulsion
/// density, and the one-electron kinetic density, with their sum.
HPointResult h_point(const WavefunctionModel& m, const SystemSpec& spec, double E,
                     const Vec3& x1, const DensityOptions& opt = {});

/// rho~(r) = unnormalized sphere integral of rho(r omega). For S-symmetric
/// models this equals 4 pi rho(r e_z); the shortcut is verified against the
/// full sphere rule on 3 grid nodes.
DensityProfile rho_tilde_profile(const WavefunctionModel& m, const RadialGrid& grid,
                                 const SphereRule& rule, const DensityOptions& opt = {});

HProfile h_tilde_profile(const WavefunctionModel& m, const SystemSpec& spec, double E,
                         const RadialGrid& grid, const SphereRule& rule,
                         const DensityOptions& opt = {});

/// t1(r): spherically averaged one-electron kinetic density.
T1Profile t1_profile(const WavefunctionModel& m, const RadialGrid& grid, const SphereRule& rule,
                     const DensityOptions& opt = {});

CurvatureDecomposition curvature_decomposition(const DensityProfile& p, const HProfile& hp,
                                               double Z);

/// CSV with header "r,value,stderr"; the first row is the at-origin value.
void write_profile_csv(const std::string& path, const RadialGrid& grid,
                       const std::vector<EstimateWithError>& values,
                       const EstimateWithError& at_origin);

} // namespace densitylab

#endif
