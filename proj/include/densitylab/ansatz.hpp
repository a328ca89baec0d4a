#ifndef DENSITYLAB_ANSATZ_HPP
#define DENSITYLAB_ANSATZ_HPP

#include <utility>

#include "densitylab/finite_diff.hpp"
#include "densitylab/geometry.hpp"
#include "densitylab/system.hpp"
#include "densitylab/wavefunction.hpp"

namespace densitylab {

inline constexpr double kExponentCap = 700.0;

/// F and its smooth companion F1 evaluated at one configuration.
/// F - F1 and grad(F - F1) are bounded uniformly; grad F1 is finite
/// everywhere.
struct AnsatzFactors {
    double F = 0.0;
    double F1 = 0.0;
    Gradient3N grad_F;
    Gradient3N grad_F1;
};

/// F = sum_j sum_l -(Z_l/2)|x_j - R_l| + sum_{j<k} |x_j - x_k|/4.
/// Continuous everywhere; satisfies Delta F = V away from coalescences,
/// which is the defining property (tested, since the multi-nucleus form is
/// the natural generalization rather than a quoted formula).
double eval_F(const SystemSpec& spec, const Configuration& c);

/// Gradient of F; throws SingularityError at coalescence points.
Gradient3N eval_grad_F(const SystemSpec& spec, const Configuration& c);

/// F1 replaces each |y| in F by sqrt(|y|^2 + 1); smooth everywhere.
std::pair<double, Gradient3N> eval_F1_and_grad(const SystemSpec& spec, const Configuration& c);

double eval_F1_laplacian(const SystemSpec& spec, const Configuration& c);

AnsatzFactors eval_ansatz_factors(const SystemSpec& spec, const Configuration& c);

/// phi = exp(-F) psi; constant for HydrogenicGround, identically the smooth
/// prefactor for TwoElectronJastrow.
double eval_phi(const WavefunctionModel& m, const SystemSpec& spec, const Configuration& c,
                double exponent_cap = kExponentCap);

/// Analytic gradient of phi: exp(-F) (grad psi - psi grad F).
Gradient3N eval_grad_phi(const WavefunctionModel& m, const SystemSpec& spec,
                         const Configuration& c);

/// psi1 = exp(F1 - F) psi.
double eval_psi1(const WavefunctionModel& m, const SystemSpec& spec, const Configuration& c,
                 double exponent_cap = kExponentCap);

/// |Delta_FD F - V| / max(1, |V|); vanishes to FD accuracy since Delta F = V
/// exactly. Throws SingularityError when the stencil would cross a
/// coalescence.
double check_delta_F_equals_V(const SystemSpec& spec, const Configuration& c,
                              const FDScheme& fd);

/// Residual of the elliptic equation satisfied by psi1,
///   Delta psi1 + 2 grad(F - F1) . grad psi1
///     + (|grad(F - F1)|^2 - Delta F1 + E) psi1 = 0,
/// with analytic coefficients and FD derivatives of psi1. Near zero for
/// exact eigenpairs (m, E); order-one near coalescences for trial functions.
double elliptic_residual_psi1(const WavefunctionModel& m, const SystemSpec& spec, double E,
                              const Configuration& c, const FDScheme& fd);

} // namespace densitylab

#endif
