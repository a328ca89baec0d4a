#ifndef DENSITYLAB_WAVEFUNCTION_HPP
#define DENSITYLAB_WAVEFUNCTION_HPP

#include <string>

#include "densitylab/geometry.hpp"
#include "densitylab/system.hpp"

namespace densitylab {

// Energy convention throughout: H = -Delta + V, i.e. no 1/2 on the kinetic
// term. Hydrogenic levels are E_n = -Z^2/(4 n^2), half the Hartree values.

enum class ModelKind {
    HydrogenicGround,   // c0 exp(-Z r / 2), normalized, E = -Z^2/4
    Hydrogenic2s,       // c (1 - Z r/4) exp(-Z r/4), normalized, E = -Z^2/16
    TwoElectronProduct, // exp(-alpha (r1 + r2)), unnormalized trial
    TwoElectronJastrow, // exp(F) * smooth prefactor, unnormalized trial
};

/// A concrete evaluable wavefunction with analytic gradient and Laplacian.
/// Models are immutable values; all evaluation routines are pure.
struct WavefunctionModel {
    ModelKind kind = ModelKind::HydrogenicGround;
    double Z = 1.0;
    double alpha = 0.0;     // product-trial orbital exponent
    double smoothing = 0.0; // Jastrow prefactor exp(-smoothing * sum_j sqrt(|x_j|^2+1))
    double normalization = 1.0;

    static WavefunctionModel hydrogenic_ground(double Z);
    static WavefunctionModel hydrogenic_2s(double Z);
    static WavefunctionModel two_electron_product(double Z, double alpha);
    static WavefunctionModel two_electron_jastrow(double Z, double smoothing = 0.0);

    int electron_count() const;
    bool is_exact_eigenfunction() const;
    /// Exact eigenvalue for the hydrogenic variants; throws otherwise.
    double exact_energy() const;
    /// Decay rate gamma of the one-electron density rho ~ exp(-gamma r).
    double density_decay_rate() const;
    std::string name() const;
    std::string describe() const;
};

double evaluate_psi(const WavefunctionModel& m, const Configuration& c);

/// Analytic gradient in R^{3N}. Throws SingularityError at coalescence
/// points where the closed form is undefined.
Gradient3N evaluate_grad_psi(const WavefunctionModel& m, const Configuration& c);

double evaluate_laplacian_psi(const WavefunctionModel& m, const Configuration& c);

/// (-Delta psi + V psi) / psi, written in cancellation-safe grouped form per
/// variant. Constant in c exactly when psi is an exact eigenfunction.
double local_energy(const WavefunctionModel& m, const SystemSpec& spec, const Configuration& c,
                    double psi_floor = 1e-12);

// ---------------------------------------------------------------------------
// S-symmetric two-electron fast path: for the two-electron variants every
// rotationally invariant density (psi^2, |grad_1 psi|^2, local energy, ...)
// is a function of (r1, r2, r12) alone, which feeds the reduced quadrature.
// At r1 == 0 exactly, terms linear in the approach direction are evaluated at
// their angular average (they integrate to zero over the sphere).
// ---------------------------------------------------------------------------

bool has_radial_kernels(const WavefunctionModel& m);
double psi_sq_radial(const WavefunctionModel& m, double r1, double r2, double r12);
double grad1_sq_radial(const WavefunctionModel& m, double r1, double r2, double r12);
double grad2_sq_radial(const WavefunctionModel& m, double r1, double r2, double r12);
double local_energy_radial(const WavefunctionModel& m, double r1, double r2, double r12);

} // namespace densitylab

#endif
