#ifndef DENSITYLAB_VARIATIONAL_HPP
#define DENSITYLAB_VARIATIONAL_HPP

#include <functional>
#include <limits>
#include <string>
#include <utility>
#include <vector>

#include "densitylab/estimate.hpp"
#include "densitylab/metropolis.hpp"
#include "densitylab/system.hpp"
#include "densitylab/wavefunction.hpp"

namespace densitylab {

/// A parametrized family of trial wavefunctions with an optional closed-form
/// energy surface. The closed form, when present, must agree with the Monte
/// Carlo Rayleigh quotient (tested, not assumed).
struct TrialFamily {
    std::string name;
    std::vector<std::string> parameter_names;
    std::vector<std::pair<double, double>> box; // per-parameter bounds
    std::function<WavefunctionModel(const std::vector<double>&)> make;
    std::function<double(const std::vector<double>&)> closed_form_energy; // may be empty

    /// exp(-alpha(r1+r2)) trials; E(alpha) = 2 alpha^2 - (2Z - 5/8) alpha,
    /// minimized at alpha* = Z/2 - 5/32 with E* = -2 alpha*^2.
    static TrialFamily product(double Z);
    /// exp(F) trials with the smooth prefactor strength as the parameter.
    static TrialFamily jastrow(double Z);
    /// Zero-parameter family wrapping a fixed model.
    static TrialFamily fixed(const WavefunctionModel& m);

    std::size_t parameter_count() const { return parameter_names.size(); }
    void require_in_box(const std::vector<double>& theta) const;
};

/// <psi, H psi> / <psi, psi>: closed form when the family has one (error 0),
/// otherwise the Monte Carlo average of the local energy under |psi|^2.
EstimateWithError rayleigh_quotient(const TrialFamily& fam, const std::vector<double>& theta,
                                    const MCConfig& mc = {}, bool force_mc = false);

struct OptResult {
    std::vector<double> theta_star;
    double energy_star = 0.0;
    std::vector<std::pair<std::vector<double>, double>> trace;
    bool converged = false;
    long evaluations = 0;
};

/// Derivative-free descent: golden section for one parameter, Nelder-Mead
/// for several. A fixed Monte Carlo seed makes the noisy objective
/// deterministic across evaluations. Budget exhaustion returns the best
/// point so far with converged = false.
OptResult minimize_energy(const TrialFamily& fam, const std::vector<double>& theta0, long budget,
                          const MCConfig& mc = {}, bool force_mc = false,
                          double param_tolerance = 1e-8);

/// eps = E0^{N-1} - E. The (N-1)-electron ground energy defaults to the
/// hydrogenic closed form -Z^2/4 for two-electron atoms and 0 for N = 1;
/// anything else requires an explicit override.
double ionization_gap(double E, const SystemSpec& spec,
                      double ion_energy_override = std::numeric_limits<double>::quiet_NaN());

EigenEstimate make_eigen_estimate(double E, const SystemSpec& spec,
                                  double ion_energy_override =
                                      std::numeric_limits<double>::quiet_NaN());

} // namespace densitylab

#endif
