#include "densitylab/variational.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

namespace densitylab {

TrialFamily TrialFamily::product(double Z) {
    TrialFamily f;
    f.name = "product";
    f.parameter_names = {"alpha"};
    f.box = {{0.05, 3.0}};
    f.make = [Z](const std::vector<double>& theta) {
        return WavefunctionModel::two_electron_product(Z, theta.at(0));
    };
    f.closed_form_energy = [Z](const std::vector<double>& theta) {
        const double a = theta.at(0);
        return 2.0 * a * a - (2.0 * Z - 0.625) * a;
    };
    return f;
}

TrialFamily TrialFamily::jastrow(double Z) {
    TrialFamily f;
    f.name = "jastrow";
    f.parameter_names = {"smoothing"};
    f.box = {{0.0, 2.0}};
    f.make = [Z](const std::vector<double>& theta) {
        return WavefunctionModel::two_electron_jastrow(Z, theta.at(0));
    };
    return f;
}

TrialFamily TrialFamily::fixed(const WavefunctionModel& m) {
    TrialFamily f;
    f.name = m.name();
    f.make = [m](const std::vector<double>&) { return m; };
    if (m.is_exact_eigenfunction()) {
        const double e = m.exact_energy();
        f.closed_form_energy = [e](const std::vector<double>&) { return e; };
    }
    return f;
}

void TrialFamily::require_in_box(const std::vector<double>& theta) const {
    if (theta.size() != parameter_count())
        throw std::invalid_argument("expected " + std::to_string(parameter_count()) +
                                    " parameters, got " + std::to_string(theta.size()));
    for (std::size_t i = 0; i < theta.size(); ++i)
        if (theta[i] < box[i].first || theta[i] > box[i].second)
            throw std::invalid_argument("parameter " + parameter_names[i] +
                                        " outside its box");
}

EstimateWithError rayleigh_quotient(const TrialFamily& fam, const std::vector<double>& theta,
                                    const MCConfig& mc, bool force_mc) {
    fam.require_in_box(theta);
    if (fam.closed_form_energy && !force_mc)
        return EstimateWithError::exact(fam.closed_form_energy(theta));

    const WavefunctionModel m = fam.make(theta);
    const SystemSpec spec = SystemSpec::atom(m.Z, m.electron_count());
    auto weight = [&](const Configuration& c) {
        const double psi = evaluate_psi(m, c);
        return psi * psi;
    };
    auto obs = [&](const Configuration& c) { return local_energy(m, spec, c); };
    return mc_expectation(weight, m.electron_count(), obs, mc).estimate;
}

namespace {

struct Objective {
    const TrialFamily& fam;
    const MCConfig& mc;
    bool force_mc;
    OptResult& result;

    double operator()(const std::vector<double>& theta) {
        const double e = rayleigh_quotient(fam, theta, mc, force_mc).value;
        result.trace.emplace_back(theta, e);
        ++result.evaluations;
        return e;
    }
};

OptResult golden_section(const TrialFamily& fam, long budget, const MCConfig& mc, bool force_mc,
                         double tol) {
    OptResult result;
    Objective f{fam, mc, force_mc, result};
    const double inv_phi = 2.0 / (1.0 + std::sqrt(5.0));

    double a = fam.box[0].first;
    double b = fam.box[0].second;
    double u = b - inv_phi * (b - a);
    double v = a + inv_phi * (b - a);
    double fu = f({u});
    double fv = f({v});

    while (result.evaluations < budget && (b - a) > tol) {
        if (fu <= fv) {
            b = v;
            v = u;
            fv = fu;
            u = b - inv_phi * (b - a);
            fu = f({u});
        } else {
            a = u;
            u = v;
            fu = fv;
            v = a + inv_phi * (b - a);
            fv = f({v});
        }
    }
    const double x = fu <= fv ? u : v;
    result.theta_star = {x};
    result.energy_star = std::min(fu, fv);
    result.converged = (b - a) <= tol;
    return result;
}

OptResult nelder_mead(const TrialFamily& fam, const std::vector<double>& theta0, long budget,
                      const MCConfig& mc, bool force_mc, double tol) {
    OptResult result;
    Objective f{fam, mc, force_mc, result};
    const std::size_t n = theta0.size();

    auto clamp = [&](std::vector<double> t) {
        for (std::size_t i = 0; i < n; ++i)
            t[i] = std::clamp(t[i], fam.box[i].first, fam.box[i].second);
        return t;
    };

    std::vector<std::vector<double>> pts(n + 1, theta0);
    for (std::size_t i = 0; i < n; ++i) {
        const double span = fam.box[i].second - fam.box[i].first;
        pts[i + 1][i] = std::clamp(theta0[i] + 0.1 * span, fam.box[i].first, fam.box[i].second);
        if (pts[i + 1][i] == theta0[i]) pts[i + 1][i] = theta0[i] - 0.1 * span;
        pts[i + 1] = clamp(pts[i + 1]);
    }
    std::vector<double> vals(n + 1);
    for (std::size_t i = 0; i <= n; ++i) vals[i] = f(pts[i]);

    while (result.evaluations < budget) {
        std::vector<std::size_t> order(n + 1);
        for (std::size_t i = 0; i <= n; ++i) order[i] = i;
        std::sort(order.begin(), order.end(),
                  [&](std::size_t a, std::size_t b) { return vals[a] < vals[b]; });

        double spread = 0.0;
        for (std::size_t i = 0; i < n; ++i)
            spread = std::max(spread, std::abs(pts[order[0]][i] - pts[order[n]][i]));
        if (spread < tol) {
            result.converged = true;
            break;
        }

        std::vector<double> centroid(n, 0.0);
        for (std::size_t i = 0; i < n; ++i) {
            for (std::size_t k = 0; k < n; ++k) centroid[k] += pts[order[i]][k];
        }
        for (auto& c : centroid) c /= n;

        auto blend = [&](double t) {
            std::vector<double> p(n);
            for (std::size_t k = 0; k < n; ++k)
                p[k] = centroid[k] + t * (centroid[k] - pts[order[n]][k]);
            return clamp(p);
        };

        const auto reflected = blend(1.0);
        const double fr = f(reflected);
        if (fr < vals[order[0]]) {
            const auto expanded = blend(2.0);
            const double fe = f(expanded);
            if (fe < fr) {
                pts[order[n]] = expanded;
                vals[order[n]] = fe;
            } else {
                pts[order[n]] = reflected;
                vals[order[n]] = fr;
            }
        } else if (fr < vals[order[n - 1]]) {
            pts[order[n]] = reflected;
            vals[order[n]] = fr;
        } else {
            const auto contracted = blend(-0.5);
            const double fc = f(contracted);
            if (fc < vals[order[n]]) {
                pts[order[n]] = contracted;
                vals[order[n]] = fc;
            } else {
                for (std::size_t i = 1; i <= n; ++i) {
                    for (std::size_t k = 0; k < n; ++k)
                        pts[order[i]][k] = 0.5 * (pts[order[i]][k] + pts[order[0]][k]);
                    vals[order[i]] = f(pts[order[i]]);
                }
            }
        }
    }

    std::size_t best = 0;
    for (std::size_t i = 1; i <= n; ++i)
        if (vals[i] < vals[best]) best = i;
    result.theta_star = pts[best];
    result.energy_star = vals[best];
    return result;
}

} // namespace

OptResult minimize_energy(const TrialFamily& fam, const std::vector<double>& theta0, long budget,
                          const MCConfig& mc, bool force_mc, double param_tolerance) {
    if (budget <= 0) throw std::invalid_argument("budget must be positive");
    fam.require_in_box(theta0);

    if (fam.parameter_count() == 0) {
        OptResult r;
        r.theta_star = theta0;
        r.energy_star = rayleigh_quotient(fam, theta0, mc, force_mc).value;
        r.trace.emplace_back(theta0, r.energy_star);
        r.evaluations = 1;
        r.converged = true;
        return r;
    }
    if (fam.parameter_count() == 1)
        return golden_section(fam, budget, mc, force_mc, param_tolerance);
    return nelder_mead(fam, theta0, budget, mc, force_mc, param_tolerance);
}

double ionization_gap(double E, const SystemSpec& spec, double ion_energy_override) {
    if (std::isfinite(ion_energy_override)) return ion_energy_override - E;
    if (spec.electron_count == 1) return 0.0 - E;
    if (spec.electron_count == 2 && spec.is_atom()) {
        const double Z = spec.atomic_Z();
        return -Z * Z / 4.0 - E;
    }
    throw std::invalid_argument(
        "ionization_gap: supply the (N-1)-electron ground energy explicitly for N > 2 "
        "or molecular systems");
}

EigenEstimate make_eigen_estimate(double E, const SystemSpec& spec, double ion_energy_override) {
    EigenEstimate e;
    e.energy = E;
    e.gap = ionization_gap(E, spec, ion_energy_override);
    e.ion_energy = E + e.gap;
    return e;
}

} // namespace densitylab
