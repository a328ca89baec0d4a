#include "densitylab/density.hpp"

#include <cmath>
#include <cstdio>
#include <fstream>
#include <numbers>
#include <stdexcept>

#include "densitylab/errors.hpp"

namespace densitylab {

namespace {

constexpr double k4Pi = 4.0 * std::numbers::pi;

std::vector<double> extract_values(const std::vector<EstimateWithError>& v) {
    std::vector<double> out(v.size());
    for (std::size_t i = 0; i < v.size(); ++i) out[i] = v[i].value;
    return out;
}

std::vector<double> extract_stderrs(const std::vector<EstimateWithError>& v) {
    std::vector<double> out(v.size());
    for (std::size_t i = 0; i < v.size(); ++i) out[i] = v[i].stderr_;
    return out;
}

ReducedQuadratureOptions quad_for(const WavefunctionModel& m, const DensityOptions& opt) {
    ReducedQuadratureOptions q = opt.quad;
    q.decay_rate = m.density_decay_rate();
    return q;
}

bool use_quadrature(const WavefunctionModel& m, const DensityOptions& opt) {
    if (opt.method == DensityOptions::Method::MonteCarlo) return false;
    return has_radial_kernels(m);
}

// Radial derivative of the hydrogenic variants, squared: |grad psi|^2 as a
// function of r alone; finite at r = 0 unlike the gradient itself.
double hydrogenic_dpsi_sq(const WavefunctionModel& m, double r) {
    const Configuration c{{Vec3{0.0, 0.0, r}}};
    if (m.kind == ModelKind::HydrogenicGround) {
        const double lam = 0.5 * m.Z;
        const double psi = evaluate_psi(m, c);
        return lam * lam * psi * psi;
    }
    const double b = 0.25 * m.Z;
    const double c0 = std::sqrt(m.Z * m.Z * m.Z / (64.0 * std::numbers::pi));
    const double d = m.normalization * c0 * std::exp(-b * r) * (-2.0 * b + b * b * r);
    return d * d;
}

// int_0^inf f(r) dr with the same geometric-panel + exponential-tail scheme
// as the reduced quadrature; used for the nested norm integral.
double radial_integral(const std::function<double(double)>& f, double decay, int points = 24) {
    const double r_tail = 40.0 / decay;
    std::vector<double> edges{0.0};
    for (double e = 0.25 / decay; e < r_tail; e *= 2.0) edges.push_back(e);
    edges.push_back(r_tail);
    const auto& gl = gauss_legendre(points);
    double acc = 0.0;
    for (std::size_t i = 0; i + 1 < edges.size(); ++i) {
        const double half = 0.5 * (edges[i + 1] - edges[i]);
        const double mid = 0.5 * (edges[i + 1] + edges[i]);
        for (int k = 0; k < points; ++k) acc += half * gl.weights[k] * f(mid + half * gl.nodes[k]);
    }
    const double gamma_hat = 0.7 * decay;
    for (int k = 0; k < points; ++k) {
        const double v = 0.5 * (gl.nodes[k] + 1.0);
        if (v <= 0.0) continue;
        acc += 0.5 * gl.weights[k] * f(r_tail - std::log(v) / gamma_hat) / (gamma_hat * v);
    }
    return acc;
}

void require_matching_atom(const WavefunctionModel& m, const SystemSpec& spec) {
    if (!spec.is_atom() || spec.nuclei.front().position.norm() != 0.0)
        throw std::invalid_argument("h requires an atom with the nucleus at the origin");
    if (spec.atomic_Z() != m.Z || spec.electron_count != m.electron_count())
        throw std::invalid_argument("system spec does not match the wavefunction model");
}

EstimateWithError rho_mc(const WavefunctionModel& m, const Vec3& x1, const DensityOptions& opt) {
    const double rate = 0.75 * m.density_decay_rate();
    auto f = [&](const Configuration& rest) {
        Configuration full;
        full.positions.reserve(rest.size() + 1);
        full.positions.push_back(x1);
        for (const auto& p : rest.positions) full.positions.push_back(p);
        const double psi = evaluate_psi(m, full);
        return psi * psi;
    };
    return importance_integral_3n(f, m.electron_count() - 1, rate, opt.mc).estimate;
}

} // namespace

std::vector<double> DensityProfile::values() const { return extract_values(rho_tilde); }
std::vector<double> DensityProfile::stderrs() const { return extract_stderrs(rho_tilde); }
std::vector<double> HProfile::values() const { return extract_values(h_tilde); }
std::vector<double> HProfile::stderrs() const { return extract_stderrs(h_tilde); }
std::vector<double> T1Profile::values() const { return extract_values(t1); }
std::vector<double> T1Profile::stderrs() const { return extract_stderrs(t1); }

EstimateWithError rho_point(const WavefunctionModel& m, const Vec3& x1,
                            const DensityOptions& opt) {
    if (m.electron_count() == 1) {
        const double psi = evaluate_psi(m, Configuration{{x1}});
        return EstimateWithError::exact(psi * psi);
    }
    if (use_quadrature(m, opt)) {
        auto kernel = [&](double r1, double r2, double r12) {
            return psi_sq_radial(m, r1, r2, r12);
        };
        return reduced_two_electron_integral(kernel, x1.norm(), quad_for(m, opt));
    }
    return rho_mc(m, x1, opt);
}

HPointResult h_point(const WavefunctionModel& m, const SystemSpec& spec, double E,
                     const Vec3& x1, const DensityOptions& opt) {
    require_matching_atom(m, spec);
    HPointResult out;

    if (m.electron_count() == 1) {
        const double r = x1.norm();
        const double psi = evaluate_psi(m, Configuration{{x1}});
        out.kinetic = EstimateWithError::exact(hydrogenic_dpsi_sq(m, r));
        out.ion = EstimateWithError::exact(-E * psi * psi); // (H^0 - E) collapses to -E psi^2
        out.repulsion = EstimateWithError::exact(0.0);
        out.total = EstimateWithError::exact(out.kinetic.value + out.ion.value);
        // (H - E) psi = (E_exact - E) psi for the hydrogenic closed forms.
        out.defect = (m.exact_energy() - E) * psi * psi;
        return out;
    }

    const double Z = m.Z;
    if (use_quadrature(m, opt)) {
        const auto q = quad_for(m, opt);
        const double r1 = x1.norm();
        auto kin = [&](double a, double b, double c) { return grad1_sq_radial(m, a, b, c); };
        auto ion = [&](double a, double b, double c) {
            const double p2 = psi_sq_radial(m, a, b, c);
            return grad2_sq_radial(m, a, b, c) + (-Z / b - E) * p2;
        };
        auto rep = [&](double a, double b, double c) { return psi_sq_radial(m, a, b, c) / c; };
        auto tot = [&](double a, double b, double c) { return kin(a, b, c) + ion(a, b, c) + rep(a, b, c); };
        auto def = [&](double a, double b, double c) {
            return (local_energy_radial(m, a, b, c) - E) * psi_sq_radial(m, a, b, c);
        };
        out.kinetic = reduced_two_electron_integral(kin, r1, q);
        out.ion = reduced_two_electron_integral(ion, r1, q);
        out.repulsion = reduced_two_electron_integral(rep, r1, q);
        out.total = reduced_two_electron_integral(tot, r1, q);
        out.defect = reduced_two_electron_integral(def, r1, q).value;
        return out;
    }

    const double rate = 0.75 * m.density_decay_rate();
    auto with_x1 = [&](const Configuration& rest) {
        Configuration full;
        full.positions.push_back(x1);
        full.positions.push_back(rest[0]);
        return full;
    };
    auto kin = [&](const Configuration& rest) {
        return evaluate_grad_psi(m, with_x1(rest))[0].norm_sq();
    };
    auto ion = [&](const Configuration& rest) {
        const auto full = with_x1(rest);
        const double psi = evaluate_psi(m, full);
        const double r2 = rest[0].norm();
        return evaluate_grad_psi(m, full)[1].norm_sq() + (-Z / r2 - E) * psi * psi;
    };
    auto rep = [&](const Configuration& rest) {
        const auto full = with_x1(rest);
        const double psi = evaluate_psi(m, full);
        return psi * psi / distance(full[0], full[1]);
    };
    auto def = [&](const Configuration& rest) {
        const auto full = with_x1(rest);
        const double psi = evaluate_psi(m, full);
        return (local_energy(m, spec, full) - E) * psi * psi;
    };
    const MCConfig& mc = opt.mc;
    out.kinetic = importance_integral_3n(kin, 1, rate, mc).estimate;
    MCConfig mc2 = mc;
    mc2.seed = mc.seed + 1;
    out.ion = importance_integral_3n(ion, 1, rate, mc2).estimate;
    MCConfig mc3 = mc;
    mc3.seed = mc.seed + 2;
    out.repulsion = importance_integral_3n(rep, 1, rate, mc3).estimate;
    MCConfig mc4 = mc;
    mc4.seed = mc.seed + 3;
    out.defect = importance_integral_3n(def, 1, rate, mc4).estimate.value;
    out.total = combined_sum(combined_sum(out.kinetic, out.ion), out.repulsion);
    return out;
}

namespace {

// rho(r omega) is direction independent for all S-symmetric variants; the
// profile builders rely on rho~(r) = 4 pi rho(r e_z). This verifies the
// shortcut against the full sphere rule at a few nodes using a cheap
// quadrature so that a non-symmetric model cannot slip through silently.
void verify_s_symmetry_shortcut(const WavefunctionModel& m, const RadialGrid& grid,
                                const SphereRule& rule, const DensityOptions& opt) {
    DensityOptions cheap = opt;
    cheap.quad.outer_points = 8;
    cheap.quad.inner_points = 16;
    cheap.mc.steps_per_chain = std::min<long>(cheap.mc.steps_per_chain, 500);
    cheap.mc.burn_in = 0;
    const std::size_t idx[3] = {0, grid.size() / 2, grid.size() - 1};
    for (const std::size_t i : idx) {
        const double r = grid.nodes[i];
        auto f = [&](const Vec3& omega) { return rho_point(m, r * omega, cheap).value; };
        const double full = sphere_average(f, rule);
        const double shortcut = k4Pi * rho_point(m, Vec3{0.0, 0.0, r}, cheap).value;
        const double scale = std::max(std::abs(full), std::abs(shortcut));
        if (scale > 0.0 && std::abs(full - shortcut) > 1e-8 * scale)
            throw NumericError("spherical-average shortcut failed verification at r = " +
                               std::to_string(r));
    }
}

EstimateWithError model_norm(const WavefunctionModel& m, const DensityOptions& opt) {
    if (m.electron_count() == 1) {
        // The hydrogenic closed forms carry unit L2 norm by construction.
        return EstimateWithError::exact(m.normalization * m.normalization);
    }
    if (use_quadrature(m, opt)) {
        auto rho_r = [&](double r) {
            auto kernel = [&](double a, double b, double c) { return psi_sq_radial(m, a, b, c); };
            return k4Pi * r * r *
                   reduced_two_electron_integral(kernel, r, quad_for(m, opt)).value;
        };
        const double coarse = radial_integral(rho_r, m.density_decay_rate(), 16);
        const double fine = radial_integral(rho_r, m.density_decay_rate(), 24);
        return {fine, std::abs(fine - coarse), EstimateMethod::Quadrature};
    }
    auto f = [&](const Configuration& c) {
        const double psi = evaluate_psi(m, c);
        return psi * psi;
    };
    return importance_integral_3n(f, m.electron_count(), 0.75 * m.density_decay_rate(), opt.mc)
        .estimate;
}

} // namespace

DensityProfile rho_tilde_profile(const WavefunctionModel& m, const RadialGrid& grid,
                                 const SphereRule& rule, const DensityOptions& opt) {
    grid.validate();
    rule.validate();
    if (!grid.covers_decay(m.density_decay_rate()))
        throw std::invalid_argument("grid r_max " + std::to_string(grid.r_max()) +
                                    " too short for density decay rate " +
                                    std::to_string(m.density_decay_rate()));
    verify_s_symmetry_shortcut(m, grid, rule, opt);

    DensityProfile p;
    p.grid = grid;
    p.rho_tilde.reserve(grid.size());
    for (const double r : grid.nodes)
        p.rho_tilde.push_back(scaled(rho_point(m, Vec3{0.0, 0.0, r}, opt), k4Pi));
    p.at_origin = scaled(rho_point(m, Vec3{}, opt), k4Pi);
    p.norm_estimate = model_norm(m, opt);
    return p;
}

HProfile h_tilde_profile(const WavefunctionModel& m, const SystemSpec& spec, double E,
                         const RadialGrid& grid, const SphereRule& rule,
                         const DensityOptions& opt) {
    grid.validate();
    rule.validate();
    require_matching_atom(m, spec);

    HProfile hp;
    hp.grid = grid;
    hp.energy = E;
    hp.exact_eigenfunction = m.is_exact_eigenfunction();
    hp.h_tilde.reserve(grid.size());
    for (const double r : grid.nodes) {
        const auto res = h_point(m, spec, E, Vec3{0.0, 0.0, r}, opt);
        hp.h_tilde.push_back(scaled(res.total, k4Pi));
        hp.kinetic.push_back(scaled(res.kinetic, k4Pi));
        hp.ion.push_back(scaled(res.ion, k4Pi));
        hp.repulsion.push_back(scaled(res.repulsion, k4Pi));
        hp.trial_defect.push_back(k4Pi * res.defect);
    }
    const auto origin = h_point(m, spec, E, Vec3{}, opt);
    hp.at_origin = scaled(origin.total, k4Pi);
    hp.defect_at_origin = k4Pi * origin.defect;
    return hp;
}

T1Profile t1_profile(const WavefunctionModel& m, const RadialGrid& grid, const SphereRule& rule,
                     const DensityOptions& opt) {
    grid.validate();
    rule.validate();

    T1Profile t;
    t.grid = grid;
    t.t1.reserve(grid.size());
    auto kinetic_at = [&](double r) -> EstimateWithError {
        if (m.electron_count() == 1)
            return EstimateWithError::exact(hydrogenic_dpsi_sq(m, r));
        if (use_quadrature(m, opt)) {
            auto kin = [&](double a, double b, double c) { return grad1_sq_radial(m, a, b, c); };
            return reduced_two_electron_integral(kin, r, quad_for(m, opt));
        }
        const Vec3 x1{0.0, 0.0, r};
        auto f = [&](const Configuration& rest) {
            Configuration full;
            full.positions.push_back(x1);
            full.positions.push_back(rest[0]);
            return evaluate_grad_psi(m, full)[0].norm_sq();
        };
        return importance_integral_3n(f, 1, 0.75 * m.density_decay_rate(), opt.mc).estimate;
    };
    for (const double r : grid.nodes) t.t1.push_back(scaled(kinetic_at(r), k4Pi));
    t.at_origin = scaled(kinetic_at(0.0), k4Pi);
    return t;
}

CurvatureDecomposition curvature_decomposition(const DensityProfile& p, const HProfile& hp,
                                               double Z) {
    if (!p.grid.same_as(hp.grid))
        throw std::invalid_argument("curvature_decomposition: profiles on different grids");

    CurvatureDecomposition d;
    d.grid = p.grid;
    const double rho0 = p.at_origin.value;
    const double h0 = hp.at_origin.value;
    d.beta = (h0 - 0.5 * Z * Z * rho0) / 3.0;

    const std::size_t n = p.grid.size();
    d.mu_tilde.resize(n);
    d.eta_tilde.resize(n);
    d.big_g.resize(n);
    for (std::size_t i = 0; i < n; ++i) {
        const double r = p.grid.nodes[i];
        const double boost = std::exp(Z * r);
        d.mu_tilde[i] = boost * p.rho_tilde[i].value - rho0;
        d.eta_tilde[i] = d.mu_tilde[i] - d.beta * r * r;
    }
    for (std::size_t i = 0; i < n; ++i) {
        const double r = p.grid.nodes[i];
        const double boost = std::exp(Z * r);
        const double eta_prime =
            profile_local_fit(p.grid.nodes, d.eta_tilde, nullptr, r, 4, 5).first;
        d.big_g[i] = boost * hp.h_tilde[i].value - 0.5 * Z * Z * p.rho_tilde[i].value * boost -
                     3.0 * d.beta + 2.0 * Z * d.beta * r + Z * eta_prime;
    }
    d.rho_second_at_origin = Z * Z * rho0 + 2.0 * d.beta;
    return d;
}

void write_profile_csv(const std::string& path, const RadialGrid& grid,
                       const std::vector<EstimateWithError>& values,
                       const EstimateWithError& at_origin) {
    std::ofstream out(path);
    if (!out) throw std::runtime_error("cannot open " + path + " for writing");
    char line[128];
    out << "r,value,stderr\n";
    std::snprintf(line, sizeof(line), "%.17g,%.17g,%.17g\n", 0.0, at_origin.value,
                  at_origin.stderr_);
    out << line;
    for (std::size_t i = 0; i < grid.size(); ++i) {
        std::snprintf(line, sizeof(line), "%.17g,%.17g,%.17g\n", grid.nodes[i], values[i].value,
                      values[i].stderr_);
        out << line;
    }
}

} // namespace densitylab
