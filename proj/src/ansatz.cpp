#include "densitylab/ansatz.hpp"

#include <cmath>
#include <stdexcept>

#include "densitylab/errors.hpp"

namespace densitylab {

namespace {

void check_arity(const SystemSpec& spec, const Configuration& c) {
    if (static_cast<int>(c.size()) != spec.electron_count)
        throw std::invalid_argument("configuration does not match the system spec");
}

double smooth_abs(double r_sq) { return std::sqrt(r_sq + 1.0); }

void require_stencil_clearance(const SystemSpec& spec, const Configuration& c, double h) {
    if (min_pair_distance(spec, c) <= 2.0 * h)
        throw SingularityError("FD stencil overlaps a coalescence point");
}

} // namespace

double eval_F(const SystemSpec& spec, const Configuration& c) {
    check_arity(spec, c);
    double f = 0.0;
    for (std::size_t j = 0; j < c.size(); ++j) {
        for (const auto& nuc : spec.nuclei) f -= 0.5 * nuc.charge * distance(c[j], nuc.position);
        for (std::size_t k = j + 1; k < c.size(); ++k) f += 0.25 * distance(c[j], c[k]);
    }
    return f;
}

Gradient3N eval_grad_F(const SystemSpec& spec, const Configuration& c) {
    check_arity(spec, c);
    Gradient3N g(c.size());
    for (std::size_t j = 0; j < c.size(); ++j) {
        for (const auto& nuc : spec.nuclei) {
            const Vec3 d = c[j] - nuc.position;
            const double r = d.norm();
            if (r < kDistanceFloor)
                throw SingularityError("grad F undefined at an electron-nucleus coalescence");
            g[j] = g[j] + (-0.5 * nuc.charge / r) * d;
        }
        for (std::size_t k = 0; k < c.size(); ++k) {
            if (k == j) continue;
            const Vec3 d = c[j] - c[k];
            const double r = d.norm();
            if (r < kDistanceFloor)
                throw SingularityError("grad F undefined at an electron-electron coalescence");
            g[j] = g[j] + (0.25 / r) * d;
        }
    }
    return g;
}

std::pair<double, Gradient3N> eval_F1_and_grad(const SystemSpec& spec, const Configuration& c) {
    check_arity(spec, c);
    double f = 0.0;
    Gradient3N g(c.size());
    for (std::size_t j = 0; j < c.size(); ++j) {
        for (const auto& nuc : spec.nuclei) {
            const Vec3 d = c[j] - nuc.position;
            const double s = smooth_abs(d.norm_sq());
            f -= 0.5 * nuc.charge * s;
            g[j] = g[j] + (-0.5 * nuc.charge / s) * d;
        }
        for (std::size_t k = j + 1; k < c.size(); ++k) {
            const Vec3 d = c[j] - c[k];
            const double s = smooth_abs(d.norm_sq());
            f += 0.25 * s;
            g[j] = g[j] + (0.25 / s) * d;
            g[k] = g[k] + (-0.25 / s) * d;
        }
    }
    return {f, g};
}

double eval_F1_laplacian(const SystemSpec& spec, const Configuration& c) {
    check_arity(spec, c);
    auto block = [](double r_sq) {
        const double q = r_sq + 1.0;
        return (2.0 * r_sq + 3.0) / (q * std::sqrt(q));
    };
    double lap = 0.0;
    for (std::size_t j = 0; j < c.size(); ++j) {
        for (const auto& nuc : spec.nuclei)
            lap -= 0.5 * nuc.charge * block((c[j] - nuc.position).norm_sq());
        // Each pair term contributes via both electron blocks.
        for (std::size_t k = j + 1; k < c.size(); ++k)
            lap += 0.5 * block((c[j] - c[k]).norm_sq());
    }
    return lap;
}

AnsatzFactors eval_ansatz_factors(const SystemSpec& spec, const Configuration& c) {
    AnsatzFactors out;
    out.F = eval_F(spec, c);
    out.grad_F = eval_grad_F(spec, c);
    auto [f1, g1] = eval_F1_and_grad(spec, c);
    out.F1 = f1;
    out.grad_F1 = std::move(g1);
    return out;
}

double eval_phi(const WavefunctionModel& m, const SystemSpec& spec, const Configuration& c,
                double exponent_cap) {
    const double f = eval_F(spec, c);
    if (-f > exponent_cap)
        throw NumericError("eval_phi: exponent " + std::to_string(-f) + " exceeds the cap");
    return std::exp(-f) * evaluate_psi(m, c);
}

Gradient3N eval_grad_phi(const WavefunctionModel& m, const SystemSpec& spec,
                         const Configuration& c) {
    const double f = eval_F(spec, c);
    const double psi = evaluate_psi(m, c);
    const auto grad_psi = evaluate_grad_psi(m, c);
    const auto grad_f = eval_grad_F(spec, c);
    const double e = std::exp(-f);
    Gradient3N g(c.size());
    for (std::size_t j = 0; j < c.size(); ++j) g[j] = e * (grad_psi[j] - psi * grad_f[j]);
    return g;
}

double eval_psi1(const WavefunctionModel& m, const SystemSpec& spec, const Configuration& c,
                 double exponent_cap) {
    const double f = eval_F(spec, c);
    const double f1 = eval_F1_and_grad(spec, c).first;
    if (std::abs(f1 - f) > exponent_cap)
        throw NumericError("eval_psi1: exponent exceeds the cap");
    return std::exp(f1 - f) * evaluate_psi(m, c);
}

double check_delta_F_equals_V(const SystemSpec& spec, const Configuration& c,
                              const FDScheme& fd) {
    fd.validate();
    require_stencil_clearance(spec, c, fd.base_step);
    const double v = potential_V(spec, c);
    auto f_flat = [&](const std::vector<double>& x) {
        return eval_F(spec, Configuration::from_flat(x));
    };
    const double lap = fd_laplacian(f_flat, c.flat(), fd);
    return std::abs(lap - v) / std::max(1.0, std::abs(v));
}

double elliptic_residual_psi1(const WavefunctionModel& m, const SystemSpec& spec, double E,
                              const Configuration& c, const FDScheme& fd) {
    fd.validate();
    require_stencil_clearance(spec, c, fd.base_step);

    const auto factors = eval_ansatz_factors(spec, c);
    auto psi1_flat = [&](const std::vector<double>& x) {
        return eval_psi1(m, spec, Configuration::from_flat(x));
    };
    const auto flat_c = c.flat();
    const double psi1 = eval_psi1(m, spec, c);
    const double lap = fd_laplacian(psi1_flat, flat_c, fd);
    const auto grad = fd_gradient(psi1_flat, flat_c, fd);

    double drift = 0.0;
    double grad_diff_sq = 0.0;
    for (std::size_t j = 0; j < c.size(); ++j) {
        const Vec3 d = factors.grad_F[j] - factors.grad_F1[j];
        drift += d.x * grad[3 * j] + d.y * grad[3 * j + 1] + d.z * grad[3 * j + 2];
        grad_diff_sq += d.norm_sq();
    }
    const double lap_f1 = eval_F1_laplacian(spec, c);
    return lap + 2.0 * drift + (grad_diff_sq - lap_f1 + E) * psi1;
}

} // namespace densitylab
