#include "densitylab/wavefunction.hpp"

#include <cmath>
#include <numbers>
#include <stdexcept>

#include "densitylab/errors.hpp"

namespace densitylab {

namespace {

constexpr double kPi = std::numbers::pi;

void check_arity(const WavefunctionModel& m, const Configuration& c) {
    if (static_cast<int>(c.size()) != m.electron_count())
        throw std::invalid_argument(m.name() + " expects " + std::to_string(m.electron_count()) +
                                    " electrons, configuration has " + std::to_string(c.size()));
    if (!c.finite()) throw std::invalid_argument("configuration has non-finite coordinates");
}

void require_positive_radius(double r, const char* what) {
    if (r < kDistanceFloor)
        throw SingularityError(std::string(what) + " at coalescence (distance " +
                               std::to_string(r) + ")");
}

double hydrogenic_ground_c0(double Z) { return std::sqrt(Z * Z * Z / (8.0 * kPi)); }
double hydrogenic_2s_c0(double Z) { return std::sqrt(Z * Z * Z / (64.0 * kPi)); }

// x_hat1 . (x1 - x2)/r12 expressed through the triangle (r1, r2, r12).
// At r1 == 0 the value depends on the approach direction; its spherical
// average vanishes, which is the convention used by the reduced quadrature.
double cos_opening(double r1, double r2, double r12) {
    if (r1 == 0.0) return 0.0;
    return (r1 * r1 - r2 * r2 + r12 * r12) / (2.0 * r1 * r12);
}

double smooth_slope(double r) { return r / std::sqrt(r * r + 1.0); }
double smooth_laplacian(double r) {
    const double q = r * r + 1.0;
    return (2.0 * r * r + 3.0) / (q * std::sqrt(q));
}

struct JastrowGradSq {
    double g1;
    double g2;
};

JastrowGradSq jastrow_grad_sq(const WavefunctionModel& m, double r1, double r2, double r12) {
    const double k1 = 0.5 * m.Z + m.smoothing * smooth_slope(r1);
    const double k2 = 0.5 * m.Z + m.smoothing * smooth_slope(r2);
    const double c1 = cos_opening(r1, r2, r12);
    const double c2 = cos_opening(r2, r1, r12);
    return {k1 * k1 + 1.0 / 16.0 - 0.5 * k1 * c1, k2 * k2 + 1.0 / 16.0 - 0.5 * k2 * c2};
}

double jastrow_exponent(const WavefunctionModel& m, double r1, double r2, double r12) {
    double g = -0.5 * m.Z * (r1 + r2) + 0.25 * r12;
    if (m.smoothing != 0.0)
        g -= m.smoothing * (std::sqrt(r1 * r1 + 1.0) + std::sqrt(r2 * r2 + 1.0));
    return g;
}

} // namespace

WavefunctionModel WavefunctionModel::hydrogenic_ground(double Z) {
    if (!(Z > 0.0)) throw std::invalid_argument("hydrogenic_ground requires Z > 0");
    WavefunctionModel m;
    m.kind = ModelKind::HydrogenicGround;
    m.Z = Z;
    return m;
}

WavefunctionModel WavefunctionModel::hydrogenic_2s(double Z) {
    if (!(Z > 0.0)) throw std::invalid_argument("hydrogenic_2s requires Z > 0");
    WavefunctionModel m;
    m.kind = ModelKind::Hydrogenic2s;
    m.Z = Z;
    return m;
}

WavefunctionModel WavefunctionModel::two_electron_product(double Z, double alpha) {
    if (!(Z > 0.0)) throw std::invalid_argument("two_electron_product requires Z > 0");
    if (!(alpha > 0.0)) throw std::invalid_argument("two_electron_product requires alpha > 0");
    WavefunctionModel m;
    m.kind = ModelKind::TwoElectronProduct;
    m.Z = Z;
    m.alpha = alpha;
    return m;
}

WavefunctionModel WavefunctionModel::two_electron_jastrow(double Z, double smoothing) {
    // The bare Jastrow trial decays like exp(-(Z - 1/2) r) in each electron;
    // Z <= 1/2 would not be square integrable.
    if (!(Z > 0.5)) throw std::invalid_argument("two_electron_jastrow requires Z > 1/2");
    if (smoothing < 0.0) throw std::invalid_argument("smoothing must be >= 0");
    WavefunctionModel m;
    m.kind = ModelKind::TwoElectronJastrow;
    m.Z = Z;
    m.smoothing = smoothing;
    return m;
}

int WavefunctionModel::electron_count() const {
    switch (kind) {
        case ModelKind::HydrogenicGround:
        case ModelKind::Hydrogenic2s: return 1;
        case ModelKind::TwoElectronProduct:
        case ModelKind::TwoElectronJastrow: return 2;
    }
    return 0;
}

bool WavefunctionModel::is_exact_eigenfunction() const {
    return kind == ModelKind::HydrogenicGround || kind == ModelKind::Hydrogenic2s;
}

double WavefunctionModel::exact_energy() const {
    switch (kind) {
        case ModelKind::HydrogenicGround: return -Z * Z / 4.0;
        case ModelKind::Hydrogenic2s: return -Z * Z / 16.0;
        default:
            throw std::invalid_argument(name() + " is a trial function without an exact energy");
    }
}

double WavefunctionModel::density_decay_rate() const {
    switch (kind) {
        case ModelKind::HydrogenicGround: return Z;
        case ModelKind::Hydrogenic2s: return 0.5 * Z;
        case ModelKind::TwoElectronProduct: return 2.0 * alpha;
        case ModelKind::TwoElectronJastrow: return Z - 0.5 + 2.0 * smoothing;
    }
    return 1.0;
}

std::string WavefunctionModel::name() const {
    switch (kind) {
        case ModelKind::HydrogenicGround: return "hydrogenic-ground";
        case ModelKind::Hydrogenic2s: return "hydrogenic-2s";
        case ModelKind::TwoElectronProduct: return "two-electron-product";
        case ModelKind::TwoElectronJastrow: return "two-electron-jastrow";
    }
    return "unknown";
}

std::string WavefunctionModel::describe() const {
    std::string s = name() + ";Z=" + std::to_string(Z);
    if (kind == ModelKind::TwoElectronProduct) s += ";alpha=" + std::to_string(alpha);
    if (kind == ModelKind::TwoElectronJastrow) s += ";smoothing=" + std::to_string(smoothing);
    return s;
}

double evaluate_psi(const WavefunctionModel& m, const Configuration& c) {
    check_arity(m, c);
    switch (m.kind) {
        case ModelKind::HydrogenicGround: {
            const double r = c[0].norm();
            return m.normalization * hydrogenic_ground_c0(m.Z) * std::exp(-0.5 * m.Z * r);
        }
        case ModelKind::Hydrogenic2s: {
            const double r = c[0].norm();
            const double b = 0.25 * m.Z;
            return m.normalization * hydrogenic_2s_c0(m.Z) * (1.0 - b * r) * std::exp(-b * r);
        }
        case ModelKind::TwoElectronProduct: {
            const double s = c[0].norm() + c[1].norm();
            return m.normalization * std::exp(-m.alpha * s);
        }
        case ModelKind::TwoElectronJastrow: {
            const double r1 = c[0].norm();
            const double r2 = c[1].norm();
            const double r12 = distance(c[0], c[1]);
            return m.normalization * std::exp(jastrow_exponent(m, r1, r2, r12));
        }
    }
    return 0.0;
}

Gradient3N evaluate_grad_psi(const WavefunctionModel& m, const Configuration& c) {
    check_arity(m, c);
    switch (m.kind) {
        case ModelKind::HydrogenicGround: {
            const double r = c[0].norm();
            require_positive_radius(r, "hydrogenic gradient");
            const double psi = evaluate_psi(m, c);
            return {(-0.5 * m.Z * psi / r) * c[0]};
        }
        case ModelKind::Hydrogenic2s: {
            const double r = c[0].norm();
            require_positive_radius(r, "hydrogenic gradient");
            const double b = 0.25 * m.Z;
            const double radial =
                m.normalization * hydrogenic_2s_c0(m.Z) * std::exp(-b * r) * (-2.0 * b + b * b * r);
            return {(radial / r) * c[0]};
        }
        case ModelKind::TwoElectronProduct: {
            const double r1 = c[0].norm();
            const double r2 = c[1].norm();
            require_positive_radius(r1, "product gradient");
            require_positive_radius(r2, "product gradient");
            const double psi = evaluate_psi(m, c);
            return {(-m.alpha * psi / r1) * c[0], (-m.alpha * psi / r2) * c[1]};
        }
        case ModelKind::TwoElectronJastrow: {
            const double r1 = c[0].norm();
            const double r2 = c[1].norm();
            const double r12 = distance(c[0], c[1]);
            require_positive_radius(r1, "Jastrow gradient");
            require_positive_radius(r2, "Jastrow gradient");
            require_positive_radius(r12, "Jastrow gradient");
            const double psi = evaluate_psi(m, c);
            const Vec3 u12 = (c[0] - c[1]) / r12;
            const double k1 = 0.5 * m.Z + m.smoothing * smooth_slope(r1);
            const double k2 = 0.5 * m.Z + m.smoothing * smooth_slope(r2);
            const Vec3 g1 = (-k1 / r1) * c[0] + 0.25 * u12;
            const Vec3 g2 = (-k2 / r2) * c[1] + (-0.25) * u12;
            return {psi * g1, psi * g2};
        }
    }
    return {};
}

double evaluate_laplacian_psi(const WavefunctionModel& m, const Configuration& c) {
    check_arity(m, c);
    switch (m.kind) {
        case ModelKind::HydrogenicGround: {
            const double r = c[0].norm();
            require_positive_radius(r, "hydrogenic laplacian");
            const double lam = 0.5 * m.Z;
            return (lam * lam - 2.0 * lam / r) * evaluate_psi(m, c);
        }
        case ModelKind::Hydrogenic2s: {
            const double r = c[0].norm();
            require_positive_radius(r, "hydrogenic laplacian");
            const double b = 0.25 * m.Z;
            const double lam = b;
            const double shell =
                4.0 * lam * b + lam * lam - lam * lam * b * r - (2.0 * b + 2.0 * lam) / r;
            return m.normalization * hydrogenic_2s_c0(m.Z) * std::exp(-lam * r) * shell;
        }
        case ModelKind::TwoElectronProduct: {
            const double r1 = c[0].norm();
            const double r2 = c[1].norm();
            require_positive_radius(r1, "product laplacian");
            require_positive_radius(r2, "product laplacian");
            const double a = m.alpha;
            return (2.0 * a * a - 2.0 * a / r1 - 2.0 * a / r2) * evaluate_psi(m, c);
        }
        case ModelKind::TwoElectronJastrow: {
            const double r1 = c[0].norm();
            const double r2 = c[1].norm();
            const double r12 = distance(c[0], c[1]);
            require_positive_radius(r1, "Jastrow laplacian");
            require_positive_radius(r2, "Jastrow laplacian");
            require_positive_radius(r12, "Jastrow laplacian");
            const auto gsq = jastrow_grad_sq(m, r1, r2, r12);
            // Delta G = Delta F + Delta log prefactor, and Delta F = V.
            double lap_g = -m.Z / r1 - m.Z / r2 + 1.0 / r12;
            lap_g -= m.smoothing * (smooth_laplacian(r1) + smooth_laplacian(r2));
            return (gsq.g1 + gsq.g2 + lap_g) * evaluate_psi(m, c);
        }
    }
    return 0.0;
}

double local_energy(const WavefunctionModel& m, const SystemSpec& spec, const Configuration& c,
                    double psi_floor) {
    check_arity(m, c);
    if (static_cast<int>(c.size()) != spec.electron_count)
        throw std::invalid_argument("configuration does not match the system spec");

    const bool matched_atom =
        spec.is_atom() && spec.nuclei.front().position.norm() == 0.0 &&
        spec.atomic_Z() == m.Z && spec.electron_count == m.electron_count();

    const double psi = evaluate_psi(m, c);
    if (std::abs(psi) < psi_floor * std::abs(m.normalization))
        throw NodeError("local_energy at a node: |psi| = " + std::to_string(std::abs(psi)));

    if (!matched_atom) {
        // Generic composition; exact cancellations are lost, so expect O(eps/r)
        // noise near the singularities.
        return (-evaluate_laplacian_psi(m, c) + potential_V(spec, c) * psi) / psi;
    }

    // Grouped closed forms: the 1/r terms cancel exactly in floating point.
    switch (m.kind) {
        case ModelKind::HydrogenicGround: {
            const double r = c[0].norm();
            require_positive_radius(r, "local energy");
            const double lam = 0.5 * m.Z;
            return -lam * lam + (2.0 * lam - m.Z) / r;
        }
        case ModelKind::Hydrogenic2s: {
            const double r = c[0].norm();
            require_positive_radius(r, "local energy");
            const double b = 0.25 * m.Z;
            const double lam = b;
            const double u = 1.0 - b * r;
            const double num = (m.Z - 4.0 * lam) * b + (2.0 * b + 2.0 * lam - m.Z) / r +
                               lam * lam * (b * r - 1.0);
            return num / u;
        }
        case ModelKind::TwoElectronProduct: {
            const double r1 = c[0].norm();
            const double r2 = c[1].norm();
            const double r12 = distance(c[0], c[1]);
            require_positive_radius(r1, "local energy");
            require_positive_radius(r2, "local energy");
            require_positive_radius(r12, "local energy");
            const double a = m.alpha;
            return -2.0 * a * a + (2.0 * a - m.Z) * (1.0 / r1 + 1.0 / r2) + 1.0 / r12;
        }
        case ModelKind::TwoElectronJastrow: {
            const double r1 = c[0].norm();
            const double r2 = c[1].norm();
            const double r12 = distance(c[0], c[1]);
            require_positive_radius(r1, "local energy");
            require_positive_radius(r2, "local energy");
            require_positive_radius(r12, "local energy");
            return local_energy_radial(m, r1, r2, r12);
        }
    }
    return 0.0;
}

bool has_radial_kernels(const WavefunctionModel& m) {
    return m.kind == ModelKind::TwoElectronProduct || m.kind == ModelKind::TwoElectronJastrow;
}

double psi_sq_radial(const WavefunctionModel& m, double r1, double r2, double r12) {
    const double n2 = m.normalization * m.normalization;
    switch (m.kind) {
        case ModelKind::TwoElectronProduct:
            return n2 * std::exp(-2.0 * m.alpha * (r1 + r2));
        case ModelKind::TwoElectronJastrow:
            return n2 * std::exp(2.0 * jastrow_exponent(m, r1, r2, r12));
        default: throw std::invalid_argument(m.name() + " has no two-electron radial kernels");
    }
}

double grad1_sq_radial(const WavefunctionModel& m, double r1, double r2, double r12) {
    switch (m.kind) {
        case ModelKind::TwoElectronProduct:
            return m.alpha * m.alpha * psi_sq_radial(m, r1, r2, r12);
        case ModelKind::TwoElectronJastrow:
            return jastrow_grad_sq(m, r1, r2, r12).g1 * psi_sq_radial(m, r1, r2, r12);
        default: throw std::invalid_argument(m.name() + " has no two-electron radial kernels");
    }
}

double grad2_sq_radial(const WavefunctionModel& m, double r1, double r2, double r12) {
    switch (m.kind) {
        case ModelKind::TwoElectronProduct:
            return m.alpha * m.alpha * psi_sq_radial(m, r1, r2, r12);
        case ModelKind::TwoElectronJastrow:
            return jastrow_grad_sq(m, r1, r2, r12).g2 * psi_sq_radial(m, r1, r2, r12);
        default: throw std::invalid_argument(m.name() + " has no two-electron radial kernels");
    }
}

double local_energy_radial(const WavefunctionModel& m, double r1, double r2, double r12) {
    switch (m.kind) {
        case ModelKind::TwoElectronProduct: {
            const double a = m.alpha;
            return -2.0 * a * a + (2.0 * a - m.Z) * (1.0 / r1 + 1.0 / r2) + 1.0 / r12;
        }
        case ModelKind::TwoElectronJastrow: {
            const auto gsq = jastrow_grad_sq(m, r1, r2, r12);
            double e = -gsq.g1 - gsq.g2;
            if (m.smoothing != 0.0)
                e += m.smoothing * (smooth_laplacian(r1) + smooth_laplacian(r2));
            return e;
        }
        default: throw std::invalid_argument(m.name() + " has no two-electron radial kernels");
    }
}

} // namespace densitylab
