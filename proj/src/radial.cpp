#include "densitylab/radial.hpp"

#include <algorithm>
#include <cmath>
#include <sstream>
#include <stdexcept>

namespace densitylab {

RadialGrid RadialGrid::geometric(double r_min, double r_max, int count) {
    if (!(r_min > 0.0) || !(r_max > r_min))
        throw std::invalid_argument("geometric grid requires 0 < r_min < r_max");
    if (count < 2) throw std::invalid_argument("grid needs at least 2 nodes");
    RadialGrid g;
    g.nodes.resize(count);
    const double q = std::log(r_max / r_min) / (count - 1);
    for (int i = 0; i < count; ++i) g.nodes[i] = r_min * std::exp(q * i);
    g.nodes.back() = r_max;
    return g;
}

void RadialGrid::validate() const {
    if (nodes.size() < 2) throw std::invalid_argument("grid needs at least 2 nodes");
    if (nodes.front() < 0.0) throw std::invalid_argument("grid nodes must be nonnegative");
    for (std::size_t i = 1; i < nodes.size(); ++i)
        if (!(nodes[i] > nodes[i - 1]))
            throw std::invalid_argument("grid nodes must be strictly increasing");
}

bool RadialGrid::same_as(const RadialGrid& other) const { return nodes == other.nodes; }

bool RadialGrid::covers_decay(double decay_rate) const {
    return decay_rate > 0.0 && r_max() >= 10.0 / decay_rate;
}

std::string RadialGrid::describe() const {
    std::ostringstream os;
    os << "geometric(" << r_min() << "," << r_max() << "," << size() << ")";
    return os.str();
}

namespace {

// Gaussian elimination with partial pivoting; sizes here are at most 8x8.
std::vector<double> solve_dense(std::vector<std::vector<double>> a, std::vector<double> b) {
    const std::size_t n = b.size();
    for (std::size_t col = 0; col < n; ++col) {
        std::size_t pivot = col;
        for (std::size_t row = col + 1; row < n; ++row)
            if (std::abs(a[row][col]) > std::abs(a[pivot][col])) pivot = row;
        std::swap(a[col], a[pivot]);
        std::swap(b[col], b[pivot]);
        if (a[col][col] == 0.0) throw std::runtime_error("singular normal equations");
        for (std::size_t row = col + 1; row < n; ++row) {
            const double f = a[row][col] / a[col][col];
            for (std::size_t k = col; k < n; ++k) a[row][k] -= f * a[col][k];
            b[row] -= f * b[col];
        }
    }
    std::vector<double> x(n);
    for (std::size_t i = n; i-- > 0;) {
        double s = b[i];
        for (std::size_t k = i + 1; k < n; ++k) s -= a[i][k] * x[k];
        x[i] = s / a[i][i];
    }
    return x;
}

// Row k of (X^T X)^{-1} X^T: the weights mapping data values to coefficient k.
std::vector<std::vector<double>> fit_weights(const std::vector<double>& t, int degree) {
    const std::size_t n = t.size();
    const std::size_t p = degree + 1;
    std::vector<std::vector<double>> xt(p, std::vector<double>(n));
    for (std::size_t i = 0; i < n; ++i) {
        double pw = 1.0;
        for (std::size_t k = 0; k < p; ++k) {
            xt[k][i] = pw;
            pw *= t[i];
        }
    }
    std::vector<std::vector<double>> gram(p, std::vector<double>(p, 0.0));
    for (std::size_t a = 0; a < p; ++a)
        for (std::size_t b = 0; b < p; ++b)
            for (std::size_t i = 0; i < n; ++i) gram[a][b] += xt[a][i] * xt[b][i];

    std::vector<std::vector<double>> w(p, std::vector<double>(n));
    // Solve gram * w_col = xt_col for each data index.
    for (std::size_t i = 0; i < n; ++i) {
        std::vector<double> rhs(p);
        for (std::size_t k = 0; k < p; ++k) rhs[k] = xt[k][i];
        const auto col = solve_dense(gram, rhs);
        for (std::size_t k = 0; k < p; ++k) w[k][i] = col[k];
    }
    return w;
}

} // namespace

LocalFit profile_local_fit(const std::vector<double>& r, const std::vector<double>& v,
                           const std::vector<double>* stderrs, double r0, int degree,
                           int stencil) {
    if (r.size() != v.size() || r.empty())
        throw std::invalid_argument("profile arrays must be non-empty and of equal size");
    if (degree < 1 || stencil < degree + 1)
        throw std::invalid_argument("stencil must hold at least degree+1 nodes");
    stencil = std::min<int>(stencil, static_cast<int>(r.size()));
    if (stencil < degree + 1) throw std::invalid_argument("not enough nodes for requested degree");

    const auto it = std::lower_bound(r.begin(), r.end(), r0);
    long center = it - r.begin();
    if (center > 0 &&
        (center == static_cast<long>(r.size()) || r0 - r[center - 1] < r[center] - r0))
        --center;
    long lo = center - stencil / 2;
    lo = std::max(0L, std::min(lo, static_cast<long>(r.size()) - stencil));

    std::vector<double> t(stencil);
    double scale = 0.0;
    for (int i = 0; i < stencil; ++i) scale = std::max(scale, std::abs(r[lo + i] - r0));
    if (scale == 0.0) scale = 1.0;
    for (int i = 0; i < stencil; ++i) t[i] = (r[lo + i] - r0) / scale;

    const auto w = fit_weights(t, degree);
    LocalFit fit;
    double c0 = 0.0, c1 = 0.0, c2 = 0.0;
    double e0 = 0.0, e1 = 0.0, e2 = 0.0;
    for (int i = 0; i < stencil; ++i) {
        const double vi = v[lo + i];
        c0 += w[0][i] * vi;
        if (degree >= 1) c1 += w[1][i] * vi;
        if (degree >= 2) c2 += w[2][i] * vi;
        if (stderrs) {
            const double s = (*stderrs)[lo + i];
            e0 += w[0][i] * w[0][i] * s * s;
            if (degree >= 1) e1 += w[1][i] * w[1][i] * s * s;
            if (degree >= 2) e2 += w[2][i] * w[2][i] * s * s;
        }
    }
    fit.value = c0;
    fit.first = c1 / scale;
    fit.second = 2.0 * c2 / (scale * scale);
    fit.err_value = std::sqrt(e0);
    fit.err_first = std::sqrt(e1) / scale;
    fit.err_second = 2.0 * std::sqrt(e2) / (scale * scale);
    return fit;
}

double integrate_profile_r2(const std::vector<double>& r, const std::vector<double>& v) {
    if (r.size() != v.size() || r.size() < 4)
        throw std::invalid_argument("need at least 4 nodes to integrate a profile");
    const std::size_t n = r.size();

    double total = 0.0;
    // Head: below the first node treat v as constant (the profiles have a
    // finite limit at r = 0 and r^2 suppresses the region).
    total += v.front() * r.front() * r.front() * r.front() / 3.0;

    // Piecewise local cubic through 4 nodes, integrated against r^2 exactly.
    for (std::size_t i = 0; i + 1 < n; ++i) {
        std::size_t lo = (i == 0) ? 0 : (i + 2 < n ? i - 1 : n - 4);
        std::vector<double> xs(4), ys(4);
        for (int k = 0; k < 4; ++k) {
            xs[k] = r[lo + k];
            ys[k] = v[lo + k];
        }
        const double mid = r[i];
        for (auto& x : xs) x -= mid;
        const auto coef = polyfit(xs, ys, 3);
        const double a = r[i] - mid, b = r[i + 1] - mid;
        double seg = 0.0;
        for (int k = 0; k <= 3; ++k) {
            // integral of c_k (x)^k (x+mid)^2 dx over [a, b]
            const double c = coef[k];
            auto ipow = [&](double x, int p) { return std::pow(x, p + 1) / (p + 1); };
            seg += c * (ipow(b, k + 2) - ipow(a, k + 2));
            seg += c * 2.0 * mid * (ipow(b, k + 1) - ipow(a, k + 1));
            seg += c * mid * mid * (ipow(b, k) - ipow(a, k));
        }
        total += seg;
    }

    // Tail: exponential fitted to the last two positive values.
    const double v1 = v[n - 2], v2 = v[n - 1];
    if (v1 > 0.0 && v2 > 0.0 && v2 < v1) {
        const double gamma = std::log(v1 / v2) / (r[n - 1] - r[n - 2]);
        const double R = r[n - 1];
        total += v2 * (R * R / gamma + 2.0 * R / (gamma * gamma) + 2.0 / (gamma * gamma * gamma));
    }
    return total;
}

std::vector<double> polyfit(const std::vector<double>& x, const std::vector<double>& y,
                            int degree) {
    if (x.size() != y.size() || x.size() < static_cast<std::size_t>(degree + 1))
        throw std::invalid_argument("polyfit needs at least degree+1 points");
    const std::size_t p = degree + 1;
    std::vector<std::vector<double>> gram(p, std::vector<double>(p, 0.0));
    std::vector<double> rhs(p, 0.0);
    for (std::size_t i = 0; i < x.size(); ++i) {
        std::vector<double> pw(p);
        pw[0] = 1.0;
        for (std::size_t k = 1; k < p; ++k) pw[k] = pw[k - 1] * x[i];
        for (std::size_t a = 0; a < p; ++a) {
            rhs[a] += pw[a] * y[i];
            for (std::size_t b = 0; b < p; ++b) gram[a][b] += pw[a] * pw[b];
        }
    }
    return solve_dense(std::move(gram), std::move(rhs));
}

} // namespace densitylab
