#include "densitylab/metropolis.hpp"

#include <cmath>
#include <numbers>
#include <sstream>
#include <stdexcept>

#include "densitylab/errors.hpp"
#include "densitylab/rng.hpp"

namespace densitylab {

void MCConfig::validate() const {
    if (chain_count < 1) throw std::invalid_argument("chain_count must be >= 1");
    if (burn_in < 0) throw std::invalid_argument("burn_in must be >= 0");
    if (steps_per_chain <= burn_in)
        throw std::invalid_argument("steps_per_chain must exceed burn_in");
    if (!(proposal_scale > 0.0)) throw std::invalid_argument("proposal_scale must be positive");
}

std::string MCConfig::describe() const {
    std::ostringstream os;
    os << "chains=" << chain_count << ";steps=" << steps_per_chain << ";burnin=" << burn_in
       << ";proposal=" << proposal_scale << ";seed=" << seed;
    return os.str();
}

namespace {

Configuration start_configuration(const WeightFn& w, int n_electrons, Rng& rng) {
    for (int attempt = 0; attempt < 200; ++attempt) {
        Configuration c;
        c.positions.reserve(n_electrons);
        for (int j = 0; j < n_electrons; ++j)
            c.positions.push_back(rng.gamma3_radius(1.0) * rng.uniform_direction());
        if (w(c) > 0.0) return c;
    }
    throw NumericError("metropolis: could not find a start point with positive weight");
}

} // namespace

void metropolis_sample(const WeightFn& w, int n_electrons, const MCConfig& mc,
                       const std::function<void(const Configuration&, int)>& visit,
                       double* mean_acceptance) {
    mc.validate();
    if (n_electrons < 1) throw std::invalid_argument("n_electrons must be >= 1");

    const Rng root(mc.seed);
    double acceptance_sum = 0.0;

    for (int chain = 0; chain < mc.chain_count; ++chain) {
        Rng rng = root.derive(static_cast<std::uint64_t>(chain));
        Configuration current = start_configuration(w, n_electrons, rng);
        double w_current = w(current);
        double scale = mc.proposal_scale;

        long accepted = 0;
        long window_accepted = 0;
        long window_steps = 0;
        long production_steps = 0;
        long production_accepted = 0;

        for (long step = 0; step < mc.steps_per_chain; ++step) {
            Configuration proposal = current;
            for (auto& p : proposal.positions) p = p + rng.isotropic_normal(scale);
            const double w_prop = w(proposal);
            const bool accept = w_prop > 0.0 && (w_prop >= w_current ||
                                                 rng.uniform() * w_current < w_prop);
            if (accept) {
                current = std::move(proposal);
                w_current = w_prop;
                ++accepted;
                ++window_accepted;
            }
            ++window_steps;

            if (step < mc.burn_in) {
                // Tune towards ~50% acceptance, then freeze at the end of
                // burn-in so detailed balance holds for every kept sample.
                if (window_steps == 100) {
                    const double rate = static_cast<double>(window_accepted) / window_steps;
                    scale *= std::clamp(rate / 0.5, 0.5, 2.0);
                    window_accepted = 0;
                    window_steps = 0;
                }
            } else {
                ++production_steps;
                if (accept) ++production_accepted;
                visit(current, chain);
            }
        }
        acceptance_sum += production_steps > 0
                              ? static_cast<double>(production_accepted) / production_steps
                              : 0.0;
    }
    if (mean_acceptance) *mean_acceptance = acceptance_sum / mc.chain_count;
}

MCExpectation mc_expectation(const WeightFn& w, int n_electrons, const ObservableFn& obs,
                             const MCConfig& mc) {
    if (mc.chain_count < 4)
        throw std::invalid_argument("mc_expectation needs >= 4 chains for an error bar");

    std::vector<double> sums(mc.chain_count, 0.0);
    std::vector<long> counts(mc.chain_count, 0);
    MCExpectation out;
    metropolis_sample(
        w, n_electrons, mc,
        [&](const Configuration& c, int chain) {
            sums[chain] += obs(c);
            ++counts[chain];
        },
        &out.mean_acceptance);

    out.chain_means.resize(mc.chain_count);
    double grand = 0.0;
    for (int i = 0; i < mc.chain_count; ++i) {
        out.chain_means[i] = sums[i] / counts[i];
        grand += out.chain_means[i];
    }
    grand /= mc.chain_count;
    double var = 0.0;
    for (const double m : out.chain_means) var += (m - grand) * (m - grand);
    var /= (mc.chain_count - 1);

    out.estimate.value = grand;
    out.estimate.stderr_ = std::sqrt(var / mc.chain_count);
    out.estimate.method = EstimateMethod::MonteCarlo;
    return out;
}

MCExpectation importance_integral_3n(const ObservableFn& f, int n_electrons, double rate,
                                     const MCConfig& mc) {
    mc.validate();
    if (mc.chain_count < 4)
        throw std::invalid_argument("importance_integral_3n needs >= 4 chains");
    if (!(rate > 0.0)) throw std::invalid_argument("rate must be positive");

    const double log_norm_per_electron =
        3.0 * std::log(rate) - std::log(8.0 * std::numbers::pi);
    const Rng root(mc.seed);

    MCExpectation out;
    out.chain_means.resize(mc.chain_count);
    double grand = 0.0;
    const long samples = mc.steps_per_chain;
    for (int chain = 0; chain < mc.chain_count; ++chain) {
        Rng rng = root.derive(static_cast<std::uint64_t>(chain));
        double sum = 0.0;
        for (long s = 0; s < samples; ++s) {
            Configuration c;
            c.positions.reserve(n_electrons);
            double log_pdf = 0.0;
            for (int j = 0; j < n_electrons; ++j) {
                const double r = rng.gamma3_radius(rate);
                c.positions.push_back(r * rng.uniform_direction());
                log_pdf += log_norm_per_electron - rate * r;
            }
            sum += f(c) * std::exp(-log_pdf);
        }
        out.chain_means[chain] = sum / samples;
        grand += out.chain_means[chain];
    }
    grand /= mc.chain_count;
    double var = 0.0;
    for (const double m : out.chain_means) var += (m - grand) * (m - grand);
    var /= (mc.chain_count - 1);
    out.estimate = {grand, std::sqrt(var / mc.chain_count), EstimateMethod::MonteCarlo};
    out.mean_acceptance = 1.0;
    return out;
}

} // namespace densitylab
