#include "telsim/sources.hpp"

#include <cmath>
#include <stdexcept>

namespace telsim {

void PairSourceParams::validate() const {
    if (mu < 0.0) throw std::invalid_argument("mu must be >= 0");
    if (spectral_purity < 0.0 || spectral_purity > 1.0) {
        throw std::invalid_argument("spectral_purity must lie in [0, 1]");
    }
    if (herald_efficiency <= 0.0 || herald_efficiency > 1.0) {
        throw std::invalid_argument("herald_efficiency must lie in (0, 1]");
    }
    if (signal_efficiency <= 0.0 || signal_efficiency > 1.0) {
        throw std::invalid_argument("signal_efficiency must lie in (0, 1]");
    }
}

void PulseTrain::validate() const {
    if (rep_rate_hz <= 0.0) throw std::invalid_argument("rep_rate must be > 0");
    if (pulse_fwhm_s <= 0.0) throw std::invalid_argument("pulse_fwhm must be > 0");
    if (pulse_fwhm_s >= 1.0 / rep_rate_hz) {
        throw std::invalid_argument("pulse_fwhm must be shorter than the pulse period");
    }
}

namespace {

int draw_pairs(const PairSourceParams& p, RngStream& rng) {
    return p.statistics == PairStatistics::Poisson ? rng.poisson(p.mu) : rng.thermal(p.mu);
}

double pmf(const PairSourceParams& p, int n) {
    if (p.mu == 0.0) return n == 0 ? 1.0 : 0.0;
    if (p.statistics == PairStatistics::Poisson) {
        double logp = -p.mu + n * std::log(p.mu) - std::lgamma(n + 1.0);
        return std::exp(logp);
    }
    return std::pow(p.mu / (1.0 + p.mu), n) / (1.0 + p.mu);
}

}  // namespace

EmissionSample sample_emission(const PairSourceParams& params, RngStream& rng, bool entangled) {
    params.validate();
    EmissionSample sample;
    if (entangled) {
        sample.pairs_per_mode["HV"] = draw_pairs(params, rng);
        sample.pairs_per_mode["VH"] = draw_pairs(params, rng);
    } else {
        sample.pairs_per_mode["q"] = draw_pairs(params, rng);
    }
    return sample;
}

EmissionDistribution emission_distribution(const PairSourceParams& params, int n_max) {
    params.validate();
    if (n_max < 1) throw std::invalid_argument("n_max must be >= 1");
    EmissionDistribution dist;
    dist.probabilities.resize(n_max + 1);
    double total = 0.0;
    for (int n = 0; n <= n_max; ++n) {
        dist.probabilities[n] = pmf(params, n);
        total += dist.probabilities[n];
    }
    dist.tail_mass = std::max(0.0, 1.0 - total);
    return dist;
}

double EmissionDistribution::mean() const {
    double m = 0.0;
    for (std::size_t n = 0; n < probabilities.size(); ++n) m += n * probabilities[n];
    return m;
}

double EmissionDistribution::variance() const {
    double m = mean(), m2 = 0.0;
    for (std::size_t n = 0; n < probabilities.size(); ++n) {
        m2 += static_cast<double>(n) * static_cast<double>(n) * probabilities[n];
    }
    return m2 - m * m;
}

HeraldedState heralded_state(const PairSourceParams& params, int n_max) {
    params.validate();
    const EmissionDistribution dist = emission_distribution(params, n_max);
    HeraldedState out;
    double w_vac = 0.0, w_one = 0.0, w_multi = 0.0;
    for (int n = 0; n <= n_max; ++n) {
        const double p_emit = dist.probabilities[n];
        const double p_herald = 1.0 - std::pow(1.0 - params.herald_efficiency, n);
        const double joint = p_emit * p_herald;
        if (joint == 0.0) continue;
        out.herald_probability += joint;
        // Binomial thinning of the n signal photons.
        for (int k = 0; k <= n; ++k) {
            const double binom = std::exp(std::lgamma(n + 1.0) - std::lgamma(k + 1.0) -
                                          std::lgamma(n - k + 1.0)) *
                                 std::pow(params.signal_efficiency, k) *
                                 std::pow(1.0 - params.signal_efficiency, n - k);
            if (k == 0) w_vac += joint * binom;
            else if (k == 1) w_one += joint * binom;
            else w_multi += joint * binom;
        }
    }
    if (out.herald_probability > 0.0) {
        out.vacuum_weight = w_vac / out.herald_probability;
        out.single_weight = w_one / out.herald_probability;
        out.multi_weight = w_multi / out.herald_probability;
    }
    return out;
}

DensityMatrix entangled_state(double visibility) {
    if (visibility < 0.0 || visibility > 1.0) {
        throw std::invalid_argument("intrinsic visibility must lie in [0, 1]");
    }
    const Eigen::Vector4cd psi = BellState{BellLabel::PsiMinus}.vector();
    Eigen::MatrixXcd rho = visibility * (psi * psi.adjoint()) +
                           (1.0 - visibility) * Eigen::MatrixXcd::Identity(4, 4) / 4.0;
    return DensityMatrix(std::move(rho), {2, 2});
}

}  // namespace telsim
