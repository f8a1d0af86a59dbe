#include "telsim/channel.hpp"

#include <cmath>
#include <stdexcept>

namespace telsim {

void FiberSpan::validate() const {
    if (length_km < 0.0) throw std::invalid_argument("span length must be >= 0");
    for (const auto& [label, alpha] : attenuation_db_per_km) {
        if (alpha < 0.0) {
            throw std::invalid_argument("attenuation must be >= 0 (" + label + ")");
        }
    }
}

void RamanNoiseModel::validate() const {
    if (coefficient_cps_per_mw < 0.0) throw std::invalid_argument("noise coefficient must be >= 0");
    if (polarized_fraction < 0.0 || polarized_fraction > 1.0) {
        throw std::invalid_argument("polarized_fraction must lie in [0, 1]");
    }
}

RamanNoiseModel RamanNoiseModel::from_spectral_density(double density_cps_per_nm_per_mw,
                                                       double filter_bandwidth_nm,
                                                       double path_efficiency,
                                                       double polarized_fraction) {
    if (density_cps_per_nm_per_mw < 0.0 || filter_bandwidth_nm <= 0.0 || path_efficiency <= 0.0 ||
        path_efficiency > 1.0) {
        throw std::invalid_argument("invalid spectral-density noise parameters");
    }
    RamanNoiseModel model;
    model.coefficient_cps_per_mw = density_cps_per_nm_per_mw * filter_bandwidth_nm * path_efficiency;
    model.polarized_fraction = polarized_fraction;
    model.validate();
    return model;
}

void DetectorModel::validate() const {
    if (efficiency <= 0.0 || efficiency > 1.0) {
        throw std::invalid_argument("detector efficiency must lie in (0, 1]");
    }
    if (dark_rate_cps < 0.0) throw std::invalid_argument("dark rate must be >= 0");
    if (gate_window_s <= 0.0) throw std::invalid_argument("gate window must be > 0");
}

void ClassicalChannelPlan::validate() const {
    if (launch_power_mw < 0.0) throw std::invalid_argument("launch power must be >= 0");
    if (p_min_mw <= 0.0) throw std::invalid_argument("p_min must be > 0");
}

double db_to_transmittance(double db) { return std::pow(10.0, -db / 10.0); }

double transmittance(const FiberSpan& span, const std::string& wavelength,
                     const std::vector<double>& extra_losses_db) {
    span.validate();
    const auto it = span.attenuation_db_per_km.find(wavelength);
    if (it == span.attenuation_db_per_km.end()) {
        throw std::invalid_argument("wavelength label not in attenuation map: " + wavelength);
    }
    double total_db = span.length_km * it->second;
    for (double extra : extra_losses_db) total_db += extra;
    return db_to_transmittance(total_db);
}

double sprs_rate_cps(const RamanNoiseModel& model, const ClassicalChannelPlan& plan) {
    model.validate();
    plan.validate();
    return model.coefficient_cps_per_mw * plan.launch_power_mw;
}

double noise_click_probability(double rate_cps, const DetectorModel& det, bool after_polarizer,
                               double polarized_fraction) {
    if (rate_cps < 0.0) throw std::invalid_argument("noise rate must be >= 0");
    det.validate();
    double polarizer_factor = 1.0;
    if (after_polarizer) {
        polarizer_factor = 0.5 * (1.0 - polarized_fraction) + polarized_fraction;
    }
    const double r_eff = (rate_cps * polarizer_factor + det.dark_rate_cps) * det.efficiency;
    return -std::expm1(-r_eff * det.gate_window_s);
}

int thin(int n, double eta, RngStream& rng) {
    if (n < 0) throw std::invalid_argument("photon number must be >= 0");
    if (eta < 0.0 || eta > 1.0) throw std::invalid_argument("eta must lie in [0, 1]");
    return rng.binomial(n, eta);
}

std::vector<double> thin_distribution(const std::vector<double>& pmf, double eta) {
    if (eta < 0.0 || eta > 1.0) throw std::invalid_argument("eta must lie in [0, 1]");
    std::vector<double> out(pmf.size(), 0.0);
    for (std::size_t n = 0; n < pmf.size(); ++n) {
        if (pmf[n] == 0.0) continue;
        for (std::size_t k = 0; k <= n; ++k) {
            const double binom =
                std::exp(std::lgamma(n + 1.0) - std::lgamma(k + 1.0) - std::lgamma(n - k + 1.0)) *
                std::pow(eta, static_cast<double>(k)) *
                std::pow(1.0 - eta, static_cast<double>(n - k));
            out[k] += pmf[n] * binom;
        }
    }
    return out;
}

double headroom_ratio(const ClassicalChannelPlan& plan) {
    plan.validate();
    return plan.launch_power_mw / plan.p_min_mw;
}

double gate_acceptance(double pulse_fwhm_s, double gate_window_s) {
    if (pulse_fwhm_s <= 0.0 || gate_window_s <= 0.0) {
        throw std::invalid_argument("pulse width and gate window must be > 0");
    }
    const double sigma = pulse_fwhm_s / (2.0 * std::sqrt(2.0 * std::log(2.0)));
    return std::erf(gate_window_s / (2.0 * sigma * std::sqrt(2.0)));
}

}  // namespace telsim
