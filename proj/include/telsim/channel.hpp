#pragma once

#include "telsim/rng.hpp"

#include <map>
#include <string>
#include <vector>

// Everything between emission and a detector click: fiber attenuation, fixed
// insertion losses, SpRS noise rates, detector efficiency and dark counts,
// and per-gate click probabilities.

namespace telsim {

// A fiber span with per-wavelength attenuation. Wavelengths are labeled by
// their nm value as written in channel plans ("1290", "1547.32").
struct FiberSpan {
    double length_km = 0.0;
    std::map<std::string, double> attenuation_db_per_km;

    void validate() const;
};

// SpRS noise parameterized directly as the measured counts/s per mW slope of
// one detector path. The slope folds in propagation geometry, filtering, and
// detection; see from_spectral_density for the constructor that reduces a
// spectral picture to a slope.
struct RamanNoiseModel {
    double coefficient_cps_per_mw = 0.0;
    double polarized_fraction = 0.0;  // SpRS in long fiber is usually unpolarized

    void validate() const;

    // Reduces (noise spectral density per nm per mW at the fiber output,
    // filter bandwidth, efficiency from fiber output to a click) to a slope.
    static RamanNoiseModel from_spectral_density(double density_cps_per_nm_per_mw,
                                                 double filter_bandwidth_nm,
                                                 double path_efficiency,
                                                 double polarized_fraction = 0.0);
};

struct DetectorModel {
    double efficiency = 1.0;
    double dark_rate_cps = 0.0;
    double gate_window_s = 500e-12;

    void validate() const;
};

enum class PropagationDirection { Co, Counter };

// Classical launch plan for the shared span. p_min is the minimum power for
// error-free operation of one classical channel.
struct ClassicalChannelPlan {
    double launch_power_mw = 0.0;
    double p_min_mw = 0.5;
    PropagationDirection direction = PropagationDirection::Co;

    void validate() const;
};

// 10^-(length*alpha + sum(extras))/10. The wavelength label must exist in the
// span's attenuation map.
double transmittance(const FiberSpan& span, const std::string& wavelength,
                     const std::vector<double>& extra_losses_db = {});

double db_to_transmittance(double db);

// coefficient * launch power; dark counts are accounted separately.
double sprs_rate_cps(const RamanNoiseModel& model, const ClassicalChannelPlan& plan);

// Per-gate click probability 1 - exp(-R_eff * tau) with
// R_eff = (rate * polarizer_factor + dark) * efficiency. For noise that is
// unpolarized (polarized_fraction 0) a polarizer passes half; the polarized
// fraction is taken worst-case aligned and passes fully.
double noise_click_probability(double rate_cps, const DetectorModel& det, bool after_polarizer,
                               double polarized_fraction = 0.0);

// Binomial loss sampling and its analytic counterpart on a pmf.
int thin(int n, double eta, RngStream& rng);
std::vector<double> thin_distribution(const std::vector<double>& pmf, double eta);

// M = P_cl / P_min.
double headroom_ratio(const ClassicalChannelPlan& plan);

// Fraction of a Gaussian pulse (temporal FWHM) captured by a centered
// coincidence gate; ~1 for 65 ps pulses in a 500 ps window.
double gate_acceptance(double pulse_fwhm_s, double gate_window_s);

}  // namespace telsim
