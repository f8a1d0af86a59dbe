#pragma once

#include "telsim/qstate.hpp"
#include "telsim/rng.hpp"

#include <map>
#include <string>
#include <vector>

// Photon-pair emission statistics for the two SPDC sources: Alice's heralded
// single-photon source and Bob's Sagnac entangled-pair source.

namespace telsim {

enum class PairStatistics { Poisson, Thermal };

// Pair-number statistics and collection parameters of one SPDC source.
// mu is the mean photon pairs per pulse and polarization qubit.
struct PairSourceParams {
    double mu = 0.0;
    double spectral_purity = 1.0;    // single-Schmidt-mode weight
    double herald_efficiency = 1.0;  // idler arm, fiber-to-click
    double signal_efficiency = 1.0;  // signal arm collection before the link
    PairStatistics statistics = PairStatistics::Poisson;

    void validate() const;
};

struct PulseTrain {
    double rep_rate_hz = 500e6;
    double pulse_fwhm_s = 65e-12;

    void validate() const;
};

// Per-pulse Monte Carlo emission: pair counts keyed by polarization-mode
// label ("HV" = signal H / idler V arm of a Sagnac source, "q" = the single
// qubit mode of a heralded source).
struct EmissionSample {
    std::map<std::string, int> pairs_per_mode;
};

// Probability table over pair numbers 0..n_max; tail_mass is the truncated
// probability assigned to counts above n_max.
struct EmissionDistribution {
    std::vector<double> probabilities;
    double tail_mass = 0.0;

    double mean() const;
    double variance() const;
};

// Signal-arm photon-number mixture conditioned on a herald click.
struct HeraldedState {
    double herald_probability = 0.0;  // per pulse
    double vacuum_weight = 0.0;
    double single_weight = 0.0;
    double multi_weight = 0.0;  // >= 2 photons
};

// Draw per-mode pair counts for one pulse. Heralded sources use the single
// mode "q"; entangled sources draw the "HV" and "VH" Sagnac arms
// independently, each with mean mu.
EmissionSample sample_emission(const PairSourceParams& params, RngStream& rng, bool entangled);

EmissionDistribution emission_distribution(const PairSourceParams& params, int n_max);

// Enumerates pair number and detection thinning on both arms.
HeraldedState heralded_state(const PairSourceParams& params, int n_max);

// Single-pair term of the entangled source: |Psi-><Psi-| mixed with white
// noise so the intrinsic two-photon visibility equals `visibility`.
DensityMatrix entangled_state(double visibility);

}  // namespace telsim
