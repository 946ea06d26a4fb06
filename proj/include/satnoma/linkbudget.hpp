#pragma once

#include <cstddef>
#include <string>
#include <vector>

#include "satnoma/geometry.hpp"
#include "satnoma/units.hpp"

namespace satnoma {

/// Piecewise satellite antenna gain model.
///
/// Branch boundaries (psi in degrees, evaluated top to bottom):
///   psi <= a*psi_b                 G_max - 3*(psi/psi_b)^alpha
///   a*psi_b < psi <= (b/2)*psi_b   G_max + L_L - 20*log10(z)
///   (b/2)*psi_b < psi <= b*psi_b   G_max + L_L
///   b*psi_b < psi <= Y             X - 25*log10(psi)
///   Y <= psi < 90                  L_F
///   90 <= psi <= 180               L_B
/// with X = G_max + L_L + 25*log10(b*psi_b) and
///      Y = b*psi_b * 10^(0.04*(G_max + L_L - L_F)).
struct GainPattern {
    double g_max_dbi = 36.0;
    double psi_b_deg = 1.75;
    double alpha = 2.0;
    double l_l_db = -15.0;
    double l_f_dbi = 0.0;
    double l_b_dbi = -10.0;
    double z = 1.0;
    double a = 2.58;
    double b = 6.32;

    double x_dbi() const;
    double y_deg() const;

    /// Throws ConfigError on violated invariants; `key_prefix` is prepended to
    /// field names in messages (e.g. "gain.").
    void validate(const std::string& key_prefix = "") const;
};

/// Terminal/receiver parameters of the uplink budget.
struct LinkConfig {
    double p_tx_w = 10.0;
    double g_term_dbi = 3.0;
    double freq_hz = 14e9;
    double bandwidth_hz = 1e7;
    double temperature_k = 290.0;
    double boltzmann_j_per_k = kBoltzmannJPerK;

    double wavelength_m() const { return kSpeedOfLightMps / freq_hz; }

    void validate(const std::string& key_prefix = "") const;
};

/// Linear SNR per user per slot; row-major [user][slot].
struct SnrMatrix {
    std::size_t n_users = 0;
    std::size_t n_slots = 0;
    double slot_duration_s = 0.0;
    std::vector<double> rho;

    double& at(std::size_t user, std::size_t slot) { return rho[user * n_slots + slot]; }
    double at(std::size_t user, std::size_t slot) const { return rho[user * n_slots + slot]; }
};

/// Antenna gain at off-axis angle psi, in dBi. Requires 0 <= psi <= 180.
double gain_dbi(const GainPattern& p, double psi_deg);

/// Friis received power in watts.
double received_power_w(const LinkConfig& link, const GainPattern& p,
                        double psi_deg, double d_km);

/// Thermal noise power k*T0*B in watts.
double noise_power_w(const LinkConfig& link);

/// Linear SNR = received power / noise power.
double snr_linear(const LinkConfig& link, const GainPattern& p,
                  double psi_deg, double d_km);

/// SNR of one user at one instant of the pass.
double snr_at(const GroundTrack& track, const GeoPoint& user,
              const GainPattern& p, const LinkConfig& link, double t_s);

/// Builds the SNR matrix over all users, sampling each slot at its midpoint
/// t_k = (k - 1/2) * passage / n_slots.
SnrMatrix build_snr_matrix(const GroundTrack& track, const std::vector<GeoPoint>& users,
                           const GainPattern& p, const LinkConfig& link,
                           std::size_t n_slots);

} // namespace satnoma
