#include "satnoma/linkbudget.hpp"

#include <cmath>
#include <numbers>

#include "satnoma/errors.hpp"

namespace satnoma {

double GainPattern::x_dbi() const {
    return g_max_dbi + l_l_db + 25.0 * std::log10(b * psi_b_deg);
}

double GainPattern::y_deg() const {
    return b * psi_b_deg * std::pow(10.0, 0.04 * (g_max_dbi + l_l_db - l_f_dbi));
}

void GainPattern::validate(const std::string& key_prefix) const {
    if (!(psi_b_deg > 0.0)) throw ConfigError(key_prefix + "psi_b must be > 0");
    if (!(alpha > 0.0)) throw ConfigError(key_prefix + "alpha must be > 0");
    if (!(z >= 1.0)) throw ConfigError(key_prefix + "z must be >= 1");
    if (!(a > 0.0)) throw ConfigError(key_prefix + "a must be > 0");
    if (!(a <= b / 2.0)) throw ConfigError(key_prefix + "a must be <= b/2");
    const double y = y_deg();
    if (!(b * psi_b_deg < y))
        throw ConfigError(key_prefix + "b: transition b*psi_b must lie below Y");
    if (!(y <= 90.0))
        throw ConfigError(key_prefix + "l_l: Y = b*psi_b*10^(0.04(g_max+l_l-l_f)) must be <= 90 deg");
}

void LinkConfig::validate(const std::string& key_prefix) const {
    if (!(p_tx_w > 0.0)) throw ConfigError(key_prefix + "p_tx must be > 0");
    if (!(freq_hz > 0.0)) throw ConfigError(key_prefix + "freq must be > 0");
    if (!(bandwidth_hz > 0.0)) throw ConfigError(key_prefix + "bandwidth must be > 0");
    if (!(temperature_k > 0.0)) throw ConfigError(key_prefix + "temperature must be > 0");
    if (!(boltzmann_j_per_k > 0.0)) throw ConfigError(key_prefix + "boltzmann must be > 0");
}

double gain_dbi(const GainPattern& p, double psi_deg) {
    if (psi_deg < 0.0 || psi_deg > 180.0)
        throw DomainError("off-axis angle must be within [0, 180] degrees");
    if (psi_deg <= p.a * p.psi_b_deg)
        return p.g_max_dbi - 3.0 * std::pow(psi_deg / p.psi_b_deg, p.alpha);
    if (psi_deg <= (p.b / 2.0) * p.psi_b_deg)
        return p.g_max_dbi + p.l_l_db - 20.0 * std::log10(p.z);
    if (psi_deg <= p.b * p.psi_b_deg)
        return p.g_max_dbi + p.l_l_db;
    if (psi_deg <= p.y_deg())
        return p.x_dbi() - 25.0 * std::log10(psi_deg);
    if (psi_deg < 90.0)
        return p.l_f_dbi;
    return p.l_b_dbi;
}

double received_power_w(const LinkConfig& link, const GainPattern& p,
                        double psi_deg, double d_km) {
    if (!(d_km > 0.0)) throw DomainError("propagation distance must be > 0");
    const double g_term = db_to_linear(link.g_term_dbi);
    const double g_sat = db_to_linear(gain_dbi(p, psi_deg));
    const double ratio = link.wavelength_m() / (4.0 * std::numbers::pi * d_km * 1e3);
    return g_term * g_sat * ratio * ratio * link.p_tx_w;
}

double noise_power_w(const LinkConfig& link) {
    return link.boltzmann_j_per_k * link.temperature_k * link.bandwidth_hz;
}

double snr_linear(const LinkConfig& link, const GainPattern& p,
                  double psi_deg, double d_km) {
    return received_power_w(link, p, psi_deg, d_km) / noise_power_w(link);
}

double snr_at(const GroundTrack& track, const GeoPoint& user,
              const GainPattern& p, const LinkConfig& link, double t_s) {
    const GeoPoint nadir = nadir_at(track, t_s);
    const double gamma = central_angle_rad(nadir, user);
    const double d = slant_range_km(gamma, track.altitude_km, track.earth_radius_km);
    const double psi = off_axis_angle_deg(gamma, d, track.earth_radius_km);
    return snr_linear(link, p, psi, d);
}

SnrMatrix build_snr_matrix(const GroundTrack& track, const std::vector<GeoPoint>& users,
                           const GainPattern& p, const LinkConfig& link,
                           std::size_t n_slots) {
    if (n_slots == 0) throw ConfigError("n_slots must be >= 1");
    p.validate();
    link.validate();

    SnrMatrix m;
    m.n_users = users.size();
    m.n_slots = n_slots;
    m.slot_duration_s = track.passage_duration_s / static_cast<double>(n_slots);
    m.rho.resize(m.n_users * n_slots);
    for (std::size_t u = 0; u < m.n_users; ++u) {
        for (std::size_t k = 0; k < n_slots; ++k) {
            const double t = (static_cast<double>(k) + 0.5) * m.slot_duration_s;
            m.at(u, k) = snr_at(track, users[u], p, link, t);
        }
    }
    return m;
}

} // namespace satnoma
