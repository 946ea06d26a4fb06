#include "satnoma/geometry.hpp"

#include <cmath>
#include <string>

#include "satnoma/errors.hpp"

namespace satnoma {

GroundTrack GroundTrack::create(double center_lat_deg, double center_lon_deg,
                                double inclination_deg, double angular_speed_deg_s,
                                double altitude_km, double lat_span_deg,
                                double earth_radius_km) {
    if (altitude_km <= 0.0) throw ConfigError("track altitude must be > 0");
    if (angular_speed_deg_s <= 0.0) throw ConfigError("track angular_speed must be > 0");
    if (inclination_deg < 0.0 || inclination_deg >= 90.0)
        throw ConfigError("track inclination must be in [0, 90)");
    if (lat_span_deg <= 0.0) throw ConfigError("track latitude span must be > 0");
    if (earth_radius_km <= 0.0) throw ConfigError("earth radius must be > 0");

    GroundTrack t;
    t.center_lat_deg = center_lat_deg;
    t.center_lon_deg = center_lon_deg;
    t.inclination_deg = inclination_deg;
    t.angular_speed_deg_s = angular_speed_deg_s;
    t.altitude_km = altitude_km;
    t.lat_span_deg = lat_span_deg;
    t.earth_radius_km = earth_radius_km;
    t.passage_duration_s =
        lat_span_deg / (std::cos(deg_to_rad(inclination_deg)) * angular_speed_deg_s);
    return t;
}

GeoPoint nadir_at(const GroundTrack& track, double t_s) {
    if (t_s < 0.0 || t_s > track.passage_duration_s)
        throw DomainError("time " + std::to_string(t_s) + " s outside pass [0, " +
                          std::to_string(track.passage_duration_s) + "]");
    const double dt = t_s - track.passage_duration_s / 2.0;
    const double incl = deg_to_rad(track.inclination_deg);
    return {track.center_lat_deg + dt * track.angular_speed_deg_s * std::cos(incl),
            track.center_lon_deg + dt * track.angular_speed_deg_s * std::sin(incl)};
}

double central_angle_rad(const GeoPoint& a, const GeoPoint& b) {
    const double lat1 = deg_to_rad(a.lat_deg);
    const double lat2 = deg_to_rad(b.lat_deg);
    const double dlat = lat2 - lat1;
    const double dlon = deg_to_rad(b.lon_deg - a.lon_deg);
    const double s1 = std::sin(dlat / 2.0);
    const double s2 = std::sin(dlon / 2.0);
    const double h = s1 * s1 + std::cos(lat1) * std::cos(lat2) * s2 * s2;
    return 2.0 * std::atan2(std::sqrt(h), std::sqrt(1.0 - h));
}

double slant_range_km(double gamma_rad, double altitude_km, double earth_radius_km) {
    const double r = earth_radius_km;
    const double s = earth_radius_km + altitude_km;
    return std::sqrt(r * r + s * s - 2.0 * r * s * std::cos(gamma_rad));
}

double off_axis_angle_deg(double gamma_rad, double slant_km, double earth_radius_km) {
    return rad_to_deg(std::asin(earth_radius_km * std::sin(gamma_rad) / slant_km));
}

} // namespace satnoma
