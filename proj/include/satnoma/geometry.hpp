#pragma once

#include "satnoma/units.hpp"

namespace satnoma {

/// A latitude/longitude position in degrees.
struct GeoPoint {
    double lat_deg = 0.0;
    double lon_deg = 0.0;
};

/// Rectangular coverage region centered on the ground-track midpoint.
struct CoverageRegion {
    double center_lat_deg = 0.0;
    double center_lon_deg = 0.0;
    double delta_lat_deg = 0.1;
    double delta_lon_deg = 0.0; ///< 0 means "derive as delta_lat * tan(inclination)".
};

/// Straight-line ground track of one pass over the coverage region.
///
/// The nadir moves at `angular_speed_deg_s` of central Earth angle, split into
/// latitude/longitude components by the inclination. The pass starts (t = 0)
/// at one region corner and exits at the opposite corner after
/// `passage_duration_s` seconds, crossing the center at the midpoint.
struct GroundTrack {
    double center_lat_deg = 0.0;
    double center_lon_deg = 0.0;
    double inclination_deg = 53.0;
    double angular_speed_deg_s = 360.0 / 5400.0;
    double altitude_km = 550.0;
    double lat_span_deg = 0.2;
    double earth_radius_km = kEarthRadiusKm;
    double passage_duration_s = 0.0;

    /// Builds a track with the derived passage duration filled in.
    static GroundTrack create(double center_lat_deg, double center_lon_deg,
                              double inclination_deg, double angular_speed_deg_s,
                              double altitude_km, double lat_span_deg,
                              double earth_radius_km = kEarthRadiusKm);
};

/// Satellite nadir at time t in [0, passage_duration].
GeoPoint nadir_at(const GroundTrack& track, double t_s);

/// Great-circle central angle between two points, in radians (haversine form).
double central_angle_rad(const GeoPoint& a, const GeoPoint& b);

/// Satellite-to-ground distance for central angle gamma, in km.
double slant_range_km(double gamma_rad, double altitude_km,
                      double earth_radius_km = kEarthRadiusKm);

/// Off-axis angle at the satellite (boresight = nadir), in degrees.
double off_axis_angle_deg(double gamma_rad, double slant_km,
                          double earth_radius_km = kEarthRadiusKm);

} // namespace satnoma
