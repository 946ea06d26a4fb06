#pragma once

#include <cmath>
#include <numbers>

namespace satnoma {

inline constexpr double kSpeedOfLightMps = 2.998e8;
inline constexpr double kEarthRadiusKm = 6371.0;
inline constexpr double kBoltzmannJPerK = 1.38e-23;

constexpr double deg_to_rad(double deg) { return deg * std::numbers::pi / 180.0; }
constexpr double rad_to_deg(double rad) { return rad * 180.0 / std::numbers::pi; }

inline double db_to_linear(double db) { return std::pow(10.0, db / 10.0); }
inline double linear_to_db(double lin) { return 10.0 * std::log10(lin); }

inline double watts_to_dbm(double w) { return 10.0 * std::log10(w * 1e3); }
inline double dbm_to_watts(double dbm) { return std::pow(10.0, dbm / 10.0) * 1e-3; }

} // namespace satnoma
