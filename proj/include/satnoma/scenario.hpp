#pragma once

#include <cstddef>
#include <string>
#include <vector>

#include "satnoma/geometry.hpp"
#include "satnoma/linkbudget.hpp"
#include "satnoma/scheduler.hpp"

namespace satnoma {

/// Complete experiment description: pass geometry, antenna and link
/// parameters, the user grid, and scheduler knobs. Loadable from a flat
/// `section.key = value` text file.
struct Scenario {
    CoverageRegion region;
    double inclination_deg = 53.0;
    double angular_speed_deg_s = 360.0 / 5400.0;
    double altitude_km = 550.0;

    GainPattern gain;
    LinkConfig link;

    std::size_t grid_rows = 16;
    std::size_t grid_cols = 16;
    std::size_t n_slots = 100;
    SchedulerConfig sched;

    static Scenario defaults();

    std::size_t n_users() const { return grid_rows * grid_cols; }
    GroundTrack track() const;

    /// Row-major uniform grid over the region, endpoints included.
    std::vector<GeoPoint> user_grid() const;

    /// Throws ConfigError naming the offending dotted key.
    void validate() const;
};

/// The nine probe locations (center + i*delta_lat, center + j*delta_lon) for
/// i,j in {-1, 0, 1}, row-major in i then j.
std::vector<GeoPoint> probe_grid(const CoverageRegion& region);

/// Parses config text; unknown keys and malformed values raise ConfigError.
/// The result is not yet validated.
Scenario parse_scenario(const std::string& text);

/// Reads, parses, and validates a config file. Missing file raises IoError.
Scenario load_scenario(const std::string& path);

/// Canonical text form; parse(serialize(s)) reproduces s exactly.
std::string serialize_scenario(const Scenario& s);

/// SNR matrix of the scenario's full user grid.
SnrMatrix build_snr_matrix(const Scenario& s);

} // namespace satnoma
