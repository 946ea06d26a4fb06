#include "satnoma/scenario.hpp"

#include <cctype>
#include <cmath>
#include <cstdint>
#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <sstream>

#include "satnoma/errors.hpp"

namespace satnoma {

namespace {

std::string trim(const std::string& s) {
    std::size_t begin = 0;
    std::size_t end = s.size();
    while (begin < end && std::isspace(static_cast<unsigned char>(s[begin]))) ++begin;
    while (end > begin && std::isspace(static_cast<unsigned char>(s[end - 1]))) --end;
    return s.substr(begin, end - begin);
}

double parse_double(const std::string& key, const std::string& value) {
    char* end = nullptr;
    const double v = std::strtod(value.c_str(), &end);
    if (end == value.c_str() || *end != '\0')
        throw ConfigError(key + ": invalid number '" + value + "'");
    return v;
}

std::uint64_t parse_u64(const std::string& key, const std::string& value) {
    char* end = nullptr;
    const unsigned long long v = std::strtoull(value.c_str(), &end, 10);
    if (end == value.c_str() || *end != '\0' || value.front() == '-')
        throw ConfigError(key + ": invalid integer '" + value + "'");
    return v;
}

std::size_t parse_count(const std::string& key, const std::string& value) {
    return static_cast<std::size_t>(parse_u64(key, value));
}

bool parse_bool(const std::string& key, const std::string& value) {
    if (value == "true" || value == "on" || value == "1") return true;
    if (value == "false" || value == "off" || value == "0") return false;
    throw ConfigError(key + ": invalid flag '" + value + "' (use true/false)");
}

TieBreak parse_tie_break(const std::string& key, const std::string& value) {
    if (value == "by_index") return TieBreak::by_index;
    if (value == "random") return TieBreak::random;
    throw ConfigError(key + ": invalid tie_break '" + value + "' (by_index or random)");
}

std::string format_double(double v) {
    char buf[40];
    std::snprintf(buf, sizeof(buf), "%.17g", v);
    return buf;
}

} // namespace

Scenario Scenario::defaults() {
    Scenario s;
    s.region.delta_lon_deg = s.region.delta_lat_deg * std::tan(deg_to_rad(s.inclination_deg));
    return s;
}

GroundTrack Scenario::track() const {
    return GroundTrack::create(region.center_lat_deg, region.center_lon_deg,
                               inclination_deg, angular_speed_deg_s, altitude_km,
                               2.0 * region.delta_lat_deg);
}

std::vector<GeoPoint> Scenario::user_grid() const {
    std::vector<GeoPoint> users;
    users.reserve(grid_rows * grid_cols);
    for (std::size_t i = 0; i < grid_rows; ++i) {
        const double frac_i =
            grid_rows > 1 ? static_cast<double>(i) / static_cast<double>(grid_rows - 1) : 0.5;
        const double lat =
            region.center_lat_deg + region.delta_lat_deg * (2.0 * frac_i - 1.0);
        for (std::size_t j = 0; j < grid_cols; ++j) {
            const double frac_j =
                grid_cols > 1 ? static_cast<double>(j) / static_cast<double>(grid_cols - 1) : 0.5;
            const double lon =
                region.center_lon_deg + region.delta_lon_deg * (2.0 * frac_j - 1.0);
            users.push_back({lat, lon});
        }
    }
    return users;
}

void Scenario::validate() const {
    if (!(altitude_km > 0.0)) throw ConfigError("track.altitude must be > 0");
    if (!(angular_speed_deg_s > 0.0)) throw ConfigError("track.angular_speed must be > 0");
    if (inclination_deg < 0.0 || inclination_deg >= 90.0)
        throw ConfigError("track.inclination must be in [0, 90)");
    if (!(region.delta_lat_deg > 0.0)) throw ConfigError("track.delta_lat must be > 0");
    if (!(region.delta_lon_deg > 0.0)) throw ConfigError("track.delta_lon must be > 0");
    gain.validate("gain.");
    link.validate("link.");
    if (grid_rows < 1) throw ConfigError("sim.grid_rows must be >= 1");
    if (grid_cols < 1) throw ConfigError("sim.grid_cols must be >= 1");
    if (n_slots < 1) throw ConfigError("sim.n_slots must be >= 1");
    if (sched.n_sic < 1) throw ConfigError("sim.n_sic must be >= 1");
    if (sched.n_rep < 1) throw ConfigError("sim.n_rep must be >= 1");
}

std::vector<GeoPoint> probe_grid(const CoverageRegion& region) {
    std::vector<GeoPoint> points;
    points.reserve(9);
    for (int i = -1; i <= 1; ++i)
        for (int j = -1; j <= 1; ++j)
            points.push_back({region.center_lat_deg + i * region.delta_lat_deg,
                              region.center_lon_deg + j * region.delta_lon_deg});
    return points;
}

Scenario parse_scenario(const std::string& text) {
    Scenario s = Scenario::defaults();
    bool delta_lon_given = false;

    std::istringstream in(text);
    std::string line;
    std::size_t line_no = 0;
    while (std::getline(in, line)) {
        ++line_no;
        if (const auto hash = line.find('#'); hash != std::string::npos)
            line.erase(hash);
        line = trim(line);
        if (line.empty()) continue;

        const auto eq = line.find('=');
        if (eq == std::string::npos)
            throw ConfigError("line " + std::to_string(line_no) +
                              ": expected 'key = value', got '" + line + "'");
        const std::string key = trim(line.substr(0, eq));
        const std::string value = trim(line.substr(eq + 1));
        if (key.empty() || value.empty())
            throw ConfigError("line " + std::to_string(line_no) + ": empty key or value");

        if (key == "track.center_lat") s.region.center_lat_deg = parse_double(key, value);
        else if (key == "track.center_lon") s.region.center_lon_deg = parse_double(key, value);
        else if (key == "track.inclination") s.inclination_deg = parse_double(key, value);
        else if (key == "track.angular_speed") s.angular_speed_deg_s = parse_double(key, value);
        else if (key == "track.altitude") s.altitude_km = parse_double(key, value);
        else if (key == "track.delta_lat") s.region.delta_lat_deg = parse_double(key, value);
        else if (key == "track.delta_lon") { s.region.delta_lon_deg = parse_double(key, value); delta_lon_given = true; }
        else if (key == "gain.g_max") s.gain.g_max_dbi = parse_double(key, value);
        else if (key == "gain.psi_b") s.gain.psi_b_deg = parse_double(key, value);
        else if (key == "gain.alpha") s.gain.alpha = parse_double(key, value);
        else if (key == "gain.l_l") s.gain.l_l_db = parse_double(key, value);
        else if (key == "gain.l_f") s.gain.l_f_dbi = parse_double(key, value);
        else if (key == "gain.l_b") s.gain.l_b_dbi = parse_double(key, value);
        else if (key == "gain.z") s.gain.z = parse_double(key, value);
        else if (key == "gain.a") s.gain.a = parse_double(key, value);
        else if (key == "gain.b") s.gain.b = parse_double(key, value);
        else if (key == "link.p_tx") s.link.p_tx_w = parse_double(key, value);
        else if (key == "link.g_term") s.link.g_term_dbi = parse_double(key, value);
        else if (key == "link.freq") s.link.freq_hz = parse_double(key, value);
        else if (key == "link.bandwidth") s.link.bandwidth_hz = parse_double(key, value);
        else if (key == "link.temperature") s.link.temperature_k = parse_double(key, value);
        else if (key == "link.boltzmann") s.link.boltzmann_j_per_k = parse_double(key, value);
        else if (key == "sim.grid_rows") s.grid_rows = parse_count(key, value);
        else if (key == "sim.grid_cols") s.grid_cols = parse_count(key, value);
        else if (key == "sim.n_slots") s.n_slots = parse_count(key, value);
        else if (key == "sim.n_sic") s.sched.n_sic = parse_count(key, value);
        else if (key == "sim.moderate") s.sched.moderate = parse_bool(key, value);
        else if (key == "sim.permute_slots") s.sched.permute_slots = parse_bool(key, value);
        else if (key == "sim.n_rep") s.sched.n_rep = parse_count(key, value);
        else if (key == "sim.seed") s.sched.seed = parse_u64(key, value);
        else if (key == "sim.tie_break") s.sched.tie_break = parse_tie_break(key, value);
        else if (key == "sim.reset_each_cycle") s.sched.reset_each_cycle = parse_bool(key, value);
        else throw ConfigError("unknown config key '" + key + "'");
    }

    if (!delta_lon_given)
        s.region.delta_lon_deg = s.region.delta_lat_deg * std::tan(deg_to_rad(s.inclination_deg));
    return s;
}

Scenario load_scenario(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw IoError("cannot open config file '" + path + "'");
    std::ostringstream buffer;
    buffer << in.rdbuf();
    Scenario s = parse_scenario(buffer.str());
    s.validate();
    return s;
}

std::string serialize_scenario(const Scenario& s) {
    std::ostringstream out;
    out << "track.center_lat = " << format_double(s.region.center_lat_deg) << "\n"
        << "track.center_lon = " << format_double(s.region.center_lon_deg) << "\n"
        << "track.inclination = " << format_double(s.inclination_deg) << "\n"
        << "track.angular_speed = " << format_double(s.angular_speed_deg_s) << "\n"
        << "track.altitude = " << format_double(s.altitude_km) << "\n"
        << "track.delta_lat = " << format_double(s.region.delta_lat_deg) << "\n"
        << "track.delta_lon = " << format_double(s.region.delta_lon_deg) << "\n"
        << "\n"
        << "gain.g_max = " << format_double(s.gain.g_max_dbi) << "\n"
        << "gain.psi_b = " << format_double(s.gain.psi_b_deg) << "\n"
        << "gain.alpha = " << format_double(s.gain.alpha) << "\n"
        << "gain.l_l = " << format_double(s.gain.l_l_db) << "\n"
        << "gain.l_f = " << format_double(s.gain.l_f_dbi) << "\n"
        << "gain.l_b = " << format_double(s.gain.l_b_dbi) << "\n"
        << "gain.z = " << format_double(s.gain.z) << "\n"
        << "gain.a = " << format_double(s.gain.a) << "\n"
        << "gain.b = " << format_double(s.gain.b) << "\n"
        << "\n"
        << "link.p_tx = " << format_double(s.link.p_tx_w) << "\n"
        << "link.g_term = " << format_double(s.link.g_term_dbi) << "\n"
        << "link.freq = " << format_double(s.link.freq_hz) << "\n"
        << "link.bandwidth = " << format_double(s.link.bandwidth_hz) << "\n"
        << "link.temperature = " << format_double(s.link.temperature_k) << "\n"
        << "link.boltzmann = " << format_double(s.link.boltzmann_j_per_k) << "\n"
        << "\n"
        << "sim.grid_rows = " << s.grid_rows << "\n"
        << "sim.grid_cols = " << s.grid_cols << "\n"
        << "sim.n_slots = " << s.n_slots << "\n"
        << "sim.n_sic = " << s.sched.n_sic << "\n"
        << "sim.moderate = " << (s.sched.moderate ? "true" : "false") << "\n"
        << "sim.permute_slots = " << (s.sched.permute_slots ? "true" : "false") << "\n"
        << "sim.n_rep = " << s.sched.n_rep << "\n"
        << "sim.seed = " << s.sched.seed << "\n"
        << "sim.tie_break = "
        << (s.sched.tie_break == TieBreak::by_index ? "by_index" : "random") << "\n"
        << "sim.reset_each_cycle = " << (s.sched.reset_each_cycle ? "true" : "false") << "\n";
    return out.str();
}

SnrMatrix build_snr_matrix(const Scenario& s) {
    return build_snr_matrix(s.track(), s.user_grid(), s.gain, s.link, s.n_slots);
}

} // namespace satnoma
