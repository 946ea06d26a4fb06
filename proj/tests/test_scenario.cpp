#include <cmath>
#include <cstdio>
#include <fstream>
#include <string>
#include <vector>

#include "doctest.h"

#include "satnoma/errors.hpp"
#include "satnoma/scenario.hpp"
#include "satnoma/units.hpp"

using namespace satnoma;
using doctest::Approx;

TEST_CASE("defaults derive the longitude half-span from the inclination") {
    const Scenario s = Scenario::defaults();
    CHECK(s.region.delta_lon_deg == Approx(0.13270448216204098).epsilon(1e-15));
    CHECK(s.n_users() == 256);
    CHECK_NOTHROW(s.validate());
    CHECK(s.track().passage_duration_s == Approx(4.984920423367).epsilon(1e-10));
}

TEST_CASE("user grid covers the region corner to corner, row-major") {
    const Scenario s = Scenario::defaults();
    const auto users = s.user_grid();
    REQUIRE(users.size() == 256);
    CHECK(users.front().lat_deg == Approx(-0.1).epsilon(1e-15));
    CHECK(users.front().lon_deg == Approx(-s.region.delta_lon_deg).epsilon(1e-15));
    CHECK(users.back().lat_deg == Approx(0.1).epsilon(1e-15));
    CHECK(users.back().lon_deg == Approx(s.region.delta_lon_deg).epsilon(1e-15));
    CHECK(users[1].lat_deg == Approx(users[0].lat_deg)); // same row
    CHECK(users[16].lat_deg > users[0].lat_deg);         // next row
}

TEST_CASE("degenerate grids collapse to the center line") {
    Scenario s = Scenario::defaults();
    s.grid_rows = 1;
    s.grid_cols = 3;
    const auto users = s.user_grid();
    REQUIRE(users.size() == 3);
    for (const auto& u : users) CHECK(u.lat_deg == Approx(0.0));
    CHECK(users[1].lon_deg == Approx(0.0));
}

TEST_CASE("probe grid is the nine region anchor points") {
    const Scenario s = Scenario::defaults();
    const auto probes = probe_grid(s.region);
    REQUIRE(probes.size() == 9);
    CHECK(probes[0].lat_deg == Approx(-0.1));
    CHECK(probes[0].lon_deg == Approx(-s.region.delta_lon_deg));
    CHECK(probes[4].lat_deg == Approx(0.0));
    CHECK(probes[4].lon_deg == Approx(0.0));
    CHECK(probes[8].lat_deg == Approx(0.1));
    CHECK(probes[8].lon_deg == Approx(s.region.delta_lon_deg));
}

TEST_CASE("empty config text yields the defaults") {
    const Scenario parsed = parse_scenario("");
    CHECK(serialize_scenario(parsed) == serialize_scenario(Scenario::defaults()));
}

TEST_CASE("parser accepts comments, blank lines, and whitespace") {
    const Scenario s = parse_scenario(
        "# scenario override\n"
        "\n"
        "  sim.n_sic   =  5   # decode five users\n"
        "sim.moderate = true\n"
        "link.p_tx = 2.5\n");
    CHECK(s.sched.n_sic == 5);
    CHECK(s.sched.moderate);
    CHECK(s.link.p_tx_w == Approx(2.5));
}

TEST_CASE("parser rejects unknown keys, malformed lines, and bad values") {
    CHECK_THROWS_WITH_AS(parse_scenario("sim.bogus = 1\n"),
                         doctest::Contains("sim.bogus"), ConfigError);
    CHECK_THROWS_AS(parse_scenario("just some words\n"), ConfigError);
    CHECK_THROWS_AS(parse_scenario("sim.n_sic = \n"), ConfigError);
    CHECK_THROWS_AS(parse_scenario("sim.n_sic = four\n"), ConfigError);
    CHECK_THROWS_AS(parse_scenario("sim.n_sic = -2\n"), ConfigError);
    CHECK_THROWS_AS(parse_scenario("sim.moderate = maybe\n"), ConfigError);
    CHECK_THROWS_AS(parse_scenario("sim.tie_break = coin\n"), ConfigError);
    CHECK_THROWS_AS(parse_scenario("track.altitude = 550km\n"), ConfigError);
}

TEST_CASE("delta_lon follows delta_lat and inclination unless given") {
    const Scenario derived = parse_scenario(
        "track.delta_lat = 0.2\n"
        "track.inclination = 45\n");
    CHECK(derived.region.delta_lon_deg == Approx(0.2).epsilon(1e-12));

    const Scenario pinned = parse_scenario(
        "track.delta_lat = 0.2\n"
        "track.inclination = 45\n"
        "track.delta_lon = 0.05\n");
    CHECK(pinned.region.delta_lon_deg == Approx(0.05).epsilon(1e-15));
}

TEST_CASE("serialize then parse is the identity") {
    Scenario s = Scenario::defaults();
    s.region.center_lat_deg = 12.3456789012345;
    s.inclination_deg = 37.5;
    s.region.delta_lon_deg = 0.077;
    s.gain.psi_b_deg = 2.125;
    s.link.freq_hz = 13.7e9;
    s.grid_rows = 5;
    s.sched.n_sic = 7;
    s.sched.moderate = true;
    s.sched.permute_slots = true;
    s.sched.seed = 987654321;
    s.sched.tie_break = TieBreak::random;
    s.sched.reset_each_cycle = true;

    const std::string text = serialize_scenario(s);
    const Scenario back = parse_scenario(text);
    CHECK(serialize_scenario(back) == text);
    CHECK(back.region.center_lat_deg == s.region.center_lat_deg);
    CHECK(back.region.delta_lon_deg == s.region.delta_lon_deg);
    CHECK(back.link.freq_hz == s.link.freq_hz);
    CHECK(back.sched.seed == s.sched.seed);
    CHECK(back.sched.tie_break == TieBreak::random);
}

TEST_CASE("validation reports dotted key names") {
    Scenario s = Scenario::defaults();
    s.gain.psi_b_deg = 0.0;
    CHECK_THROWS_WITH_AS(s.validate(), doctest::Contains("gain.psi_b"), ConfigError);

    s = Scenario::defaults();
    s.grid_rows = 0;
    CHECK_THROWS_WITH_AS(s.validate(), doctest::Contains("sim.grid_rows"), ConfigError);

    s = Scenario::defaults();
    s.link.bandwidth_hz = -1.0;
    CHECK_THROWS_WITH_AS(s.validate(), doctest::Contains("link.bandwidth"), ConfigError);

    s = Scenario::defaults();
    s.altitude_km = 0.0;
    CHECK_THROWS_WITH_AS(s.validate(), doctest::Contains("track.altitude"), ConfigError);

    s = Scenario::defaults();
    s.n_slots = 0;
    CHECK_THROWS_WITH_AS(s.validate(), doctest::Contains("sim.n_slots"), ConfigError);
}

TEST_CASE("load_scenario reports missing files as I/O errors") {
    CHECK_THROWS_AS(load_scenario("/nonexistent/path/to/config.cfg"), IoError);
}

TEST_CASE("load_scenario validates the parsed file") {
    const std::string path = "bad_scenario_tmp.cfg";
    {
        std::ofstream out(path);
        out << "gain.psi_b = 0\n";
    }
    CHECK_THROWS_WITH_AS(load_scenario(path), doctest::Contains("gain.psi_b"), ConfigError);
    std::remove(path.c_str());
}

TEST_CASE("scenario SNR matrix matches the direct construction") {
    Scenario s = Scenario::defaults();
    s.grid_rows = 2;
    s.grid_cols = 2;
    s.n_slots = 4;
    const SnrMatrix a = build_snr_matrix(s);
    const SnrMatrix b =
        build_snr_matrix(s.track(), s.user_grid(), s.gain, s.link, s.n_slots);
    CHECK(a.n_users == 4);
    CHECK(a.n_slots == 4);
    CHECK(a.rho == b.rho);
}
