#include <algorithm>
#include <cmath>
#include <vector>

#include "doctest.h"

#include "satnoma/errors.hpp"
#include "satnoma/linkbudget.hpp"
#include "satnoma/scenario.hpp"
#include "satnoma/units.hpp"

using namespace satnoma;
using doctest::Approx;

TEST_CASE("derived pattern constants X and Y") {
    const GainPattern p;
    CHECK(p.x_dbi() == Approx(47.09387817421699).epsilon(1e-12));
    CHECK(p.y_deg() == Approx(76.51650538363437).epsilon(1e-12));
}

TEST_CASE("gain branches evaluate to frozen values") {
    const GainPattern p;
    CHECK(gain_dbi(p, 0.0) == Approx(36.0));
    CHECK(gain_dbi(p, 0.875) == Approx(35.25).epsilon(1e-12));
    CHECK(gain_dbi(p, 1.75) == Approx(33.0).epsilon(1e-12));
    CHECK(gain_dbi(p, 3.0) == Approx(27.183673469387756).epsilon(1e-12));
    CHECK(gain_dbi(p, 4.515) == Approx(16.0308).epsilon(1e-9)); // main-lobe edge
    CHECK(gain_dbi(p, 4.6) == Approx(21.0).epsilon(1e-12));     // near-in sidelobe, z = 1
    CHECK(gain_dbi(p, 8.0) == Approx(21.0).epsilon(1e-12));     // plateau
    CHECK(gain_dbi(p, 20.0) == Approx(14.568128282617458).epsilon(1e-12));
    CHECK(gain_dbi(p, 80.0) == Approx(p.l_f_dbi));
    CHECK(gain_dbi(p, 120.0) == Approx(p.l_b_dbi));
    CHECK(gain_dbi(p, 180.0) == Approx(p.l_b_dbi));
}

TEST_CASE("gain is continuous where adjacent branches meet by construction") {
    const GainPattern p;
    const double at_plateau_end = gain_dbi(p, p.b * p.psi_b_deg);
    const double just_past = gain_dbi(p, p.b * p.psi_b_deg + 1e-9);
    CHECK(at_plateau_end == Approx(just_past).epsilon(1e-6));
    // X - 25 log10(Y) = L_F by the definition of Y.
    CHECK(p.x_dbi() - 25.0 * std::log10(p.y_deg()) == Approx(p.l_f_dbi).epsilon(1e-9));
}

TEST_CASE("gain never exceeds the boresight maximum") {
    const GainPattern p;
    for (int i = 0; i <= 18000; ++i) {
        const double psi = 0.01 * i;
        REQUIRE(gain_dbi(p, psi) <= p.g_max_dbi + 1e-12);
    }
}

TEST_CASE("gain rejects angles outside [0, 180]") {
    const GainPattern p;
    CHECK_THROWS_AS(gain_dbi(p, -0.01), DomainError);
    CHECK_THROWS_AS(gain_dbi(p, 180.01), DomainError);
}

TEST_CASE("pattern validation names the offending key") {
    GainPattern p;
    p.psi_b_deg = 0.0;
    CHECK_THROWS_WITH_AS(p.validate("gain."), doctest::Contains("gain.psi_b"), ConfigError);
    p = GainPattern{};
    p.z = 0.5;
    CHECK_THROWS_WITH_AS(p.validate("gain."), doctest::Contains("gain.z"), ConfigError);
    p = GainPattern{};
    p.a = 4.0; // a > b/2 breaks the branch ordering
    CHECK_THROWS_AS(p.validate(), ConfigError);
    CHECK_NOTHROW(GainPattern{}.validate());
}

TEST_CASE("noise power is kTB") {
    const LinkConfig link;
    CHECK(noise_power_w(link) == Approx(4.002e-14).epsilon(1e-12));
    CHECK(watts_to_dbm(noise_power_w(link)) == Approx(-103.977229157).epsilon(1e-9));
}

TEST_CASE("received power and SNR at nadir match the frozen budget") {
    const LinkConfig link;
    const GainPattern p;
    const double p_rx = received_power_w(link, p, 0.0, 550.0);
    CHECK(watts_to_dbm(p_rx) == Approx(-91.177379214).epsilon(1e-9));
    const double rho = snr_linear(link, p, 0.0, 550.0);
    CHECK(linear_to_db(rho) == Approx(12.799849943).epsilon(1e-9));
}

TEST_CASE("beam-edge SNR sits about 3 dB below boresight") {
    const LinkConfig link;
    const GainPattern p;
    // gamma chosen so the off-axis angle equals psi_b.
    const double gamma = deg_to_rad(0.151128446);
    const double d = slant_range_km(gamma, 550.0);
    const double psi = off_axis_angle_deg(gamma, d);
    CHECK(psi == Approx(1.75).epsilon(1e-6));
    CHECK(linear_to_db(snr_linear(link, p, psi, d)) == Approx(9.795447820).epsilon(1e-8));
}

TEST_CASE("snr_at ties geometry and budget together") {
    const Scenario s = Scenario::defaults();
    const GroundTrack track = s.track();
    const GeoPoint center{0.0, 0.0};
    const double mid = track.passage_duration_s / 2.0;
    CHECK(linear_to_db(snr_at(track, center, s.gain, s.link, mid)) ==
          Approx(12.799849943).epsilon(1e-9));
}

TEST_CASE("SNR trace of the center user is time-symmetric") {
    const Scenario s = Scenario::defaults();
    const GroundTrack track = s.track();
    const GeoPoint center{0.0, 0.0};
    const double T = track.passage_duration_s;
    for (int i = 0; i <= 50; ++i) {
        const double t = T * i / 100.0;
        const double fwd = snr_at(track, center, s.gain, s.link, t);
        const double rev = snr_at(track, center, s.gain, s.link, T - t);
        REQUIRE(fwd == Approx(rev).epsilon(1e-9));
    }
}

TEST_CASE("mirrored users see time-reversed traces") {
    const Scenario s = Scenario::defaults();
    const GroundTrack track = s.track();
    const GeoPoint u{0.07, 0.05};
    const GeoPoint m{-0.07, -0.05};
    const double T = track.passage_duration_s;
    for (int i = 0; i <= 20; ++i) {
        const double t = T * i / 20.0;
        REQUIRE(snr_at(track, u, s.gain, s.link, t) ==
                Approx(snr_at(track, m, s.gain, s.link, T - t)).epsilon(1e-9));
    }
}

TEST_CASE("SNR matrix shape and midpoint sampling") {
    const Scenario s = Scenario::defaults();
    const GroundTrack track = s.track();
    const std::vector<GeoPoint> users = {{0.0, 0.0}, {0.05, 0.05}};
    const SnrMatrix snr = build_snr_matrix(track, users, s.gain, s.link, 10);
    CHECK(snr.n_users == 2);
    CHECK(snr.n_slots == 10);
    CHECK(snr.slot_duration_s == Approx(track.passage_duration_s / 10.0));
    const double t3 = 3.5 * snr.slot_duration_s;
    CHECK(snr.at(0, 3) == Approx(snr_at(track, users[0], s.gain, s.link, t3)).epsilon(1e-15));
    CHECK(snr.at(1, 3) == Approx(snr_at(track, users[1], s.gain, s.link, t3)).epsilon(1e-15));
}

TEST_CASE("per-slot SNR drift is bounded over the default grid") {
    const Scenario s = Scenario::defaults();
    const GroundTrack track = s.track();
    const std::vector<GeoPoint> users = s.user_grid();
    const double T = track.passage_duration_s;
    const std::size_t n_slots = 100;

    const auto worst_drift_db = [&](const GeoPoint& u) {
        double worst = 0.0;
        double prev = linear_to_db(snr_at(track, u, s.gain, s.link, 0.0));
        for (std::size_t k = 1; k <= n_slots; ++k) {
            const double cur =
                linear_to_db(snr_at(track, u, s.gain, s.link, T * double(k) / double(n_slots)));
            worst = std::max(worst, std::abs(cur - prev));
            prev = cur;
        }
        return worst;
    };

    std::vector<double> drift;
    drift.reserve(users.size());
    for (const auto& u : users) drift.push_back(worst_drift_db(u));

    std::sort(drift.begin(), drift.end());
    CHECK(drift.back() <= 0.30);            // corner users at the pass edges
    CHECK(drift[drift.size() / 2] <= 0.20); // bulk of the grid
    // The 16x16 grid has no exact center user; probe the region center itself.
    CHECK(worst_drift_db({0.0, 0.0}) <= 0.15);
}
