#include <algorithm>
#include <cmath>
#include <vector>

#include "doctest.h"

#include "satnoma/errors.hpp"
#include "satnoma/noma.hpp"
#include "satnoma/oracle.hpp"
#include "satnoma/rng.hpp"

using namespace satnoma;
using doctest::Approx;

TEST_CASE("exhaustive search finds the descending order on the reference vector") {
    const auto [order, value] = oracle::exhaustive_max_min({10.0, 6.0, 3.0, 1.0});
    CHECK(order == std::vector<std::size_t>{0, 1, 2, 3});
    CHECK(value == Approx(std::log2(21.0 / 11.0)).epsilon(1e-12));

    const auto [rev_order, rev_value] = oracle::exhaustive_max_min({1.0, 3.0, 6.0, 10.0});
    CHECK(rev_order == std::vector<std::size_t>{3, 2, 1, 0});
    CHECK(rev_value == Approx(value).epsilon(1e-12));
}

TEST_CASE("exhaustive search rejects oversized and empty input") {
    CHECK_THROWS_AS(oracle::exhaustive_max_min(SnrVector(9, 1.0)), DomainError);
    CHECK_THROWS_AS(oracle::exhaustive_max_min({}), DomainError);
    CHECK_NOTHROW(oracle::exhaustive_max_min(SnrVector(8, 1.0)));
}

TEST_CASE("descending order matches the exhaustive optimum on random vectors") {
    const auto report = oracle::check_order_agreement(300, 6, 1);
    CHECK(report.trials == 300);
    CHECK(report.ok());
    CHECK(report.worst_gap >= -1e-12);
    CHECK(report.failing_inputs.empty());
}

TEST_CASE("ascending order fails the agreement check (negative control)") {
    const oracle::OrderPolicy ascending = [](const SnrVector& rho) {
        auto order = optimal_sic_order(rho);
        std::reverse(order.begin(), order.end());
        return order;
    };
    const auto report = oracle::check_order_agreement(100, 6, 1, ascending);
    CHECK_FALSE(report.ok());
    CHECK(report.failures > 90); // distinct random entries essentially always lose
    CHECK(report.worst_gap < -1e-3);
    CHECK(report.failing_inputs.size() == 32); // capped sample of failures
}

TEST_CASE("order agreement validates max_users") {
    CHECK_THROWS_AS(oracle::check_order_agreement(1, 1, 1), DomainError);
    CHECK_THROWS_AS(oracle::check_order_agreement(1, 9, 1), DomainError);
}

TEST_CASE("swapping a weaker-earlier pair never lowers the min rate") {
    const auto report = oracle::check_swap_monotonicity(2000, 6, 3);
    CHECK(report.trials == 2000);
    CHECK(report.ok());
    CHECK(report.worst_gap >= -1e-12);
}

TEST_CASE("no sampled feasible power vector beats the moderated rate") {
    Rng rng = Rng::stream(5, 13);
    const auto report = oracle::probe_moderation_optimality({10.0, 6.0, 3.0, 1.0}, 5000, rng);
    CHECK(report.trials == 5000);
    CHECK(report.ok());
}

TEST_CASE("moderation probing holds across random vectors") {
    const auto report = oracle::probe_moderation_random(50, 200, 8, 5);
    CHECK(report.trials == 50 * 200);
    CHECK(report.ok());
}

TEST_CASE("the moderated vector itself is a feasible equal-rate point") {
    const ModerationResult m = moderate_powers({10.0, 6.0, 3.0, 1.0});
    const auto rates = rates_for_order(m.rho_tilde);
    const double probe_min = *std::min_element(rates.begin(), rates.end());
    CHECK(probe_min == Approx(m.r_tilde).epsilon(1e-11));
}

TEST_CASE("phi identity holds over the full grid") {
    const auto report =
        oracle::check_phi_identity(32, {0.125, 0.25, 0.5, 1.0, 2.0, 3.0, 4.0});
    CHECK(report.trials == 32 * 7);
    CHECK(report.ok());
    CHECK(report.worst_gap >= -1e-9);
}
