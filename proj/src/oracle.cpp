#include "satnoma/oracle.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <numeric>

#include "satnoma/errors.hpp"

namespace satnoma::oracle {

namespace {

std::string format_vector(const SnrVector& rho) {
    std::string out = "(";
    char buf[32];
    for (std::size_t i = 0; i < rho.size(); ++i) {
        std::snprintf(buf, sizeof(buf), "%.17g", rho[i]);
        if (i) out += ", ";
        out += buf;
    }
    return out + ")";
}

SnrVector random_log_uniform(Rng& rng, std::size_t len) {
    SnrVector rho(len);
    for (double& v : rho) v = std::pow(10.0, rng.next_in(-2.0, 2.0));
    return rho;
}

double min_rate(const SnrVector& rho) {
    const auto rates = rates_for_order(rho);
    return *std::min_element(rates.begin(), rates.end());
}

void record(VerifyReport& report, double margin, double tolerance,
            const std::string& input) {
    ++report.trials;
    report.worst_gap = std::min(report.worst_gap, margin);
    if (margin < -tolerance) {
        ++report.failures;
        if (report.failing_inputs.size() < 32) report.failing_inputs.push_back(input);
    }
}

} // namespace

std::pair<std::vector<std::size_t>, double> exhaustive_max_min(const SnrVector& rho) {
    if (rho.size() > 8)
        throw DomainError("exhaustive_max_min: factorial enumeration capped at length 8");
    if (rho.empty()) throw DomainError("exhaustive_max_min: empty SNR vector");

    std::vector<std::size_t> perm(rho.size());
    std::iota(perm.begin(), perm.end(), std::size_t{0});
    std::vector<std::size_t> best_order = perm;
    double best_value = -1.0;
    SnrVector arranged(rho.size());
    do {
        for (std::size_t i = 0; i < perm.size(); ++i) arranged[i] = rho[perm[i]];
        const double value = min_rate(arranged);
        if (value > best_value) {
            best_value = value;
            best_order = perm;
        }
    } while (std::next_permutation(perm.begin(), perm.end()));
    return {best_order, best_value};
}

VerifyReport check_order_agreement(std::size_t trials, std::size_t max_users,
                                   std::uint64_t seed, const OrderPolicy& policy) {
    if (max_users < 2 || max_users > 8)
        throw DomainError("check_order_agreement: max_users must be in [2, 8]");
    Rng rng = Rng::stream(seed, 10);
    VerifyReport report;
    for (std::size_t trial = 0; trial < trials; ++trial) {
        const std::size_t len = 2 + rng.next_below(max_users - 1);
        const SnrVector rho = random_log_uniform(rng, len);
        const auto order = policy(rho);
        SnrVector arranged(len);
        for (std::size_t i = 0; i < len; ++i) arranged[i] = rho[order[i]];
        const double policy_value = min_rate(arranged);
        const double best_value = exhaustive_max_min(rho).second;
        record(report, policy_value - best_value, 1e-12, "rho=" + format_vector(rho));
    }
    return report;
}

VerifyReport check_swap_monotonicity(std::size_t trials, std::size_t max_users,
                                     std::uint64_t seed) {
    if (max_users < 2)
        throw DomainError("check_swap_monotonicity: max_users must be >= 2");
    Rng rng = Rng::stream(seed, 11);
    VerifyReport report;
    for (std::size_t trial = 0; trial < trials; ++trial) {
        const std::size_t len = 2 + rng.next_below(max_users - 1);
        SnrVector rho = random_log_uniform(rng, len);
        std::size_t a = rng.next_below(len);
        std::size_t b = rng.next_below(len);
        if (a == b) b = (b + 1) % len;
        if (a > b) std::swap(a, b);
        if (rho[a] == rho[b]) rho[a] *= 0.5;
        if (rho[a] > rho[b]) std::swap(rho[a], rho[b]);

        const double before = min_rate(rho);
        std::swap(rho[a], rho[b]);
        const double after = min_rate(rho);
        std::swap(rho[a], rho[b]);

        char buf[64];
        std::snprintf(buf, sizeof(buf), " a=%zu b=%zu", a, b);
        record(report, after - before, 1e-12, "rho=" + format_vector(rho) + buf);
    }
    return report;
}

VerifyReport probe_moderation_optimality(const SnrVector& rho, std::size_t samples,
                                         Rng& rng) {
    const ModerationResult mod = moderate_powers(rho);
    VerifyReport report;
    SnrVector probe(rho.size());
    for (std::size_t sample = 0; sample < samples; ++sample) {
        for (std::size_t i = 0; i < rho.size(); ++i)
            probe[i] = rho[i] * rng.next_double_open_low();
        std::sort(probe.begin(), probe.end(), std::greater<>());
        record(report, mod.r_tilde - min_rate(probe), 1e-9,
               "rho=" + format_vector(rho) + " probe=" + format_vector(probe));
    }
    return report;
}

VerifyReport probe_moderation_random(std::size_t vectors, std::size_t samples_per_vector,
                                     std::size_t max_users, std::uint64_t seed) {
    if (max_users < 2)
        throw DomainError("probe_moderation_random: max_users must be >= 2");
    Rng vec_rng = Rng::stream(seed, 12);
    Rng probe_rng = Rng::stream(seed, 13);
    VerifyReport report;
    for (std::size_t v = 0; v < vectors; ++v) {
        const std::size_t len = 2 + vec_rng.next_below(max_users - 1);
        SnrVector rho = random_log_uniform(vec_rng, len);
        std::sort(rho.begin(), rho.end(), std::greater<>());
        const VerifyReport sub = probe_moderation_optimality(rho, samples_per_vector, probe_rng);
        report.trials += sub.trials;
        report.failures += sub.failures;
        report.worst_gap = std::min(report.worst_gap, sub.worst_gap);
        for (const auto& input : sub.failing_inputs)
            if (report.failing_inputs.size() < 32) report.failing_inputs.push_back(input);
    }
    return report;
}

VerifyReport check_phi_identity(std::size_t max_n, const std::vector<double>& r_grid) {
    VerifyReport report;
    for (std::size_t n_users = 1; n_users <= max_n; ++n_users) {
        for (const double r : r_grid) {
            SnrVector rho(n_users);
            double total = 0.0;
            for (std::size_t i = 0; i < n_users; ++i) {
                rho[i] = phi(i + 1, n_users, r);
                total += rho[i];
            }
            const double expected = std::exp2(static_cast<double>(n_users) * r) - 1.0;
            const double sum_err = std::abs(total - expected) / expected;

            const auto rates = rates_for_order(rho);
            double rate_err = 0.0;
            for (const double rate : rates)
                rate_err = std::max(rate_err, std::abs(rate - r) / r);

            char buf[48];
            std::snprintf(buf, sizeof(buf), "N=%zu R=%.17g", n_users, r);
            record(report, -std::max(sum_err, rate_err), 1e-9, buf);
        }
    }
    return report;
}

} // namespace satnoma::oracle
