#include "satnoma/noma.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numeric>

#include "satnoma/errors.hpp"

namespace satnoma {

namespace {

constexpr double kLn2 = 0.6931471805599453;

void check_snr_vector(const SnrVector& rho) {
    if (rho.empty()) throw DomainError("SNR vector must not be empty");
    for (double v : rho) {
        if (!std::isfinite(v) || v < 0.0)
            throw DomainError("SNR entries must be finite and >= 0");
    }
}

} // namespace

RateVector rates_for_order(const SnrVector& rho) {
    check_snr_vector(rho);
    RateVector rates(rho.size());
    double interference = 0.0;
    for (std::size_t i = rho.size(); i-- > 0;) {
        rates[i] = std::log2(1.0 + rho[i] / (1.0 + interference));
        interference += rho[i];
    }
    return rates;
}

double sum_rate(const SnrVector& rho) {
    check_snr_vector(rho);
    return std::log2(1.0 + std::accumulate(rho.begin(), rho.end(), 0.0));
}

std::vector<std::size_t> optimal_sic_order(const SnrVector& rho) {
    check_snr_vector(rho);
    std::vector<std::size_t> order(rho.size());
    std::iota(order.begin(), order.end(), std::size_t{0});
    std::stable_sort(order.begin(), order.end(),
                     [&rho](std::size_t i, std::size_t j) { return rho[i] > rho[j]; });
    return order;
}

double phi(std::size_t n, std::size_t n_users, double r) {
    if (n < 1 || n > n_users) throw DomainError("phi: index n must be in [1, N]");
    const double tail = static_cast<double>(n_users - n);
    return std::exp2(tail * r) * std::expm1(r * kLn2);
}

double solve_phi_root(std::size_t n, std::size_t n_users, double rho_n) {
    if (n < 1 || n > n_users) throw DomainError("solve_phi_root: index n must be in [1, N]");
    if (!(rho_n > 0.0) || !std::isfinite(rho_n))
        throw DomainError("solve_phi_root: rho must be > 0");

    const double hi0 = std::log2(1.0 + rho_n);
    if (n == n_users) return hi0;

    const double tail = static_cast<double>(n_users - n);
    const double log2_rho = std::log2(rho_n);
    const auto g = [&](double r) {
        return tail * r + std::log2(std::expm1(r * kLn2)) - log2_rho;
    };

    double lo = 0.0;
    double hi = hi0;
    for (int iter = 0; iter < 200 && hi - lo > 1e-12 * hi; ++iter) {
        const double mid = 0.5 * (lo + hi);
        (g(mid) < 0.0 ? lo : hi) = mid;
    }
    return 0.5 * (lo + hi);
}

ModerationResult moderate_powers(const SnrVector& rho) {
    check_snr_vector(rho);
    const std::size_t n_users = rho.size();
    for (std::size_t i = 0; i < n_users; ++i) {
        if (!(rho[i] > 0.0))
            throw DomainError("moderate_powers: entries must be > 0 (drop silent users first)");
        if (i > 0 && rho[i - 1] < rho[i])
            throw DomainError("moderate_powers: input must be nonincreasing");
    }

    ModerationResult result;
    result.per_user_roots.resize(n_users);
    result.r_tilde = std::numeric_limits<double>::infinity();
    for (std::size_t i = 0; i < n_users; ++i) {
        const double root = solve_phi_root(i + 1, n_users, rho[i]);
        result.per_user_roots[i] = root;
        if (root < result.r_tilde) {
            result.r_tilde = root;
            result.binding_index = i;
        }
    }

    result.rho_tilde.resize(n_users);
    for (std::size_t i = 0; i < n_users; ++i) {
        // The binding user's phi equals rho up to root-finding error; clamping
        // keeps the reduced powers feasible exactly.
        result.rho_tilde[i] = std::min(phi(i + 1, n_users, result.r_tilde), rho[i]);
    }
    return result;
}

} // namespace satnoma
