#pragma once

#include <cstddef>
#include <vector>

namespace satnoma {

/// Linear SNRs, one entry per user; index order is the SIC decode order where
/// an order is implied (index 0 decoded first, so it sees all later entries
/// as interference).
using SnrVector = std::vector<double>;

/// Spectral efficiencies in bit/s/Hz, aligned with the SnrVector that
/// produced them.
using RateVector = std::vector<double>;

/// Output of power moderation over a nonincreasing SNR vector.
struct ModerationResult {
    double r_tilde = 0.0;                ///< Common per-user rate after moderation.
    SnrVector rho_tilde;                 ///< Reduced SNRs, still nonincreasing.
    std::vector<double> per_user_roots;  ///< Equal-rate solution of each user alone.
    std::size_t binding_index = 0;       ///< 0-based position attaining the minimum root.
};

/// Per-user rates R_n = log2(1 + rho_n / (1 + sum of later entries)),
/// computed right-to-left with a running interference total.
RateVector rates_for_order(const SnrVector& rho);

/// log2(1 + sum rho); the total is the same for every decode order.
double sum_rate(const SnrVector& rho);

/// Indices sorting rho nonincreasing; stable, so ties keep original order.
/// Decoding in this order maximizes the minimum rate over all orders.
std::vector<std::size_t> optimal_sic_order(const SnrVector& rho);

/// phi_n(R) = 2^((N-n+1)R) - 2^((N-n)R), n 1-based; evaluated in factored
/// form for accuracy at small R.
double phi(std::size_t n, std::size_t n_users, double r);

/// Unique R > 0 with phi_n(R) = rho_n, via bisection on the monotone
/// log-domain form (N-n)*R + log2(2^R - 1) - log2(rho_n) to relative
/// tolerance 1e-12. n is 1-based. Closed form log2(1 + rho_n) when n = N.
double solve_phi_root(std::size_t n, std::size_t n_users, double rho_n);

/// Power moderation: reduces a nonincreasing positive SNR vector so every
/// user achieves the same rate r_tilde = min over users of solve_phi_root.
/// Throws DomainError on unsorted input or nonpositive entries.
ModerationResult moderate_powers(const SnrVector& rho);

} // namespace satnoma
