#pragma once

#include <cstddef>
#include <cstdint>
#include <functional>
#include <string>
#include <utility>
#include <vector>

#include "satnoma/noma.hpp"
#include "satnoma/rng.hpp"

namespace satnoma::oracle {

/// Outcome of a randomized or exhaustive verification pass.
///
/// Each check defines a per-trial margin that is >= 0 (up to rounding) when
/// the claim under test holds; `worst_gap` is the most negative margin seen
/// and a trial counts as a failure when its margin drops below the check's
/// tolerance.
struct VerifyReport {
    std::size_t trials = 0;
    std::size_t failures = 0;
    double worst_gap = 0.0;
    std::vector<std::string> failing_inputs;

    bool ok() const { return failures == 0; }
};

/// Policy under test: maps an SNR vector to a decode order.
using OrderPolicy = std::function<std::vector<std::size_t>(const SnrVector&)>;

/// Brute force: evaluates min rate under every decode order (length <= 8)
/// and returns the best order with its value.
std::pair<std::vector<std::size_t>, double> exhaustive_max_min(const SnrVector& rho);

/// Draws random SNR vectors (length in [2, max_users], entries log-uniform in
/// [0.01, 100]) and checks that `policy` attains the exhaustive max-min on
/// each; margin = policy min rate - exhaustive best, tolerance 1e-12.
VerifyReport check_order_agreement(std::size_t trials, std::size_t max_users,
                                   std::uint64_t seed,
                                   const OrderPolicy& policy = optimal_sic_order);

/// For random vectors and index pairs a < b with rho_a < rho_b, swapping the
/// two entries must not lower the minimum rate; tolerance 1e-12.
VerifyReport check_swap_monotonicity(std::size_t trials, std::size_t max_users,
                                     std::uint64_t seed);

/// Samples feasible reduced vectors (each coordinate uniform in (0, rho_n],
/// then sorted nonincreasing) and checks none beats the moderated common rate
/// by more than 1e-9. `rho` must be nonincreasing and positive.
VerifyReport probe_moderation_optimality(const SnrVector& rho, std::size_t samples,
                                         Rng& rng);

/// probe_moderation_optimality over `vectors` random nonincreasing vectors
/// with length in [2, max_users].
VerifyReport probe_moderation_random(std::size_t vectors, std::size_t samples_per_vector,
                                     std::size_t max_users, std::uint64_t seed);

/// Checks sum of phi_n(R) = 2^(NR) - 1 and that the phi vector yields the
/// constant rate vector R, for N in [1, max_n] and each R in r_grid;
/// relative tolerance 1e-9.
VerifyReport check_phi_identity(std::size_t max_n, const std::vector<double>& r_grid);

} // namespace satnoma::oracle
