#pragma once

#include <cstddef>
#include <cstdint>
#include <vector>

#include "satnoma/linkbudget.hpp"
#include "satnoma/noma.hpp"
#include "satnoma/rng.hpp"

namespace satnoma {

enum class TieBreak { by_index, random };

/// Knobs of the multi-slot rate-equalization scheduler.
struct SchedulerConfig {
    std::size_t n_sic = 4;        ///< Users decoded per slot.
    bool moderate = false;        ///< Apply per-slot power moderation.
    bool permute_slots = false;   ///< Visit slots of each cycle in random order.
    std::size_t n_rep = 100;      ///< Number of periodic cycle repetitions.
    std::uint64_t seed = 1;
    TieBreak tie_break = TieBreak::by_index;
    bool reset_each_cycle = false; ///< Restart cumulative totals at each cycle.
};

/// Outcome of one slot: who transmitted and at what rate.
struct SlotDecision {
    std::size_t slot_index = 0;
    std::vector<std::size_t> selected;   ///< Ascending user ids.
    std::vector<std::size_t> sic_order;  ///< User ids, decoded-first first.
    std::vector<double> rho_used;        ///< Nonincreasing SNRs in decode order.
    std::vector<double> rates;           ///< bit/s/Hz, aligned with sic_order.
};

/// Full simulation output.
struct SimResult {
    std::vector<double> cumulative;      ///< Per-user total spectral efficiency.
    std::vector<double> throughput_bps;  ///< cumulative * B / (T * n_rep).
    std::vector<SlotDecision> per_slot;
    double sum_rate_bound_bps = 0.0;     ///< (B/T) * sum over slots of log2(1 + slot total SNR).
};

/// The n_sic users with the smallest cumulative totals among those with
/// rho > 0 this slot, returned as ascending ids. Ties are broken by lowest id
/// or by a seeded shuffle. `rng` may be null for TieBreak::by_index.
std::vector<std::size_t> select_users(const std::vector<double>& cumulative,
                                      const std::vector<double>& rho_slot,
                                      std::size_t n_sic, TieBreak tie_break,
                                      Rng* rng);

/// Rates for one slot: decode strongest-first, optionally moderating powers
/// to equalize rates. `rho_selected` is aligned with `selected`.
SlotDecision run_slot(std::size_t slot_index,
                      const std::vector<std::size_t>& selected,
                      const std::vector<double>& rho_selected, bool moderate);

/// Runs n_rep cycles over all slots, accumulating per-user rates.
/// Deterministic for fixed inputs and seed. `bandwidth_hz` only scales the
/// reported bit/s figures.
SimResult run(const SnrMatrix& snr, const SchedulerConfig& cfg, double bandwidth_hz);

/// Slot-averaged full-SIC sum rate (B/T) * sum over slots of
/// log2(1 + total slot SNR), in bit/s.
double sum_rate_bound_bps(const SnrMatrix& snr, double bandwidth_hz);

} // namespace satnoma
