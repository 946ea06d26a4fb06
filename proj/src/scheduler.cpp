#include "satnoma/scheduler.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>

#include "satnoma/errors.hpp"

namespace satnoma {

std::vector<std::size_t> select_users(const std::vector<double>& cumulative,
                                      const std::vector<double>& rho_slot,
                                      std::size_t n_sic, TieBreak tie_break,
                                      Rng* rng) {
    if (cumulative.size() != rho_slot.size())
        throw DomainError("select_users: cumulative and rho_slot lengths differ");
    if (tie_break == TieBreak::random && rng == nullptr)
        throw DomainError("select_users: random tie-break requires an RNG");

    std::vector<std::size_t> eligible;
    eligible.reserve(rho_slot.size());
    for (std::size_t u = 0; u < rho_slot.size(); ++u)
        if (rho_slot[u] > 0.0) eligible.push_back(u);

    if (tie_break == TieBreak::random) rng->shuffle(eligible);
    std::stable_sort(eligible.begin(), eligible.end(),
                     [&cumulative](std::size_t i, std::size_t j) {
                         return cumulative[i] < cumulative[j];
                     });

    const std::size_t count = std::min(n_sic, eligible.size());
    std::vector<std::size_t> selected(eligible.begin(), eligible.begin() + count);
    std::sort(selected.begin(), selected.end());
    return selected;
}

SlotDecision run_slot(std::size_t slot_index,
                      const std::vector<std::size_t>& selected,
                      const std::vector<double>& rho_selected, bool moderate) {
    if (selected.size() != rho_selected.size())
        throw DomainError("run_slot: selected and rho_selected lengths differ");

    SlotDecision dec;
    dec.slot_index = slot_index;
    dec.selected = selected;
    if (selected.empty()) return dec;

    const auto order = optimal_sic_order(rho_selected);
    dec.sic_order.resize(order.size());
    dec.rho_used.resize(order.size());
    for (std::size_t i = 0; i < order.size(); ++i) {
        dec.sic_order[i] = selected[order[i]];
        dec.rho_used[i] = rho_selected[order[i]];
    }
    if (moderate) dec.rho_used = moderate_powers(dec.rho_used).rho_tilde;
    dec.rates = rates_for_order(dec.rho_used);
    return dec;
}

SimResult run(const SnrMatrix& snr, const SchedulerConfig& cfg, double bandwidth_hz) {
    if (cfg.n_sic < 1) throw ConfigError("sim.n_sic must be >= 1");
    if (cfg.n_rep < 1) throw ConfigError("sim.n_rep must be >= 1");
    if (!(bandwidth_hz > 0.0)) throw ConfigError("link.bandwidth must be > 0");

    const std::size_t n_users = snr.n_users;
    const std::size_t n_slots = snr.n_slots;

    Rng perm_rng = Rng::stream(cfg.seed, 0);
    Rng tie_rng = Rng::stream(cfg.seed, 1);

    SimResult result;
    result.cumulative.assign(n_users, 0.0);
    result.per_slot.reserve(n_slots * cfg.n_rep);

    std::vector<std::size_t> slot_order(n_slots);
    std::iota(slot_order.begin(), slot_order.end(), std::size_t{0});
    std::vector<double> rho_slot(n_users);
    std::vector<double> rho_selected;

    for (std::size_t cycle = 0; cycle < cfg.n_rep; ++cycle) {
        if (cfg.reset_each_cycle && cycle > 0)
            std::fill(result.cumulative.begin(), result.cumulative.end(), 0.0);
        if (cfg.permute_slots) {
            std::iota(slot_order.begin(), slot_order.end(), std::size_t{0});
            perm_rng.shuffle(slot_order);
        }
        for (const std::size_t t : slot_order) {
            for (std::size_t u = 0; u < n_users; ++u) rho_slot[u] = snr.at(u, t);
            const auto selected =
                select_users(result.cumulative, rho_slot, cfg.n_sic, cfg.tie_break, &tie_rng);
            rho_selected.resize(selected.size());
            for (std::size_t i = 0; i < selected.size(); ++i)
                rho_selected[i] = rho_slot[selected[i]];
            SlotDecision dec = run_slot(t, selected, rho_selected, cfg.moderate);
            for (std::size_t i = 0; i < dec.sic_order.size(); ++i)
                result.cumulative[dec.sic_order[i]] += dec.rates[i];
            result.per_slot.push_back(std::move(dec));
        }
    }

    const double total_slots = static_cast<double>(n_slots) * static_cast<double>(cfg.n_rep);
    result.throughput_bps.resize(n_users);
    for (std::size_t u = 0; u < n_users; ++u)
        result.throughput_bps[u] = result.cumulative[u] * bandwidth_hz / total_slots;

    result.sum_rate_bound_bps = sum_rate_bound_bps(snr, bandwidth_hz);
    return result;
}

double sum_rate_bound_bps(const SnrMatrix& snr, double bandwidth_hz) {
    double bound = 0.0;
    for (std::size_t t = 0; t < snr.n_slots; ++t) {
        double total = 0.0;
        for (std::size_t u = 0; u < snr.n_users; ++u) total += snr.at(u, t);
        bound += std::log2(1.0 + total);
    }
    return bound * bandwidth_hz / static_cast<double>(snr.n_slots);
}

} // namespace satnoma
