#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "satnoma/scenario.hpp"

namespace satnoma::cli {

struct SnrOptions {
    std::string config_path;
    std::string out_path = "-"; ///< "-" writes to stdout.
    bool probe9 = false;        ///< Emit only the nine probe locations.
};

struct SimulateOptions {
    std::string config_path;
    std::string out_path;
    std::string summary_path;   ///< Empty derives "<out>.json".
    std::optional<std::size_t> n_sic;
    std::optional<bool> moderate;
    std::optional<bool> permute;
    std::optional<std::uint64_t> seed;
};

struct SweepOptions {
    std::string config_path;
    std::string out_path;
    std::string n_sic_list = "2,3,4,5,10,20";
    std::string moderate_mode = "off"; ///< off | on | both
    std::string permute_mode = "off";  ///< off | on | both
    std::optional<std::uint64_t> seed;
};

struct VerifyOptions {
    std::size_t trials = 1000;
    std::size_t max_users = 6;
    std::size_t samples = 10000;
    std::size_t swap_trials = 10000;
    std::size_t mod_vectors = 500;
    std::size_t mod_max_users = 16;
    std::uint64_t seed = 1;
    std::string order_policy = "optimal"; ///< "ascending" is a self-test fixture.
};

/// One sweep combination, throughput statistics in bit/s.
struct SweepRow {
    std::size_t n_sic = 0;
    bool moderate = false;
    bool permute = false;
    double min_bps = 0.0;
    double mean_bps = 0.0;
    double max_bps = 0.0;
    double sum_bps = 0.0;
};

struct SweepResult {
    std::vector<SweepRow> rows;
    double sum_rate_bound_bps = 0.0;
};

/// Worker pool size: SATNOMA_THREADS when set and nonzero, else the hardware
/// concurrency; always >= 1.
unsigned sweep_thread_count();

/// Runs every (n_sic, moderate, permute) combination concurrently against the
/// scenario's SNR matrix.
SweepResult run_sweep(const Scenario& scenario, const std::vector<std::size_t>& n_sic_list,
                      const std::vector<bool>& moderate_modes,
                      const std::vector<bool>& permute_modes, unsigned n_threads);

/// SNR trace CSV: header `slot,t_seconds,user_0,...`, one row per slot,
/// SNR in dB with 6 decimals.
int cmd_snr(const SnrOptions& opts);

/// Per-user throughput CSV `user,lat,lon,throughput_bps` plus a summary JSON
/// {min, max, mean, sum, sum_rate_bound, params}.
int cmd_simulate(const SimulateOptions& opts);

/// Sweep CSV `n_sic,moderate,permute,min_bps,mean_bps,max_bps,sum_bps` with a
/// trailing `# sum_rate_bound_bps=` comment line.
int cmd_sweep(const SweepOptions& opts);

/// Runs the brute-force checks and prints their JSON reports; returns 1 if
/// any check fails.
int cmd_verify(const VerifyOptions& opts);

} // namespace satnoma::cli
