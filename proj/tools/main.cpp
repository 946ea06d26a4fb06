#include <cstdint>
#include <exception>
#include <iostream>

#include "CLI11.hpp"

#include "satnoma/commands.hpp"
#include "satnoma/errors.hpp"

namespace {

constexpr int kExitConfigError = 2;
constexpr int kExitIoError = 3;

} // namespace

int main(int argc, char** argv) {
    using namespace satnoma;

    CLI::App app{"Max-min fair uplink NOMA simulator for a LEO satellite pass"};
    app.require_subcommand(1);

    cli::SnrOptions snr_opts;
    auto* snr = app.add_subcommand("snr", "Export per-user SNR traces as CSV");
    snr->add_option("--config", snr_opts.config_path, "Scenario config file")->required();
    snr->add_option("--out", snr_opts.out_path, "Output CSV path, '-' for stdout");
    snr->add_flag("--probe-9", snr_opts.probe9,
                  "Emit only the nine probe locations instead of the full grid");

    cli::SimulateOptions sim_opts;
    auto* simulate =
        app.add_subcommand("simulate", "Run the scheduler and write per-user throughput");
    simulate->add_option("--config", sim_opts.config_path, "Scenario config file")->required();
    simulate->add_option("--out", sim_opts.out_path, "Per-user CSV path")->required();
    simulate->add_option("--summary", sim_opts.summary_path,
                         "Summary JSON path (default: output path with .json)");
    std::int64_t n_sic_arg = -1;
    simulate->add_option("--n-sic", n_sic_arg, "Users decoded per slot")
        ->check(CLI::PositiveNumber);
    simulate->add_flag_callback("--moderate", [&] { sim_opts.moderate = true; },
                                "Apply power moderation");
    simulate->add_flag_callback("--no-moderate", [&] { sim_opts.moderate = false; },
                                "Disable power moderation");
    simulate->add_flag_callback("--permute", [&] { sim_opts.permute = true; },
                                "Randomly permute slot order each cycle");
    simulate->add_flag_callback("--no-permute", [&] { sim_opts.permute = false; },
                                "Visit slots in natural order");
    std::uint64_t sim_seed = 0;
    auto* sim_seed_opt = simulate->add_option("--seed", sim_seed, "Scheduler RNG seed");

    cli::SweepOptions sweep_opts;
    auto* sweep = app.add_subcommand("sweep", "Run a batch of SIC-order configurations");
    sweep->add_option("--config", sweep_opts.config_path, "Scenario config file")->required();
    sweep->add_option("--out", sweep_opts.out_path, "Sweep CSV path")->required();
    sweep->add_option("--n-sic-list", sweep_opts.n_sic_list,
                      "Comma-separated SIC orders (default 2,3,4,5,10,20)");
    sweep->add_option("--moderate", sweep_opts.moderate_mode, "off, on, or both");
    sweep->add_option("--permute", sweep_opts.permute_mode, "off, on, or both");
    std::uint64_t sweep_seed = 0;
    auto* sweep_seed_opt = sweep->add_option("--seed", sweep_seed, "Scheduler RNG seed");

    cli::VerifyOptions verify_opts;
    auto* verify =
        app.add_subcommand("verify", "Brute-force checks of the ordering and moderation rules");
    verify->add_option("--trials", verify_opts.trials, "Random order-agreement trials");
    verify->add_option("--max-users", verify_opts.max_users,
                       "Largest vector length for exhaustive checks (<= 8)");
    verify->add_option("--samples", verify_opts.samples, "Feasible probes per moderation vector");
    verify->add_option("--swap-trials", verify_opts.swap_trials, "Swap-monotonicity trials");
    verify->add_option("--mod-vectors", verify_opts.mod_vectors, "Moderation vectors to probe");
    verify->add_option("--mod-max-users", verify_opts.mod_max_users,
                       "Largest moderation vector length");
    verify->add_option("--seed", verify_opts.seed, "RNG seed");
    verify->add_option("--order-policy", verify_opts.order_policy,
                       "optimal, or ascending (negative-control self-test)");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e);
        return code == 0 ? 0 : kExitConfigError;
    }

    try {
        if (snr->parsed()) return cli::cmd_snr(snr_opts);
        if (simulate->parsed()) {
            if (n_sic_arg > 0) sim_opts.n_sic = static_cast<std::size_t>(n_sic_arg);
            if (sim_seed_opt->count() > 0) sim_opts.seed = sim_seed;
            return cli::cmd_simulate(sim_opts);
        }
        if (sweep->parsed()) {
            if (sweep_seed_opt->count() > 0) sweep_opts.seed = sweep_seed;
            return cli::cmd_sweep(sweep_opts);
        }
        if (verify->parsed()) return cli::cmd_verify(verify_opts);
    } catch (const ConfigError& e) {
        std::cerr << "config error: " << e.what() << "\n";
        return kExitConfigError;
    } catch (const DomainError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitConfigError;
    } catch (const IoError& e) {
        std::cerr << "io error: " << e.what() << "\n";
        return kExitIoError;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitIoError;
    }
    return 0;
}
