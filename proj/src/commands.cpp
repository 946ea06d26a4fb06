#include "satnoma/commands.hpp"

#include <algorithm>
#include <atomic>
#include <cmath>
#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <iostream>
#include <sstream>
#include <thread>

#include "json.hpp"

#include "satnoma/errors.hpp"
#include "satnoma/oracle.hpp"
#include "satnoma/units.hpp"

namespace satnoma::cli {

namespace {

using nlohmann::json;

std::string format_fixed(double v, int decimals) {
    char buf[64];
    std::snprintf(buf, sizeof(buf), "%.*f", decimals, v);
    return buf;
}

long long to_bps(double v) { return std::llround(v); }

/// Opens `path` for writing, or returns nullptr to mean stdout.
std::ofstream open_output(const std::string& path) {
    std::ofstream out(path, std::ios::binary);
    if (!out) throw IoError("cannot open output file '" + path + "'");
    return out;
}

std::vector<bool> parse_modes(const std::string& mode, const std::string& flag) {
    if (mode == "off") return {false};
    if (mode == "on") return {true};
    if (mode == "both") return {false, true};
    throw ConfigError(flag + ": expected off, on, or both, got '" + mode + "'");
}

std::vector<std::size_t> parse_n_sic_list(const std::string& list) {
    std::vector<std::size_t> values;
    std::stringstream in(list);
    std::string item;
    while (std::getline(in, item, ',')) {
        char* end = nullptr;
        const unsigned long long v = std::strtoull(item.c_str(), &end, 10);
        if (end == item.c_str() || *end != '\0' || v == 0)
            throw ConfigError("n-sic-list: invalid entry '" + item + "'");
        values.push_back(static_cast<std::size_t>(v));
    }
    if (values.empty()) throw ConfigError("n-sic-list: empty list");
    return values;
}

json report_to_json(const oracle::VerifyReport& report) {
    return json{{"trials", report.trials},
                {"failures", report.failures},
                {"worst_gap", report.worst_gap},
                {"failing_inputs", report.failing_inputs}};
}

void write_snr_csv(std::ostream& out, const SnrMatrix& m) {
    out << "slot,t_seconds";
    for (std::size_t u = 0; u < m.n_users; ++u) out << ",user_" << u;
    out << "\n";
    for (std::size_t k = 0; k < m.n_slots; ++k) {
        const double t = (static_cast<double>(k) + 0.5) * m.slot_duration_s;
        out << (k + 1) << "," << format_fixed(t, 6);
        for (std::size_t u = 0; u < m.n_users; ++u)
            out << "," << format_fixed(linear_to_db(m.at(u, k)), 6);
        out << "\n";
    }
}

} // namespace

unsigned sweep_thread_count() {
    if (const char* env = std::getenv("SATNOMA_THREADS")) {
        char* end = nullptr;
        const unsigned long v = std::strtoul(env, &end, 10);
        if (end != env && *end == '\0' && v > 0) return static_cast<unsigned>(v);
    }
    const unsigned hw = std::thread::hardware_concurrency();
    return hw > 0 ? hw : 1;
}

SweepResult run_sweep(const Scenario& scenario, const std::vector<std::size_t>& n_sic_list,
                      const std::vector<bool>& moderate_modes,
                      const std::vector<bool>& permute_modes, unsigned n_threads) {
    const SnrMatrix snr = build_snr_matrix(scenario);

    SweepResult result;
    for (const std::size_t n_sic : n_sic_list)
        for (const bool moderate : moderate_modes)
            for (const bool permute : permute_modes)
                result.rows.push_back({n_sic, moderate, permute, 0, 0, 0, 0});

    std::atomic<std::size_t> next{0};
    const auto worker = [&]() {
        for (;;) {
            const std::size_t i = next.fetch_add(1);
            if (i >= result.rows.size()) return;
            SweepRow& row = result.rows[i];
            SchedulerConfig cfg = scenario.sched;
            cfg.n_sic = row.n_sic;
            cfg.moderate = row.moderate;
            cfg.permute_slots = row.permute;
            const SimResult sim = run(snr, cfg, scenario.link.bandwidth_hz);
            const auto [lo, hi] =
                std::minmax_element(sim.throughput_bps.begin(), sim.throughput_bps.end());
            double sum = 0.0;
            for (const double v : sim.throughput_bps) sum += v;
            row.min_bps = *lo;
            row.max_bps = *hi;
            row.sum_bps = sum;
            row.mean_bps = sum / static_cast<double>(sim.throughput_bps.size());
        }
    };

    const unsigned pool =
        std::max(1u, std::min<unsigned>(n_threads, static_cast<unsigned>(result.rows.size())));
    std::vector<std::thread> threads;
    threads.reserve(pool);
    for (unsigned i = 0; i < pool; ++i) threads.emplace_back(worker);
    for (auto& t : threads) t.join();

    result.sum_rate_bound_bps = sum_rate_bound_bps(snr, scenario.link.bandwidth_hz);
    return result;
}

int cmd_snr(const SnrOptions& opts) {
    const Scenario scenario = load_scenario(opts.config_path);
    const auto users =
        opts.probe9 ? probe_grid(scenario.region) : scenario.user_grid();
    const SnrMatrix m =
        build_snr_matrix(scenario.track(), users, scenario.gain, scenario.link,
                         scenario.n_slots);
    if (opts.out_path == "-") {
        write_snr_csv(std::cout, m);
    } else {
        auto out = open_output(opts.out_path);
        write_snr_csv(out, m);
        if (!out) throw IoError("write failed for '" + opts.out_path + "'");
    }
    return 0;
}

int cmd_simulate(const SimulateOptions& opts) {
    Scenario scenario = load_scenario(opts.config_path);
    if (opts.n_sic) scenario.sched.n_sic = *opts.n_sic;
    if (opts.moderate) scenario.sched.moderate = *opts.moderate;
    if (opts.permute) scenario.sched.permute_slots = *opts.permute;
    if (opts.seed) scenario.sched.seed = *opts.seed;
    scenario.validate();

    const SnrMatrix snr = build_snr_matrix(scenario);
    const SimResult sim = run(snr, scenario.sched, scenario.link.bandwidth_hz);
    const auto users = scenario.user_grid();

    auto out = open_output(opts.out_path);
    out << "user,lat,lon,throughput_bps\n";
    for (std::size_t u = 0; u < users.size(); ++u)
        out << u << "," << format_fixed(users[u].lat_deg, 6) << ","
            << format_fixed(users[u].lon_deg, 6) << "," << to_bps(sim.throughput_bps[u])
            << "\n";
    if (!out) throw IoError("write failed for '" + opts.out_path + "'");
    out.close();

    const auto [lo, hi] =
        std::minmax_element(sim.throughput_bps.begin(), sim.throughput_bps.end());
    double sum = 0.0;
    for (const double v : sim.throughput_bps) sum += v;

    json summary{
        {"min", to_bps(*lo)},
        {"max", to_bps(*hi)},
        {"mean", to_bps(sum / static_cast<double>(sim.throughput_bps.size()))},
        {"sum", to_bps(sum)},
        {"sum_rate_bound", to_bps(sim.sum_rate_bound_bps)},
        {"params",
         {{"n_users", scenario.n_users()},
          {"n_slots", scenario.n_slots},
          {"n_sic", scenario.sched.n_sic},
          {"n_rep", scenario.sched.n_rep},
          {"moderate", scenario.sched.moderate},
          {"permute_slots", scenario.sched.permute_slots},
          {"tie_break",
           scenario.sched.tie_break == TieBreak::by_index ? "by_index" : "random"},
          {"seed", scenario.sched.seed},
          {"bandwidth_hz", scenario.link.bandwidth_hz}}}};

    std::string summary_path = opts.summary_path;
    if (summary_path.empty()) {
        summary_path = opts.out_path;
        if (summary_path.size() >= 4 && summary_path.ends_with(".csv"))
            summary_path.resize(summary_path.size() - 4);
        summary_path += ".json";
    }
    auto js = open_output(summary_path);
    js << summary.dump(2) << "\n";
    if (!js) throw IoError("write failed for '" + summary_path + "'");
    return 0;
}

int cmd_sweep(const SweepOptions& opts) {
    Scenario scenario = load_scenario(opts.config_path);
    if (opts.seed) scenario.sched.seed = *opts.seed;
    const auto n_sic_list = parse_n_sic_list(opts.n_sic_list);
    const auto moderate_modes = parse_modes(opts.moderate_mode, "moderate");
    const auto permute_modes = parse_modes(opts.permute_mode, "permute");

    const SweepResult result =
        run_sweep(scenario, n_sic_list, moderate_modes, permute_modes, sweep_thread_count());

    auto out = open_output(opts.out_path);
    out << "n_sic,moderate,permute,min_bps,mean_bps,max_bps,sum_bps\n";
    for (const SweepRow& row : result.rows)
        out << row.n_sic << "," << (row.moderate ? 1 : 0) << "," << (row.permute ? 1 : 0)
            << "," << to_bps(row.min_bps) << "," << to_bps(row.mean_bps) << ","
            << to_bps(row.max_bps) << "," << to_bps(row.sum_bps) << "\n";
    out << "# sum_rate_bound_bps=" << to_bps(result.sum_rate_bound_bps) << "\n";
    if (!out) throw IoError("write failed for '" + opts.out_path + "'");
    return 0;
}

int cmd_verify(const VerifyOptions& opts) {
    oracle::OrderPolicy policy = [](const SnrVector& rho) { return optimal_sic_order(rho); };
    if (opts.order_policy == "ascending") {
        policy = [](const SnrVector& rho) {
            auto order = optimal_sic_order(rho);
            std::reverse(order.begin(), order.end());
            return order;
        };
    } else if (opts.order_policy != "optimal") {
        throw ConfigError("order-policy: expected optimal or ascending, got '" +
                          opts.order_policy + "'");
    }

    const auto agreement =
        oracle::check_order_agreement(opts.trials, opts.max_users, opts.seed, policy);
    const auto swaps =
        oracle::check_swap_monotonicity(opts.swap_trials, opts.max_users, opts.seed);
    const auto moderation = oracle::probe_moderation_random(
        opts.mod_vectors, opts.samples, opts.mod_max_users, opts.seed);
    const auto phi_id =
        oracle::check_phi_identity(32, {0.125, 0.25, 0.5, 1.0, 2.0, 3.0, 4.0});

    const bool pass =
        agreement.ok() && swaps.ok() && moderation.ok() && phi_id.ok();
    const json out{{"order_agreement", report_to_json(agreement)},
                   {"swap_monotonicity", report_to_json(swaps)},
                   {"moderation_probes", report_to_json(moderation)},
                   {"phi_identity", report_to_json(phi_id)},
                   {"pass", pass}};
    std::cout << out.dump(2) << "\n";
    return pass ? 0 : 1;
}

} // namespace satnoma::cli
