// Command-line front end: bias sweeps of the branch-current cross correlation
// (CSV output), the invariant verification suite, and an optional jump
// trajectory dump.
//
// Exit codes: 0 success, 1 usage error, 2 invariant failure, 3 I/O error.

#include <fstream>
#include <iostream>
#include <string>

#include <CLI11.hpp>

#include "mzm/oracle.hpp"
#include "mzm/rates.hpp"
#include "mzm/sweep.hpp"
#include "mzm/verify.hpp"

namespace {

constexpr int kExitOk = 0;
constexpr int kExitUsage = 1;
constexpr int kExitInvariant = 2;
constexpr int kExitIo = 3;

int run(int argc, char** argv) {
    CLI::App app{"Two-lead Majorana device: tunneling rates, current decomposition "
                 "and branch-current cross correlation"};
    app.set_config("--config", "", "flat key=value config file; flags override it");

    mzm::SweepConfig config;
    std::string bias_mode = "symmetric";
    std::string dump_path;
    double mc_duration = 0.0;
    bool verify = false;
    bool corrupt_rate = false;

    app.add_option("--bias-mode", bias_mode, "symmetric | antisymmetric")
        ->check(CLI::IsMember({"symmetric", "antisymmetric"}))
        ->capture_default_str();
    app.add_option("--ev-min", config.ev_min)->capture_default_str();
    app.add_option("--ev-max", config.ev_max)->capture_default_str();
    app.add_option("--ev-steps", config.ev_steps)->capture_default_str();
    app.add_option("--epsilon-m", config.epsilon_m_values,
                   "Majorana coupling(s); repeatable")
        ->expected(-1);
    app.add_option("--gamma-e-l", config.gamma_e_left)->capture_default_str();
    app.add_option("--gamma-h-l", config.gamma_h_left)->capture_default_str();
    app.add_option("--gamma-e-r", config.gamma_e_right)->capture_default_str();
    app.add_option("--gamma-h-r", config.gamma_h_right)->capture_default_str();
    app.add_option("--temperature", config.temperature)->capture_default_str();
    app.add_option("--out", config.output_path, "CSV output path (default stdout)");
    app.add_option("--seed", config.seed)->capture_default_str();
    app.add_option("--mc-duration", mc_duration,
                   "duration of the Monte Carlo section of --verify (time units); "
                   "0 skips it");
    app.add_flag("--verify", verify, "run the invariant suite instead of a sweep");
    app.add_option("--dump-trajectory", dump_path,
                   "write one jump trajectory (time, channel, state) to this path");
    app.add_flag("--corrupt-rate", corrupt_rate,
                 "negative-control mode: corrupt one rate so --verify must fail")
        ->group("");  // hidden; test hook

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        if (e.get_exit_code() == 0) {  // --help
            return app.exit(e);
        }
        std::cerr << "usage error: " << e.what() << '\n';
        return kExitUsage;
    }

    config.bias_mode = (bias_mode == "symmetric") ? mzm::BiasMode::kSymmetric
                                                  : mzm::BiasMode::kAntisymmetric;
    if (mc_duration > 0.0) {
        config.mc_duration = mc_duration;
    }

    try {
        config.validate();
    } catch (const std::exception& e) {
        std::cerr << "usage error: " << e.what() << '\n';
        return kExitUsage;
    }

    if (!dump_path.empty()) {
        const mzm::DeviceParams params =
            config.device_at(config.ev_max, config.epsilon_m_values.front());
        const mzm::RateSet rates = mzm::compute_rates(params);
        const double duration = config.mc_duration.value_or(100.0 / rates.big_gamma);
        const auto records = mzm::simulate_trajectory(rates, duration, config.seed);
        std::ofstream out(dump_path);
        if (!out) {
            std::cerr << "I/O error: cannot open " << dump_path << '\n';
            return kExitIo;
        }
        mzm::write_trajectory(out, records);
        if (!out.good()) {
            std::cerr << "I/O error: short write to " << dump_path << '\n';
            return kExitIo;
        }
    }

    if (verify) {
        const auto fault = corrupt_rate ? mzm::FaultInjection::kCorruptRate
                                        : mzm::FaultInjection::kNone;
        const mzm::VerifyReport report = mzm::run_verify(config, fault);
        mzm::write_report(std::cout, report);
        return report.all_passed ? kExitOk : kExitInvariant;
    }

    const auto rows = mzm::run_sweep(config);
    if (config.output_path.empty()) {
        mzm::write_csv(std::cout, rows);
        return kExitOk;
    }
    std::ofstream out(config.output_path, std::ios::binary);
    if (!out) {
        std::cerr << "I/O error: cannot open " << config.output_path << '\n';
        return kExitIo;
    }
    mzm::write_csv(out, rows);
    out.flush();
    if (!out.good()) {
        std::cerr << "I/O error: short write to " << config.output_path << '\n';
        return kExitIo;
    }
    return kExitOk;
}

}  // namespace

int main(int argc, char** argv) {
    try {
        return run(argc, argv);
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << '\n';
        return kExitUsage;
    }
}
