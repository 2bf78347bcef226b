#pragma once

#include <cstdint>
#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

#include "mzm/device.hpp"

namespace mzm {

enum class BiasMode { kSymmetric, kAntisymmetric };

/// Bias-sweep configuration. Grid: for each epsilon_m (in list order), eV runs
/// over ev_steps evenly spaced points from ev_min to ev_max inclusive.
/// Symmetric mode sets mu_L = mu_R = eV, antisymmetric mu_L = -mu_R = eV.
struct SweepConfig {
    BiasMode bias_mode = BiasMode::kSymmetric;
    double ev_min = -8.0;
    double ev_max = 8.0;
    int ev_steps = 81;
    std::vector<double> epsilon_m_values = {0.0};
    double gamma_e_left = 1.0;
    double gamma_h_left = 1.0;
    double gamma_e_right = 1.0;
    double gamma_h_right = 1.0;
    double temperature = 0.0;
    std::string output_path;  // empty = stdout
    std::uint64_t seed = 1;
    std::optional<double> mc_duration;

    /// Throws std::invalid_argument on violated invariants
    /// (ev_steps >= 2, ev_min < ev_max, valid couplings/temperature).
    void validate() const;

    DeviceParams device_at(double ev, double epsilon_m) const;
};

/// One CSV row; field order matches the emitted columns.
struct SweepRow {
    double ev = 0.0;
    double epsilon_m = 0.0;
    double i_l_total = 0.0;
    double i_r_total = 0.0;
    double i_tilde_l = 0.0;
    double i_tilde_r = 0.0;
    double i1_a1_l = 0.0;
    double i1_a2_l = 0.0;
    double i1_a3_l = 0.0;
    double i2_a1_l = 0.0;
    double i2_a2_l = 0.0;
    double i2_a3_l = 0.0;
    double a = 0.0;
    double b = 0.0;
    double c_lr = 0.0;
    double c_lr_over_gamma2 = 0.0;
    double big_gamma = 0.0;
};

/// Header line of the CSV output (no trailing newline).
std::string csv_header();

/// Evaluates the grid (points in parallel, rows in deterministic grid order).
std::vector<SweepRow> run_sweep(const SweepConfig& config);

/// Serializes rows with 17 significant digits; byte-identical for identical
/// input.
void write_csv(std::ostream& out, const std::vector<SweepRow>& rows);

}  // namespace mzm
