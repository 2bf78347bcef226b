#pragma once

#include <stdexcept>

// Units: hbar = e = k_B = 1 throughout. One user-chosen energy unit scales
// everything; currents come out in (e/hbar) * energy-unit.

namespace mzm {

enum class Lead : int { kLeft = 0, kRight = 1 };

inline constexpr int index_of(Lead lead) { return static_cast<int>(lead); }
inline constexpr Lead other(Lead lead) {
    return lead == Lead::kLeft ? Lead::kRight : Lead::kLeft;
}

/// Physical inputs of the two-lead device: per-lead electron/hole coupling
/// strengths, Majorana coupling, lead chemical potentials (relative to the
/// superconductor's Fermi level at 0), and lead temperature.
struct DeviceParams {
    double gamma_e_left = 1.0;
    double gamma_h_left = 1.0;
    double gamma_e_right = 1.0;
    double gamma_h_right = 1.0;
    double epsilon_m = 0.0;
    double mu_left = 0.0;
    double mu_right = 0.0;
    double temperature = 0.0;

    double coupling_e(Lead lead) const {
        return lead == Lead::kLeft ? gamma_e_left : gamma_e_right;
    }
    double coupling_h(Lead lead) const {
        return lead == Lead::kLeft ? gamma_h_left : gamma_h_right;
    }
    double mu(Lead lead) const {
        return lead == Lead::kLeft ? mu_left : mu_right;
    }

    /// Level broadening: half the sum of all coupling strengths.
    double broadening() const {
        return 0.5 * (gamma_e_left + gamma_h_left + gamma_e_right + gamma_h_right);
    }

    /// Throws std::invalid_argument if any coupling is negative, all couplings
    /// vanish (singular broadening), or the temperature is negative.
    void validate() const;
};

}  // namespace mzm
