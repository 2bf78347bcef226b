#pragma once

#include <array>

#include "mzm/device.hpp"

namespace mzm {

/// Lorentzian spectral weight (1/pi) * gamma / ((omega - center)^2 + gamma^2).
/// Unit-normalized over omega. Throws std::invalid_argument for gamma <= 0.
double lorentzian_weight(double omega, double center, double gamma);

/// Fermi occupation 1 / (exp((omega - mu)/T) + 1). At T = 0 this is the step
/// function: 1 below mu, 1/2 at mu, 0 above. Throws for T < 0.
double fermi_occupation(double omega, double mu, double temperature);

/// Fraction of a Lorentzian-broadened level (center, half-width big_gamma)
/// lying in the occupied part of a lead at chemical potential mu:
///   N = \int dw n(w) * lorentzian_weight(w, center, big_gamma).
/// T = 0 evaluates the closed arctan form; T > 0 integrates the
/// by-parts form \int D(w) (-dn/dw) dw adaptively (D = Lorentzian CDF),
/// which keeps the power-law tails exact.
double occupied_weight(double mu, double center, double big_gamma, double temperature);

/// The eight tunnel-coupling rates of the device plus derived totals.
/// Indexing follows Lead (0 = left, 1 = right). gamma_plus/minus are the
/// electron-component rates (Lorentzian centered at +epsilon_m),
/// gamma_tilde_plus/minus the hole-component rates (centered at -epsilon_m).
struct RateSet {
    std::array<double, 2> gamma_plus{};
    std::array<double, 2> gamma_minus{};
    std::array<double, 2> gamma_tilde_plus{};
    std::array<double, 2> gamma_tilde_minus{};
    std::array<double, 2> coupling_e{};  // source couplings, = gamma_plus + gamma_minus
    std::array<double, 2> coupling_h{};
    double r1 = 0.0;         // excitation rate, sum of f-creating channels
    double r2 = 0.0;         // deexcitation rate, sum of f-annihilating channels
    double big_gamma = 0.0;  // broadening; r1 + r2 = 2*big_gamma

    double plus(Lead a) const { return gamma_plus[index_of(a)]; }
    double minus(Lead a) const { return gamma_minus[index_of(a)]; }
    double tilde_plus(Lead a) const { return gamma_tilde_plus[index_of(a)]; }
    double tilde_minus(Lead a) const { return gamma_tilde_minus[index_of(a)]; }
};

/// Computes all eight rates from the device parameters.
/// Throws std::invalid_argument on invalid params (see DeviceParams::validate).
RateSet compute_rates(const DeviceParams& params);

}  // namespace mzm
