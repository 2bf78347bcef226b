#pragma once

#include "mzm/device.hpp"
#include "mzm/populations.hpp"
#include "mzm/rates.hpp"

namespace mzm {

/// The two current contributions of one lead: the conventional-tunneling
/// ("first electron") part and the Andreev ("second electron") part.
/// Sign convention: positive current flows from the lead into the
/// superconductor.
struct LeadCurrents {
    double i1 = 0.0;
    double i2 = 0.0;

    double total() const { return i1 + i2; }
};

/// Component budget of one lead's current. The a-components are the
/// steady-channel pieces at their instantaneous (G(t)-scaled) values:
/// a1 = local Andreev, a2 = crossed Andreev, a3 = direct lead-to-lead
/// transmission (electron-electron for i1, hole-hole for i2). The b terms are
/// the decaying initial-channel currents. At steady state b = 0 and the six
/// a-components sum to the total. branch = total - i1_a3 - i2_a3.
struct CurrentDecomposition {
    double i1_a1 = 0.0, i1_a2 = 0.0, i1_a3 = 0.0;
    double i2_a1 = 0.0, i2_a2 = 0.0, i2_a3 = 0.0;
    double i1_b = 0.0, i2_b = 0.0;
    double total = 0.0;
    double branch = 0.0;

    double a_sum() const { return i1_a1 + i1_a2 + i1_a3 + i2_a1 + i2_a2 + i2_a3; }
};

/// i1 = Gamma+ p0 - Gamma- p1,  i2 = Gammat+ p1 - Gammat- p0.
LeadCurrents lead_currents(const RateSet& rates, const Populations& pops, Lead lead);

/// Closed form of the total lead current,
///   Gamma+ - Gammat- - p1 (Gamma^e - Gamma^h),
/// algebraically identical to lead_currents(...).total(). Uses the stored
/// source couplings, so it doubles as a consistency check on the rate set.
double total_current_closed_form(const RateSet& rates, const Populations& pops, Lead lead);

/// Steady-state component decomposition from the rate products, e.g.
/// i1_a1 = (Gamma+_a Gammat+_a - Gamma-_a Gammat-_a) / 2Gamma.
CurrentDecomposition steady_components(const RateSet& rates, Lead lead);

/// Components at time t for the given initial condition: a-components scale
/// with the formed steady-channel weight, b terms with the decaying initial
/// channel. Unnormalized initial weights are handled linearly.
CurrentDecomposition transient_channel_currents(const RateSet& rates,
                                                const InitialCondition& init, double t,
                                                Lead lead);

/// Transmission/Andreev coefficients entering the energy-integral current
/// forms: coupling products over |Z|^2 = (omega - epsilon_m)^2 + Gamma^2.
enum class TransportProcess {
    kElectronElectronLR,  // Gamma^e_L Gamma^e_R / |Z|^2
    kHoleHoleRL,          // Gamma^h_R Gamma^h_L / |Z|^2
    kAndreevLL,           // Gamma^e_L Gamma^h_L / |Z|^2
    kAndreevLR,           // Gamma^e_L Gamma^h_R / |Z|^2
    kAndreevRL,           // Gamma^e_R Gamma^h_L / |Z|^2
};

double transport_coefficient(TransportProcess process, double omega,
                             const DeviceParams& params);

/// Steady components from the T = 0 energy integrals of the transport
/// coefficients over the bias windows (closed arctan antiderivatives, with
/// the e/h = 1/(2*pi) prefactor in hbar = e = 1 units). Must agree with
/// steady_components. Throws std::domain_error for temperature > 0.
CurrentDecomposition integral_form_currents(const DeviceParams& params, Lead lead);

/// The Andreev branch-circuit current of a decomposition:
/// total minus the direct-transmission components.
double branch_current(const CurrentDecomposition& decomposition);

}  // namespace mzm
