#include "mzm/currents.hpp"

#include <cmath>
#include <numbers>

namespace mzm {

LeadCurrents lead_currents(const RateSet& rates, const Populations& pops, Lead lead) {
    return {rates.plus(lead) * pops.p0 - rates.minus(lead) * pops.p1,
            rates.tilde_plus(lead) * pops.p1 - rates.tilde_minus(lead) * pops.p0};
}

double total_current_closed_form(const RateSet& rates, const Populations& pops,
                                 Lead lead) {
    const int i = index_of(lead);
    return rates.plus(lead) - rates.tilde_minus(lead) -
           pops.p1 * (rates.coupling_e[i] - rates.coupling_h[i]);
}

namespace {

// The six steady rate-product components for one lead; shared by the steady
// and transient paths.
struct SteadyParts {
    double i1_a1, i1_a2, i1_a3, i2_a1, i2_a2, i2_a3;
};

SteadyParts steady_parts(const RateSet& r, Lead lead) {
    const Lead o = other(lead);
    const double two_gamma = 2.0 * r.big_gamma;
    SteadyParts p{};
    p.i1_a1 = (r.plus(lead) * r.tilde_plus(lead) - r.minus(lead) * r.tilde_minus(lead)) /
              two_gamma;
    p.i1_a2 =
        (r.plus(lead) * r.tilde_plus(o) - r.minus(lead) * r.tilde_minus(o)) / two_gamma;
    p.i1_a3 = (r.plus(lead) * r.minus(o) - r.minus(lead) * r.plus(o)) / two_gamma;
    p.i2_a1 = (r.tilde_plus(lead) * r.plus(lead) - r.tilde_minus(lead) * r.minus(lead)) /
              two_gamma;
    p.i2_a2 =
        (r.tilde_plus(lead) * r.plus(o) - r.tilde_minus(lead) * r.minus(o)) / two_gamma;
    p.i2_a3 = (r.tilde_plus(lead) * r.tilde_minus(o) - r.tilde_minus(lead) * r.tilde_plus(o)) /
              two_gamma;
    return p;
}

CurrentDecomposition assemble(const SteadyParts& p, double steady_weight, double i1_b,
                              double i2_b) {
    CurrentDecomposition d;
    d.i1_a1 = p.i1_a1 * steady_weight;
    d.i1_a2 = p.i1_a2 * steady_weight;
    d.i1_a3 = p.i1_a3 * steady_weight;
    d.i2_a1 = p.i2_a1 * steady_weight;
    d.i2_a2 = p.i2_a2 * steady_weight;
    d.i2_a3 = p.i2_a3 * steady_weight;
    d.i1_b = i1_b;
    d.i2_b = i2_b;
    d.total = d.a_sum() + i1_b + i2_b;
    d.branch = d.total - d.i1_a3 - d.i2_a3;
    return d;
}

}  // namespace

CurrentDecomposition steady_components(const RateSet& rates, Lead lead) {
    return assemble(steady_parts(rates, lead), 1.0, 0.0, 0.0);
}

CurrentDecomposition transient_channel_currents(const RateSet& rates,
                                                const InitialCondition& init, double t,
                                                Lead lead) {
    const ChannelWeights channels = relaxation(t, rates.big_gamma);
    // the steady channel of an unnormalized state forms with weight w*G(t)
    const double steady_weight = init.total() * channels.g;
    const double i1_b = (rates.plus(lead) * init.weight0 - rates.minus(lead) * init.weight1) *
                        channels.one_minus_g;
    const double i2_b = (rates.tilde_plus(lead) * init.weight1 -
                         rates.tilde_minus(lead) * init.weight0) *
                        channels.one_minus_g;
    return assemble(steady_parts(rates, lead), steady_weight, i1_b, i2_b);
}

double transport_coefficient(TransportProcess process, double omega,
                             const DeviceParams& params) {
    const double big_gamma = params.broadening();
    if (!(big_gamma > 0.0)) {
        throw std::invalid_argument("transport_coefficient: broadening must be > 0");
    }
    const double d = omega - params.epsilon_m;
    const double z2 = d * d + big_gamma * big_gamma;
    switch (process) {
        case TransportProcess::kElectronElectronLR:
            return params.gamma_e_left * params.gamma_e_right / z2;
        case TransportProcess::kHoleHoleRL:
            return params.gamma_h_right * params.gamma_h_left / z2;
        case TransportProcess::kAndreevLL:
            return params.gamma_e_left * params.gamma_h_left / z2;
        case TransportProcess::kAndreevLR:
            return params.gamma_e_left * params.gamma_h_right / z2;
        case TransportProcess::kAndreevRL:
            return params.gamma_e_right * params.gamma_h_left / z2;
    }
    throw std::invalid_argument("transport_coefficient: unknown process");
}

namespace {

// \int_lo^hi dw / ((w - eps)^2 + Gamma^2), signed; empty windows exactly 0.
double window_integral(double lo, double hi, double eps, double big_gamma) {
    if (lo == hi) return 0.0;
    return (std::atan((hi - eps) / big_gamma) - std::atan((lo - eps) / big_gamma)) /
           big_gamma;
}

}  // namespace

CurrentDecomposition integral_form_currents(const DeviceParams& params, Lead lead) {
    params.validate();
    if (params.temperature > 0.0) {
        throw std::domain_error(
            "integral_form_currents: bias-window integrals are defined only at T = 0");
    }
    const double big_gamma = params.broadening();
    const double eps = params.epsilon_m;
    const Lead o = other(lead);
    const double mu_a = params.mu(lead);
    const double mu_o = params.mu(o);
    const double pref = 1.0 / (2.0 * std::numbers::pi);  // e/h with hbar = e = 1

    SteadyParts p{};
    p.i1_a1 = pref * params.coupling_e(lead) * params.coupling_h(lead) *
              window_integral(-mu_a, mu_a, eps, big_gamma);
    p.i1_a2 = pref * params.coupling_e(lead) * params.coupling_h(o) *
              window_integral(-mu_o, mu_a, eps, big_gamma);
    p.i1_a3 = pref * params.coupling_e(lead) * params.coupling_e(o) *
              window_integral(mu_o, mu_a, eps, big_gamma);
    p.i2_a1 = p.i1_a1;
    p.i2_a2 = pref * params.coupling_e(o) * params.coupling_h(lead) *
              window_integral(-mu_a, mu_o, eps, big_gamma);
    p.i2_a3 = pref * params.coupling_h(o) * params.coupling_h(lead) *
              window_integral(-mu_a, -mu_o, eps, big_gamma);
    return assemble(p, 1.0, 0.0, 0.0);
}

double branch_current(const CurrentDecomposition& decomposition) {
    return decomposition.branch;
}

}  // namespace mzm
