#include "mzm/rates.hpp"

#include <cmath>
#include <numbers>

#include "mzm/quadrature.hpp"

namespace mzm {

double lorentzian_weight(double omega, double center, double gamma) {
    if (!(gamma > 0.0)) {
        throw std::invalid_argument("lorentzian_weight: gamma must be > 0");
    }
    const double d = omega - center;
    return gamma / (std::numbers::pi * (d * d + gamma * gamma));
}

double fermi_occupation(double omega, double mu, double temperature) {
    if (!(temperature >= 0.0)) {
        throw std::invalid_argument("fermi_occupation: temperature must be >= 0");
    }
    if (temperature == 0.0) {
        if (omega < mu) return 1.0;
        if (omega > mu) return 0.0;
        return 0.5;
    }
    const double x = (omega - mu) / temperature;
    // stable logistic, never exponentiates a large positive argument
    if (x > 0.0) {
        const double e = std::exp(-x);
        return e / (1.0 + e);
    }
    return 1.0 / (1.0 + std::exp(x));
}

double occupied_weight(double mu, double center, double big_gamma, double temperature) {
    if (!(big_gamma > 0.0)) {
        throw std::invalid_argument("occupied_weight: broadening must be > 0");
    }
    if (!(temperature >= 0.0)) {
        throw std::invalid_argument("occupied_weight: temperature must be >= 0");
    }
    const auto lorentz_cdf = [&](double w) {
        return 0.5 + std::atan((w - center) / big_gamma) / std::numbers::pi;
    };
    if (temperature == 0.0) {
        return lorentz_cdf(mu);
    }
    // N = \int n(w) dD(w) = \int D(w) (-dn/dw) dw after integration by parts;
    // -dn/dw = sech^2((w-mu)/2T)/4T is localized within a few 10s of T of mu,
    // so the Lorentzian tails are carried exactly by D.
    const double T = temperature;
    const auto integrand = [&](double w) {
        const double c = std::cosh((w - mu) / (2.0 * T));
        return lorentz_cdf(w) / (4.0 * T * c * c);
    };
    const double window = 50.0 * T;  // sech^2 tail beyond this is ~e^-50
    return integrate_adaptive(integrand, mu - window, mu + window, 1e-10, 1e-15);
}

RateSet compute_rates(const DeviceParams& params) {
    params.validate();
    RateSet rates;
    rates.big_gamma = params.broadening();
    for (Lead lead : {Lead::kLeft, Lead::kRight}) {
        const int i = index_of(lead);
        const double n_plus =
            occupied_weight(params.mu(lead), params.epsilon_m, rates.big_gamma,
                            params.temperature);
        const double n_tilde_plus =
            occupied_weight(params.mu(lead), -params.epsilon_m, rates.big_gamma,
                            params.temperature);
        rates.coupling_e[i] = params.coupling_e(lead);
        rates.coupling_h[i] = params.coupling_h(lead);
        rates.gamma_plus[i] = rates.coupling_e[i] * n_plus;
        rates.gamma_minus[i] = rates.coupling_e[i] * (1.0 - n_plus);
        rates.gamma_tilde_plus[i] = rates.coupling_h[i] * n_tilde_plus;
        rates.gamma_tilde_minus[i] = rates.coupling_h[i] * (1.0 - n_tilde_plus);
    }
    rates.r1 = rates.gamma_plus[0] + rates.gamma_plus[1] + rates.gamma_tilde_minus[0] +
               rates.gamma_tilde_minus[1];
    rates.r2 = rates.gamma_minus[0] + rates.gamma_minus[1] + rates.gamma_tilde_plus[0] +
               rates.gamma_tilde_plus[1];
    return rates;
}

}  // namespace mzm
