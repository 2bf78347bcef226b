#include "mzm/correlator.hpp"

#include <cmath>
#include <stdexcept>

namespace mzm {

JumpCoefficients jump_coefficients(const RateSet& r) {
    const Lead L = Lead::kLeft;
    const Lead R = Lead::kRight;
    const double two_gamma = 2.0 * r.big_gamma;
    const double a = (r.tilde_plus(R) * (r.plus(R) + r.plus(L)) -
                      r.minus(R) * (r.tilde_minus(R) + r.tilde_minus(L))) /
                     two_gamma;
    const double b = (r.plus(R) * (r.tilde_plus(R) + r.tilde_plus(L)) -
                      r.tilde_minus(R) * (r.minus(R) + r.minus(L))) /
                     two_gamma;
    return {a, b};
}

BranchMeans steady_branch_means(const RateSet& r) {
    const double two_gamma = 2.0 * r.big_gamma;
    const auto mean = [&](Lead lead) {
        const Lead o = other(lead);
        const double i1 = (r.plus(lead) * (r.tilde_plus(lead) + r.tilde_plus(o)) -
                           r.minus(lead) * (r.tilde_minus(lead) + r.tilde_minus(o))) /
                          two_gamma;
        const double i2 = (r.tilde_plus(lead) * (r.plus(lead) + r.plus(o)) -
                           r.tilde_minus(lead) * (r.minus(lead) + r.minus(o))) /
                          two_gamma;
        return i1 + i2;
    };
    return {mean(Lead::kLeft), mean(Lead::kRight)};
}

CorrelatorResult cross_correlation_factor(const RateSet& rates) {
    if (!(rates.big_gamma > 0.0)) {
        throw std::invalid_argument("cross_correlation_factor: broadening must be > 0");
    }
    const JumpCoefficients jc = jump_coefficients(rates);
    const BranchMeans means = steady_branch_means(rates);
    CorrelatorResult result;
    result.a = jc.a;
    result.b = jc.b;
    result.s1_amplitude = means.left * means.right;
    result.s2_amplitude =
        jc.b * rates.tilde_plus(Lead::kLeft) - jc.a * rates.tilde_minus(Lead::kLeft);
    result.c_lr = result.s2_amplitude - result.s1_amplitude;
    result.decay_rate = 2.0 * rates.big_gamma;
    return result;
}

double correlator_time_profile(const CorrelatorResult& result, double t) {
    if (!(t >= 0.0)) {
        throw std::invalid_argument("correlator_time_profile: time must be >= 0");
    }
    return result.c_lr * std::exp(-result.decay_rate * t);
}

double correlator_spectrum(const CorrelatorResult& result, double omega) {
    return result.c_lr * 2.0 * result.decay_rate /
           (omega * omega + result.decay_rate * result.decay_rate);
}

double jump_conditioned_left_current(const RateSet& rates, JumpEvent event) {
    switch (event) {
        case JumpEvent::kPairFormed:
            return -rates.tilde_minus(Lead::kLeft);
        case JumpEvent::kPairSplit:
            return rates.tilde_plus(Lead::kLeft);
    }
    throw std::invalid_argument("jump_conditioned_left_current: unknown event");
}

}  // namespace mzm
