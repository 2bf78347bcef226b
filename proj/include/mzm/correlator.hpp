#pragma once

#include "mzm/rates.hpp"

namespace mzm {

/// Unnormalized conditional-state weights after measuring the right branch
/// current in the steady state. a + b equals the mean right branch current.
struct JumpCoefficients {
    double a = 0.0;
    double b = 0.0;
};

JumpCoefficients jump_coefficients(const RateSet& rates);

/// Mean steady branch-circuit currents of both leads, from the compact
/// rate-combination forms.
struct BranchMeans {
    double left = 0.0;
    double right = 0.0;
};

BranchMeans steady_branch_means(const RateSet& rates);

/// Branch-current cross correlator S_LR(t) = c_lr * exp(-decay_rate * t):
/// jump coefficients, the two correlator parts, and the factor
/// c_lr = s2_amplitude - s1_amplitude.
struct CorrelatorResult {
    double a = 0.0;
    double b = 0.0;
    double s1_amplitude = 0.0;  // <I~_L><I~_R>
    double s2_amplitude = 0.0;  // b*Gammat+_L - a*Gammat-_L
    double c_lr = 0.0;
    double decay_rate = 0.0;  // 2*Gamma
};

CorrelatorResult cross_correlation_factor(const RateSet& rates);

/// S_LR(t) = c_lr * exp(-decay_rate * t), t >= 0.
double correlator_time_profile(const CorrelatorResult& result, double t);

/// Symmetrized spectrum: Fourier transform of the two-sided exponential,
/// c_lr * 2*decay_rate / (omega^2 + decay_rate^2). Peak c_lr/Gamma at
/// omega = 0, half height at omega = decay_rate.
double correlator_spectrum(const CorrelatorResult& result, double omega);

/// Conditioning events observable on the right branch current.
enum class JumpEvent {
    kPairFormed,  // Cooper pair formed, f annihilated, state jumps to |0>
    kPairSplit,   // Cooper pair split,  f created,    state jumps to |1>
};

/// Left branch current immediately after the conditioning event:
/// -Gammat-_L after kPairFormed (inverse-Andreev back-flow),
/// +Gammat+_L after kPairSplit.
double jump_conditioned_left_current(const RateSet& rates, JumpEvent event);

}  // namespace mzm
