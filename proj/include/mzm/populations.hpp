#pragma once

#include "mzm/rates.hpp"

namespace mzm {

/// Occupation weights of the f quasiparticle number states |0> and |1>.
/// For normalized states p0 + p1 = 1; the rate equation is linear, so
/// unnormalized weight pairs (quantum-jump conditional states) evolve by the
/// same kernel and keep their total weight.
struct Populations {
    double p0 = 1.0;
    double p1 = 0.0;

    double total() const { return p0 + p1; }
};

/// Initial condition for the transient solutions: the (possibly unnormalized)
/// starting weights of |0> and |1>.
struct InitialCondition {
    double weight0 = 1.0;
    double weight1 = 0.0;

    static InitialCondition empty() { return {1.0, 0.0}; }
    static InitialCondition occupied() { return {0.0, 1.0}; }
    static InitialCondition mixed(double a, double b) { return {a, b}; }

    double total() const { return weight0 + weight1; }
};

/// Two-channel split of the relaxation at time t: the formed steady-state
/// channel carries weight g = G(t) = 1 - exp(-2*Gamma*t), the decaying
/// initial-condition channel carries 1 - g.
struct ChannelWeights {
    double g = 0.0;
    double one_minus_g = 1.0;
};

/// G(t) for the given broadening. Throws std::invalid_argument for t < 0 or
/// big_gamma <= 0.
ChannelWeights relaxation(double t, double big_gamma);

/// Stationary populations p1 = r1/(r1+r2), p0 = r2/(r1+r2).
/// Throws std::domain_error when r1 = r2 = 0 (degenerate dynamics).
Populations steady_state(const RateSet& rates);

/// Transient solution at time t >= 0. Normalized initial conditions give
/// normalized populations; mixed (a, b) weights evolve linearly:
///   p(t) = (a+b) * steady * G(t) + (a, b) * [1 - G(t)].
Populations transient_populations(const RateSet& rates, const InitialCondition& init,
                                  double t);

}  // namespace mzm
