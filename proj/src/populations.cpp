#include "mzm/populations.hpp"

#include <cmath>
#include <stdexcept>

namespace mzm {

ChannelWeights relaxation(double t, double big_gamma) {
    if (!(t >= 0.0)) {
        throw std::invalid_argument("relaxation: time must be >= 0");
    }
    if (!(big_gamma > 0.0)) {
        throw std::invalid_argument("relaxation: broadening must be > 0");
    }
    const double decayed = std::exp(-2.0 * big_gamma * t);
    return {1.0 - decayed, decayed};
}

Populations steady_state(const RateSet& rates) {
    const double total = rates.r1 + rates.r2;
    if (!(total > 0.0)) {
        throw std::domain_error("steady_state: r1 = r2 = 0, dynamics are degenerate");
    }
    return {rates.r2 / total, rates.r1 / total};
}

Populations transient_populations(const RateSet& rates, const InitialCondition& init,
                                  double t) {
    if (!std::isfinite(init.weight0) || !std::isfinite(init.weight1)) {
        throw std::invalid_argument("transient_populations: non-finite initial weights");
    }
    const ChannelWeights channels = relaxation(t, rates.big_gamma);
    const Populations steady = steady_state(rates);
    const double w = init.total();
    // two-channel form: formed steady channel + decaying initial channel
    return {w * steady.p0 * channels.g + init.weight0 * channels.one_minus_g,
            w * steady.p1 * channels.g + init.weight1 * channels.one_minus_g};
}

}  // namespace mzm
