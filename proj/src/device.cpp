#include "mzm/device.hpp"

#include <cmath>

namespace mzm {

void DeviceParams::validate() const {
    const double couplings[] = {gamma_e_left, gamma_h_left, gamma_e_right, gamma_h_right};
    double sum = 0.0;
    for (double g : couplings) {
        if (!(g >= 0.0) || !std::isfinite(g)) {
            throw std::invalid_argument("coupling strengths must be finite and >= 0");
        }
        sum += g;
    }
    if (!(sum > 0.0)) {
        throw std::invalid_argument(
            "all couplings are zero: the spectral broadening would be singular");
    }
    if (!(temperature >= 0.0) || !std::isfinite(temperature)) {
        throw std::invalid_argument("temperature must be finite and >= 0");
    }
    if (!std::isfinite(epsilon_m) || !std::isfinite(mu_left) || !std::isfinite(mu_right)) {
        throw std::invalid_argument("epsilon_m and chemical potentials must be finite");
    }
}

}  // namespace mzm
