#pragma once

#include <iosfwd>
#include <string>
#include <vector>

#include "mzm/sweep.hpp"

namespace mzm {

/// Negative-control hook for the verification suite: kCorruptRate bumps one
/// tunneling rate after computation so the identity checks must trip.
enum class FaultInjection { kNone, kCorruptRate };

struct VerifyCheck {
    std::string name;
    double residual = 0.0;  // measured |deviation| (or worst |z| for MC)
    double tolerance = 0.0;
    bool passed = false;
    bool skipped = false;
};

struct VerifyReport {
    std::vector<VerifyCheck> checks;
    bool all_passed = true;
    double max_residual = 0.0;  // over non-skipped analytic checks

    const VerifyCheck* find(const std::string& name) const;
};

/// Runs the invariant suite on the configured device family plus seeded random
/// parameter draws: rate sums, total-current identity, channel/component
/// reassembly, integral-vs-product equality, the (a+b) identity, the
/// ODE-vs-closed-form correlator, and (when mc_duration is set) Monte Carlo
/// statistics. The MC section is marked skipped when mc_duration is absent;
/// the integral-form check is skipped for temperature > 0.
VerifyReport run_verify(const SweepConfig& config,
                        FaultInjection fault = FaultInjection::kNone);

/// Human-readable report, one line per check.
void write_report(std::ostream& out, const VerifyReport& report);

}  // namespace mzm
