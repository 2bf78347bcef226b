#pragma once

#include <cstdint>
#include <iosfwd>
#include <span>
#include <string_view>
#include <vector>

#include "mzm/populations.hpp"
#include "mzm/rates.hpp"

// Independent verification paths: direct numerical propagation of the
// population rate equation, the quantum-regression construction of the
// branch-current correlator, and a continuous-time Monte Carlo unraveling of
// the eight jump channels.

namespace mzm {

/// Numerically integrates dp1/dt = r1 p0 - r2 p1 (and the p0 complement) with
/// an adaptive Dormand-Prince RK45 step, preserving the total weight of
/// unnormalized inputs. t_grid must be nondecreasing and start >= 0.
/// Throws std::runtime_error if the step size underflows before reaching the
/// local tolerance, std::invalid_argument on a bad grid.
std::vector<Populations> propagate_ode(const InitialCondition& init, const RateSet& rates,
                                       std::span<const double> t_grid,
                                       double local_tol = 1e-12);

/// S_LR(t) on t_grid via the quantum-regression route, without using the
/// closed form: builds the conditional state from jump_coefficients,
/// propagates it with propagate_ode, extracts the steady/initial channel
/// weights from an auxiliary ODE run, and evaluates the conditional left
/// branch current from the transient channel decomposition.
std::vector<double> regression_correlator(const RateSet& rates,
                                          std::span<const double> t_grid);

/// One Lindblad dissipator of the master equation = one jump channel.
/// NormalIn/Out are the electron-component channels (fire from |0>/|1>),
/// AndreevIn completes a Cooper pair from |1>, AndreevOut splits one from |0>.
enum class JumpChannel : int {
    kLeftNormalIn = 0,    // Gamma+_L : |0> -> |1>, charge +1 at left
    kLeftNormalOut = 1,   // Gamma-_L : |1> -> |0>, charge -1 at left
    kLeftAndreevIn = 2,   // Gammat+_L: |1> -> |0>, charge +1 at left
    kLeftAndreevOut = 3,  // Gammat-_L: |0> -> |1>, charge -1 at left
    kRightNormalIn = 4,
    kRightNormalOut = 5,
    kRightAndreevIn = 6,
    kRightAndreevOut = 7,
};
inline constexpr int kNumJumpChannels = 8;

Lead channel_lead(JumpChannel channel);
int channel_charge_sign(JumpChannel channel);   // +1 into the superconductor
int channel_state_before(JumpChannel channel);  // 0 or 1
std::string_view channel_token(JumpChannel channel);

struct JumpRecord {
    double time = 0.0;
    JumpChannel channel{};
    int state_after = 0;
    int charge_sign = 0;  // at channel_lead(channel)
};

/// Gillespie simulation of the jump process over [0, duration], starting from
/// |0>. Exponential waiting times, categorical channel draws; deterministic
/// for a given seed. A state with zero total exit rate is absorbing: the
/// trajectory is truncated there.
std::vector<JumpRecord> simulate_trajectory(const RateSet& rates, double duration,
                                            std::uint64_t seed);

struct ValueWithError {
    double value = 0.0;
    double std_error = 0.0;
};

struct TrajectoryStats {
    ValueWithError occupancy;                        // time-averaged p1
    std::array<ValueWithError, 2> lead_current{};    // net charge flux per lead
    std::array<ValueWithError, 8> channel_flux{};    // per-channel event rate
    std::array<std::uint64_t, 8> channel_counts{};
    std::size_t n_jumps = 0;
    std::uint64_t seed = 0;
};

/// Batch-means estimates (n_batches >= 20 equal time batches) of occupancy,
/// per-lead mean currents and per-channel fluxes. Throws std::invalid_argument
/// for duration <= 0 or n_batches < 2. An empty record list is treated as an
/// absorbed/quiescent trajectory.
TrajectoryStats estimate_steady_observables(std::span<const JumpRecord> records,
                                            double duration, std::uint64_t seed = 0,
                                            int n_batches = 20);

/// Same estimates without materializing the record list; used for long runs.
/// Identical event stream to simulate_trajectory for the same (rates, seed).
TrajectoryStats simulate_steady_observables(const RateSet& rates, double duration,
                                            std::uint64_t seed, int n_batches = 20);

/// One event per line: time, channel token, state_after; tab-separated.
void write_trajectory(std::ostream& out, std::span<const JumpRecord> records);

}  // namespace mzm
