#include "mzm/oracle.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <limits>
#include <ostream>
#include <random>
#include <stdexcept>

#include "mzm/correlator.hpp"
#include "mzm/currents.hpp"

namespace mzm {

namespace {

struct State2 {
    double p0, p1;
};

State2 rate_derivative(const RateSet& r, const State2& y) {
    const double flow = r.r1 * y.p0 - r.r2 * y.p1;
    return {-flow, flow};
}

// Dormand-Prince 5(4) with standard step control. The system is a 2-state
// linear rate equation, so this is overkill in cost but gives a genuinely
// independent numerical path at the requested local tolerance.
class DormandPrince {
  public:
    DormandPrince(const RateSet& rates, double tol) : rates_(rates), tol_(tol) {
        if (!(tol > 0.0)) {
            throw std::invalid_argument("propagate_ode: tolerance must be > 0");
        }
    }

    State2 advance(State2 y, double t_from, double t_to) {
        double t = t_from;
        const double span = t_to - t_from;
        if (span == 0.0) return y;
        const double rate_scale = std::max(rates_.r1 + rates_.r2, 1e-30);
        double h = std::min(span, 0.05 / rate_scale);
        while (t < t_to) {
            const double remaining = t_to - t;
            const double h_min = 16.0 * std::numeric_limits<double>::epsilon() *
                                 std::max(std::abs(t), 1.0);
            if (remaining <= h_min) {
                break;  // within rounding of the target
            }
            h = std::min(h, remaining);
            if (h < h_min) {
                throw std::runtime_error(
                    "propagate_ode: step size underflow at t = " + std::to_string(t));
            }
            auto [y_new, err] = step(y, h);
            if (err <= 1.0) {
                t += h;
                y = y_new;
                h *= std::min(5.0, std::max(0.2, 0.9 * std::pow(std::max(err, 1e-16), -0.2)));
            } else {
                h *= std::max(0.2, 0.9 * std::pow(err, -0.2));
            }
        }
        return y;
    }

  private:
    std::pair<State2, double> step(const State2& y, double h) const {
        const auto f = [&](const State2& s) { return rate_derivative(rates_, s); };
        const auto axpy = [](const State2& s, double c, const State2& k) {
            return State2{s.p0 + c * k.p0, s.p1 + c * k.p1};
        };

        const State2 k1 = f(y);
        const State2 k2 = f(axpy(y, h * (1.0 / 5.0), k1));
        State2 tmp = axpy(y, h * (3.0 / 40.0), k1);
        tmp = axpy(tmp, h * (9.0 / 40.0), k2);
        const State2 k3 = f(tmp);
        tmp = axpy(y, h * (44.0 / 45.0), k1);
        tmp = axpy(tmp, h * (-56.0 / 15.0), k2);
        tmp = axpy(tmp, h * (32.0 / 9.0), k3);
        const State2 k4 = f(tmp);
        tmp = axpy(y, h * (19372.0 / 6561.0), k1);
        tmp = axpy(tmp, h * (-25360.0 / 2187.0), k2);
        tmp = axpy(tmp, h * (64448.0 / 6561.0), k3);
        tmp = axpy(tmp, h * (-212.0 / 729.0), k4);
        const State2 k5 = f(tmp);
        tmp = axpy(y, h * (9017.0 / 3168.0), k1);
        tmp = axpy(tmp, h * (-355.0 / 33.0), k2);
        tmp = axpy(tmp, h * (46732.0 / 5247.0), k3);
        tmp = axpy(tmp, h * (49.0 / 176.0), k4);
        tmp = axpy(tmp, h * (-5103.0 / 18656.0), k5);
        const State2 k6 = f(tmp);

        State2 y5 = axpy(y, h * (35.0 / 384.0), k1);
        y5 = axpy(y5, h * (500.0 / 1113.0), k3);
        y5 = axpy(y5, h * (125.0 / 192.0), k4);
        y5 = axpy(y5, h * (-2187.0 / 6784.0), k5);
        y5 = axpy(y5, h * (11.0 / 84.0), k6);

        const State2 k7 = f(y5);
        State2 y4 = axpy(y, h * (5179.0 / 57600.0), k1);
        y4 = axpy(y4, h * (7571.0 / 16695.0), k3);
        y4 = axpy(y4, h * (393.0 / 640.0), k4);
        y4 = axpy(y4, h * (-92097.0 / 339200.0), k5);
        y4 = axpy(y4, h * (187.0 / 2100.0), k6);
        y4 = axpy(y4, h * (1.0 / 40.0), k7);

        const auto scaled = [&](double e, double v) {
            return std::abs(e) / (tol_ + tol_ * std::abs(v));
        };
        const double err = std::max(scaled(y5.p0 - y4.p0, y5.p0),
                                    scaled(y5.p1 - y4.p1, y5.p1));
        return {y5, err};
    }

    const RateSet& rates_;
    double tol_;
};

void check_grid(std::span<const double> t_grid) {
    if (t_grid.empty()) {
        throw std::invalid_argument("time grid is empty");
    }
    if (!(t_grid.front() >= 0.0)) {
        throw std::invalid_argument("time grid must start at t >= 0");
    }
    for (std::size_t i = 1; i < t_grid.size(); ++i) {
        if (!(t_grid[i] >= t_grid[i - 1])) {
            throw std::invalid_argument("time grid must be nondecreasing");
        }
    }
}

}  // namespace

std::vector<Populations> propagate_ode(const InitialCondition& init, const RateSet& rates,
                                       std::span<const double> t_grid, double local_tol) {
    check_grid(t_grid);
    DormandPrince stepper(rates, local_tol);
    std::vector<Populations> out;
    out.reserve(t_grid.size());
    State2 y{init.weight0, init.weight1};
    double t = 0.0;
    for (double target : t_grid) {
        y = stepper.advance(y, t, target);
        t = target;
        out.push_back({y.p0, y.p1});
    }
    return out;
}

std::vector<double> regression_correlator(const RateSet& rates,
                                          std::span<const double> t_grid) {
    if (!(rates.big_gamma > 0.0)) {
        throw std::invalid_argument("regression_correlator: broadening must be > 0");
    }
    const Populations steady = steady_state(rates);
    const JumpCoefficients jc = jump_coefficients(rates);
    const double w = jc.a + jc.b;
    // Mean branch currents via the component decomposition, not the compact
    // rate-combination forms the closed-form factor uses.
    const double mean_left = steady_components(rates, Lead::kLeft).branch;
    const double mean_right = steady_components(rates, Lead::kRight).branch;

    // Steady-channel weight G(t) extracted from a normalized reference run:
    // from the empty start p1(t) = p1_steady * G(t) (occupied analogue for p0).
    const bool use_empty = steady.p1 >= steady.p0;
    const auto reference = propagate_ode(
        use_empty ? InitialCondition::empty() : InitialCondition::occupied(), rates,
        t_grid, 1e-13);
    const auto conditional =
        propagate_ode(InitialCondition::mixed(jc.a, jc.b), rates, t_grid, 1e-13);

    const double tilde_plus_left = rates.tilde_plus(Lead::kLeft);
    const double tilde_minus_left = rates.tilde_minus(Lead::kLeft);
    std::vector<double> correlator(t_grid.size());
    for (std::size_t i = 0; i < t_grid.size(); ++i) {
        const double g = use_empty ? reference[i].p1 / steady.p1
                                   : reference[i].p0 / steady.p0;
        // decaying-initial-channel content of the conditional state
        const double q0 = conditional[i].p0 - w * steady.p0 * g;
        const double q1 = conditional[i].p1 - w * steady.p1 * g;
        const double conditional_left =
            w * g * mean_left + tilde_plus_left * q1 - tilde_minus_left * q0;
        correlator[i] = conditional_left - mean_left * mean_right;
    }
    return correlator;
}

Lead channel_lead(JumpChannel channel) {
    return static_cast<int>(channel) < 4 ? Lead::kLeft : Lead::kRight;
}

int channel_charge_sign(JumpChannel channel) {
    switch (channel) {
        case JumpChannel::kLeftNormalIn:
        case JumpChannel::kLeftAndreevIn:
        case JumpChannel::kRightNormalIn:
        case JumpChannel::kRightAndreevIn:
            return +1;
        default:
            return -1;
    }
}

int channel_state_before(JumpChannel channel) {
    switch (channel) {
        case JumpChannel::kLeftNormalIn:
        case JumpChannel::kLeftAndreevOut:
        case JumpChannel::kRightNormalIn:
        case JumpChannel::kRightAndreevOut:
            return 0;
        default:
            return 1;
    }
}

std::string_view channel_token(JumpChannel channel) {
    switch (channel) {
        case JumpChannel::kLeftNormalIn: return "L+";
        case JumpChannel::kLeftNormalOut: return "L-";
        case JumpChannel::kLeftAndreevIn: return "Lt+";
        case JumpChannel::kLeftAndreevOut: return "Lt-";
        case JumpChannel::kRightNormalIn: return "R+";
        case JumpChannel::kRightNormalOut: return "R-";
        case JumpChannel::kRightAndreevIn: return "Rt+";
        case JumpChannel::kRightAndreevOut: return "Rt-";
    }
    return "?";
}

namespace {

// Exit channels per state. From |0>: the f-creating channels; from |1>: the
// f-annihilating ones.
constexpr JumpChannel kFromEmpty[4] = {
    JumpChannel::kLeftNormalIn, JumpChannel::kRightNormalIn,
    JumpChannel::kLeftAndreevOut, JumpChannel::kRightAndreevOut};
constexpr JumpChannel kFromOccupied[4] = {
    JumpChannel::kLeftNormalOut, JumpChannel::kRightNormalOut,
    JumpChannel::kLeftAndreevIn, JumpChannel::kRightAndreevIn};

std::array<double, 4> exit_rates(const RateSet& r, int state) {
    if (state == 0) {
        return {r.gamma_plus[0], r.gamma_plus[1], r.gamma_tilde_minus[0],
                r.gamma_tilde_minus[1]};
    }
    return {r.gamma_minus[0], r.gamma_minus[1], r.gamma_tilde_plus[0],
            r.gamma_tilde_plus[1]};
}

std::mt19937_64 make_stream(std::uint64_t seed) {
    std::seed_seq seq{static_cast<std::uint32_t>(seed), static_cast<std::uint32_t>(seed >> 32),
                      0x9e3779b9u, 0x7f4a7c15u};
    return std::mt19937_64(seq);
}

template <typename OnEvent>
void run_gillespie(const RateSet& rates, double duration, std::uint64_t seed,
                   OnEvent&& on_event) {
    if (!(duration > 0.0)) {
        throw std::invalid_argument("trajectory duration must be > 0");
    }
    std::mt19937_64 rng = make_stream(seed);
    std::uniform_real_distribution<double> uniform(0.0, 1.0);

    int state = 0;
    double t = 0.0;
    while (true) {
        const auto rates4 = exit_rates(rates, state);
        const double total = rates4[0] + rates4[1] + rates4[2] + rates4[3];
        if (!(total > 0.0)) {
            return;  // absorbing state, trajectory truncated here
        }
        double u = uniform(rng);
        while (u <= 0.0) u = uniform(rng);
        t += -std::log(u) / total;
        if (t >= duration) {
            return;
        }
        const double pick = uniform(rng) * total;
        int k = 0;
        double cumulative = rates4[0];
        while (k < 3 && pick > cumulative) {
            ++k;
            cumulative += rates4[k];
        }
        const JumpChannel channel = (state == 0) ? kFromEmpty[k] : kFromOccupied[k];
        state = 1 - state;
        on_event(t, channel, state);
    }
}

// Batch-means accumulator over equal time batches.
class BatchAccumulator {
  public:
    BatchAccumulator(double duration, int n_batches)
        : duration_(duration), n_batches_(n_batches), batch_len_(duration / n_batches) {
        if (!(duration > 0.0)) {
            throw std::invalid_argument("estimate: duration must be > 0");
        }
        if (n_batches < 2) {
            throw std::invalid_argument("estimate: need at least 2 batches");
        }
        occupancy_time_.assign(n_batches, 0.0);
        lead_charge_[0].assign(n_batches, 0.0);
        lead_charge_[1].assign(n_batches, 0.0);
        for (auto& c : channel_count_) c.assign(n_batches, 0.0);
    }

    void event(double time, JumpChannel channel, int state_after) {
        add_dwell(last_time_, std::min(time, duration_), state_);
        last_time_ = time;
        state_ = state_after;
        if (time < duration_) {
            const int batch = batch_index(time);
            const int lead = index_of(channel_lead(channel));
            lead_charge_[lead][batch] += channel_charge_sign(channel);
            channel_count_[static_cast<int>(channel)][batch] += 1.0;
            ++n_jumps_;
            ++raw_counts_[static_cast<int>(channel)];
        }
    }

    TrajectoryStats finish(std::uint64_t seed) {
        add_dwell(last_time_, duration_, state_);
        last_time_ = duration_;
        TrajectoryStats stats;
        stats.seed = seed;
        stats.n_jumps = n_jumps_;
        stats.channel_counts = raw_counts_;
        stats.occupancy = batch_stats(occupancy_time_, batch_len_);
        for (int lead = 0; lead < 2; ++lead) {
            stats.lead_current[lead] = batch_stats(lead_charge_[lead], batch_len_);
        }
        for (int c = 0; c < kNumJumpChannels; ++c) {
            stats.channel_flux[c] = batch_stats(channel_count_[c], batch_len_);
        }
        return stats;
    }

  private:
    int batch_index(double time) const {
        const int i = static_cast<int>(time / batch_len_);
        return std::clamp(i, 0, n_batches_ - 1);
    }

    void add_dwell(double from, double to, int state) {
        if (state != 1 || to <= from) return;
        int b = batch_index(from);
        double cursor = from;
        while (cursor < to) {
            const double batch_end = std::min((b + 1) * batch_len_, to);
            occupancy_time_[b] += batch_end - cursor;
            cursor = batch_end;
            ++b;
            if (b >= n_batches_) break;
        }
    }

    // per-batch totals scaled to rates, then mean +/- SE over batches
    static ValueWithError batch_stats(const std::vector<double>& totals, double batch_len) {
        const int n = static_cast<int>(totals.size());
        double mean = 0.0;
        for (double v : totals) mean += v / batch_len;
        mean /= n;
        double var = 0.0;
        for (double v : totals) {
            const double d = v / batch_len - mean;
            var += d * d;
        }
        var /= (n - 1);
        return {mean, std::sqrt(var / n)};
    }

    double duration_;
    int n_batches_;
    double batch_len_;
    double last_time_ = 0.0;
    int state_ = 0;
    std::size_t n_jumps_ = 0;
    std::vector<double> occupancy_time_;
    std::array<std::vector<double>, 2> lead_charge_;
    std::array<std::vector<double>, 8> channel_count_;
    std::array<std::uint64_t, 8> raw_counts_{};
};

}  // namespace

std::vector<JumpRecord> simulate_trajectory(const RateSet& rates, double duration,
                                            std::uint64_t seed) {
    std::vector<JumpRecord> records;
    run_gillespie(rates, duration, seed,
                  [&](double time, JumpChannel channel, int state_after) {
                      records.push_back(
                          {time, channel, state_after, channel_charge_sign(channel)});
                  });
    return records;
}

TrajectoryStats estimate_steady_observables(std::span<const JumpRecord> records,
                                            double duration, std::uint64_t seed,
                                            int n_batches) {
    BatchAccumulator acc(duration, n_batches);
    for (const JumpRecord& record : records) {
        acc.event(record.time, record.channel, record.state_after);
    }
    return acc.finish(seed);
}

TrajectoryStats simulate_steady_observables(const RateSet& rates, double duration,
                                            std::uint64_t seed, int n_batches) {
    BatchAccumulator acc(duration, n_batches);
    run_gillespie(rates, duration, seed,
                  [&](double time, JumpChannel channel, int state_after) {
                      acc.event(time, channel, state_after);
                  });
    return acc.finish(seed);
}

void write_trajectory(std::ostream& out, std::span<const JumpRecord> records) {
    char buf[64];
    for (const JumpRecord& record : records) {
        std::snprintf(buf, sizeof(buf), "%.17g", record.time);
        out << buf << '\t' << channel_token(record.channel) << '\t' << record.state_after
            << '\n';
    }
}

}  // namespace mzm
