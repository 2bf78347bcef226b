#include "mzm/sweep.hpp"

#include <cstdio>
#include <ostream>
#include <stdexcept>
#include <thread>
#include <vector>

#include "mzm/correlator.hpp"
#include "mzm/currents.hpp"
#include "mzm/populations.hpp"
#include "mzm/rates.hpp"

namespace mzm {

void SweepConfig::validate() const {
    if (ev_steps < 2) {
        throw std::invalid_argument("ev_steps must be >= 2");
    }
    if (!(ev_min < ev_max)) {
        throw std::invalid_argument("ev_min must be < ev_max");
    }
    if (epsilon_m_values.empty()) {
        throw std::invalid_argument("at least one epsilon_m value is required");
    }
    if (mc_duration && !(*mc_duration > 0.0)) {
        throw std::invalid_argument("mc_duration must be > 0");
    }
    device_at(ev_min, epsilon_m_values.front()).validate();
}

DeviceParams SweepConfig::device_at(double ev, double epsilon_m) const {
    DeviceParams params;
    params.gamma_e_left = gamma_e_left;
    params.gamma_h_left = gamma_h_left;
    params.gamma_e_right = gamma_e_right;
    params.gamma_h_right = gamma_h_right;
    params.epsilon_m = epsilon_m;
    params.mu_left = ev;
    params.mu_right = (bias_mode == BiasMode::kSymmetric) ? ev : -ev;
    params.temperature = temperature;
    return params;
}

std::string csv_header() {
    return "ev,epsilon_m,i_l_total,i_r_total,i_tilde_l,i_tilde_r,"
           "i1_a1_l,i1_a2_l,i1_a3_l,i2_a1_l,i2_a2_l,i2_a3_l,"
           "a,b,c_lr,c_lr_over_gamma2,big_gamma";
}

namespace {

SweepRow evaluate_point(const SweepConfig& config, double ev, double epsilon_m) {
    const DeviceParams params = config.device_at(ev, epsilon_m);
    const RateSet rates = compute_rates(params);
    const CurrentDecomposition left = steady_components(rates, Lead::kLeft);
    const CurrentDecomposition right = steady_components(rates, Lead::kRight);
    const CorrelatorResult correlator = cross_correlation_factor(rates);

    SweepRow row;
    row.ev = ev;
    row.epsilon_m = epsilon_m;
    row.i_l_total = left.total;
    row.i_r_total = right.total;
    row.i_tilde_l = left.branch;
    row.i_tilde_r = right.branch;
    row.i1_a1_l = left.i1_a1;
    row.i1_a2_l = left.i1_a2;
    row.i1_a3_l = left.i1_a3;
    row.i2_a1_l = left.i2_a1;
    row.i2_a2_l = left.i2_a2;
    row.i2_a3_l = left.i2_a3;
    row.a = correlator.a;
    row.b = correlator.b;
    row.c_lr = correlator.c_lr;
    row.c_lr_over_gamma2 = correlator.c_lr / (rates.big_gamma * rates.big_gamma);
    row.big_gamma = rates.big_gamma;
    return row;
}

}  // namespace

std::vector<SweepRow> run_sweep(const SweepConfig& config) {
    config.validate();
    const std::size_t n_eps = config.epsilon_m_values.size();
    const std::size_t n_ev = static_cast<std::size_t>(config.ev_steps);
    const double ev_step = (config.ev_max - config.ev_min) / (config.ev_steps - 1);

    std::vector<SweepRow> rows(n_eps * n_ev);
    const unsigned n_threads =
        std::max(1u, std::min(std::thread::hardware_concurrency(),
                              static_cast<unsigned>(rows.size())));

    // grid points are independent; rows land at their grid index, so the
    // output order never depends on scheduling
    auto worker = [&](unsigned stripe) {
        for (std::size_t flat = stripe; flat < rows.size(); flat += n_threads) {
            const std::size_t ie = flat / n_ev;
            const std::size_t iv = flat % n_ev;
            const double ev = config.ev_min + static_cast<double>(iv) * ev_step;
            rows[flat] = evaluate_point(config, ev, config.epsilon_m_values[ie]);
        }
    };
    if (n_threads == 1) {
        worker(0);
    } else {
        std::vector<std::thread> pool;
        pool.reserve(n_threads);
        for (unsigned s = 0; s < n_threads; ++s) pool.emplace_back(worker, s);
        for (auto& th : pool) th.join();
    }
    return rows;
}

void write_csv(std::ostream& out, const std::vector<SweepRow>& rows) {
    out << csv_header() << '\n';
    char buf[512];
    for (const SweepRow& r : rows) {
        std::snprintf(buf, sizeof(buf),
                      "%.17g,%.17g,%.17g,%.17g,%.17g,%.17g,%.17g,%.17g,%.17g,%.17g,"
                      "%.17g,%.17g,%.17g,%.17g,%.17g,%.17g,%.17g",
                      r.ev, r.epsilon_m, r.i_l_total, r.i_r_total, r.i_tilde_l,
                      r.i_tilde_r, r.i1_a1_l, r.i1_a2_l, r.i1_a3_l, r.i2_a1_l, r.i2_a2_l,
                      r.i2_a3_l, r.a, r.b, r.c_lr, r.c_lr_over_gamma2, r.big_gamma);
        out << buf << '\n';
    }
}

}  // namespace mzm
