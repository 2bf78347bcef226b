#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>
#include <numbers>
#include <random>

#include "mzm/currents.hpp"
#include "mzm/quadrature.hpp"
#include "test_helpers.hpp"

using namespace mzm;
namespace mt = mzm::testing;

TEST_CASE("lead currents vanish in equilibrium") {
    const RateSet rates = compute_rates(mt::equal_coupling_params(1.0, 0.0, 0.0));
    const Populations steady = steady_state(rates);
    for (Lead lead : {Lead::kLeft, Lead::kRight}) {
        const LeadCurrents currents = lead_currents(rates, steady, lead);
        CHECK(currents.i1 == 0.0);
        CHECK(currents.i2 == 0.0);
    }
}

TEST_CASE("lead currents in the one-sided limit") {
    const RateSet rates = mt::one_sided_symmetric();
    SUBCASE("half filling") {
        const LeadCurrents currents = lead_currents(rates, {0.5, 0.5}, Lead::kLeft);
        CHECK(currents.i1 == doctest::Approx(0.5));
        CHECK(currents.i2 == doctest::Approx(0.5));
    }
    SUBCASE("occupied start at t = 0") {
        const LeadCurrents currents = lead_currents(rates, {0.0, 1.0}, Lead::kLeft);
        CHECK(currents.i1 == doctest::Approx(0.0));  // -Gamma- = 0
        CHECK(currents.i2 == doctest::Approx(1.0));  // +Gammat+
    }
}

TEST_CASE("closed-form total equals the two-term sum") {
    std::mt19937_64 rng(21);
    for (int trial = 0; trial < 100; ++trial) {
        const RateSet rates = compute_rates(mt::random_params(rng));
        for (double p1 : {0.0, 0.17, 0.5, 0.83, 1.0}) {
            const Populations pops{1.0 - p1, p1};
            for (Lead lead : {Lead::kLeft, Lead::kRight}) {
                CHECK(std::abs(total_current_closed_form(rates, pops, lead) -
                               lead_currents(rates, pops, lead).total()) < 1e-12);
            }
        }
    }
}

TEST_CASE("total current is occupation-independent iff e and h couplings match") {
    RateSet rates = mt::one_sided_symmetric();
    SUBCASE("matched couplings") {
        const double at0 = total_current_closed_form(rates, {1.0, 0.0}, Lead::kLeft);
        const double at1 = total_current_closed_form(rates, {0.0, 1.0}, Lead::kLeft);
        CHECK(at0 == doctest::Approx(at1).epsilon(1e-15));
    }
    SUBCASE("mismatch shifts the total by -(coupling_e - coupling_h)") {
        rates.coupling_e[0] = 2.0;
        rates.coupling_h[0] = 1.0;
        const double at0 = total_current_closed_form(rates, {1.0, 0.0}, Lead::kLeft);
        const double at1 = total_current_closed_form(rates, {0.0, 1.0}, Lead::kLeft);
        CHECK(at1 - at0 == doctest::Approx(-1.0));
    }
}

TEST_CASE("steady components: structure") {
    SUBCASE("identical leads at symmetric bias have no transmission component") {
        const RateSet rates = compute_rates(mt::equal_coupling_params(1.0, 3.0, 3.0));
        const CurrentDecomposition left = steady_components(rates, Lead::kLeft);
        CHECK(left.i1_a3 == 0.0);
        CHECK(left.i2_a3 == 0.0);
    }
    SUBCASE("one-sided rates give a quarter per local-Andreev branch") {
        const CurrentDecomposition left =
            steady_components(mt::one_sided_symmetric(), Lead::kLeft);
        CHECK(left.i1_a1 == doctest::Approx(0.25));
        CHECK(left.i1_a2 == doctest::Approx(0.25));
        CHECK(left.total == doctest::Approx(1.0));
    }
    SUBCASE("the two local-Andreev electrons contribute equally") {
        std::mt19937_64 rng(22);
        for (int trial = 0; trial < 100; ++trial) {
            const RateSet rates = compute_rates(mt::random_params(rng));
            for (Lead lead : {Lead::kLeft, Lead::kRight}) {
                const CurrentDecomposition d = steady_components(rates, lead);
                CHECK(d.i2_a1 == doctest::Approx(d.i1_a1).epsilon(1e-14));
            }
        }
    }
    SUBCASE("components reassemble the steady current") {
        std::mt19937_64 rng(23);
        for (int trial = 0; trial < 50; ++trial) {
            const RateSet rates = compute_rates(mt::random_params(rng));
            const Populations steady = steady_state(rates);
            for (Lead lead : {Lead::kLeft, Lead::kRight}) {
                const CurrentDecomposition d = steady_components(rates, lead);
                CHECK(std::abs(d.a_sum() - d.total) < 1e-14);
                CHECK(std::abs(d.total - lead_currents(rates, steady, lead).total()) <
                      1e-10);
            }
        }
    }
}

TEST_CASE("transport coefficients: Lorentzian resonance") {
    auto params = mt::equal_coupling_params(1.0, 0.0, 0.0, 0.4);
    const double big_gamma = params.broadening();
    const double peak =
        transport_coefficient(TransportProcess::kAndreevLL, params.epsilon_m, params);
    CHECK(peak == doctest::Approx(params.gamma_e_left * params.gamma_h_left /
                                  (big_gamma * big_gamma)));
    CHECK(transport_coefficient(TransportProcess::kAndreevLL,
                                params.epsilon_m + big_gamma, params) ==
          doctest::Approx(0.5 * peak));
    CHECK(transport_coefficient(TransportProcess::kAndreevLL,
                                params.epsilon_m - big_gamma, params) ==
          doctest::Approx(0.5 * peak));
    // equal couplings, on resonance: gamma^2 / (2 gamma)^2
    auto flat = mt::equal_coupling_params(1.0, 0.0, 0.0);
    CHECK(transport_coefficient(TransportProcess::kAndreevLL, 0.0, flat) ==
          doctest::Approx(0.25));
}

TEST_CASE("integral form matches the rate products at T = 0") {
    std::mt19937_64 rng(24);
    for (int trial = 0; trial < 60; ++trial) {
        const DeviceParams params = mt::random_params(rng);
        const RateSet rates = compute_rates(params);
        for (Lead lead : {Lead::kLeft, Lead::kRight}) {
            const CurrentDecomposition product = steady_components(rates, lead);
            const CurrentDecomposition integral = integral_form_currents(params, lead);
            CHECK(std::abs(product.i1_a1 - integral.i1_a1) < 1e-9);
            CHECK(std::abs(product.i1_a2 - integral.i1_a2) < 1e-9);
            CHECK(std::abs(product.i1_a3 - integral.i1_a3) < 1e-9);
            CHECK(std::abs(product.i2_a1 - integral.i2_a1) < 1e-9);
            CHECK(std::abs(product.i2_a2 - integral.i2_a2) < 1e-9);
            CHECK(std::abs(product.i2_a3 - integral.i2_a3) < 1e-9);
        }
    }
}

TEST_CASE("integral form: degenerate windows and unsupported modes") {
    auto params = mt::equal_coupling_params(1.0, 1.5, 1.5);
    const CurrentDecomposition d = integral_form_currents(params, Lead::kLeft);
    CHECK(d.i1_a3 == 0.0);  // empty window, exact zero
    params.temperature = 0.1;
    CHECK_THROWS_AS(integral_form_currents(params, Lead::kLeft), std::domain_error);
}

TEST_CASE("integral form against a quadrature oracle") {
    // single left lead on resonance: local Andreev window [-Gamma, Gamma]
    DeviceParams params;
    params.gamma_e_left = params.gamma_h_left = 1.0;
    params.gamma_e_right = params.gamma_h_right = 0.0;
    params.epsilon_m = 0.0;
    params.mu_left = params.broadening();
    params.mu_right = 0.0;
    const CurrentDecomposition d = integral_form_currents(params, Lead::kLeft);
    const double numeric =
        integrate_adaptive(
            [&](double w) {
                return transport_coefficient(TransportProcess::kAndreevLL, w, params);
            },
            -params.mu_left, params.mu_left, 1e-12, 1e-15) /
        (2.0 * std::numbers::pi);
    CHECK(std::abs(d.i1_a1 - numeric) < 1e-9);
    CHECK(d.i1_a1 == doctest::Approx(0.25).epsilon(1e-12));

    // a generic two-lead crossed-Andreev window, same oracle
    std::mt19937_64 rng(25);
    const DeviceParams generic = mt::random_params(rng);
    const CurrentDecomposition gd = integral_form_currents(generic, Lead::kLeft);
    const double cross =
        integrate_adaptive(
            [&](double w) {
                return transport_coefficient(TransportProcess::kAndreevLR, w, generic);
            },
            -generic.mu_right, generic.mu_left, 1e-12, 1e-15) /
        (2.0 * std::numbers::pi);
    CHECK(std::abs(gd.i1_a2 - cross) < 1e-9);
}

TEST_CASE("transient channel currents") {
    std::mt19937_64 rng(26);
    const RateSet rates = compute_rates(mt::random_params(rng));

    SUBCASE("empty start at t = 0 carries only the B channel") {
        const CurrentDecomposition d = transient_channel_currents(
            rates, InitialCondition::empty(), 0.0, Lead::kLeft);
        CHECK(d.i1_b == doctest::Approx(rates.plus(Lead::kLeft)));
        CHECK(d.i2_b == doctest::Approx(-rates.tilde_minus(Lead::kLeft)));
        CHECK(d.i1_a1 == 0.0);
    }
    SUBCASE("occupied start flips the B-channel signs") {
        const CurrentDecomposition d = transient_channel_currents(
            rates, InitialCondition::occupied(), 0.0, Lead::kLeft);
        CHECK(d.i1_b == doctest::Approx(-rates.minus(Lead::kLeft)));
        CHECK(d.i2_b == doctest::Approx(rates.tilde_plus(Lead::kLeft)));
    }
    SUBCASE("the B channel dies out") {
        const CurrentDecomposition d = transient_channel_currents(
            rates, InitialCondition::empty(), 50.0 / rates.big_gamma, Lead::kLeft);
        CHECK(std::abs(d.i1_b) < 1e-15);
        CHECK(std::abs(d.i2_b) < 1e-15);
    }
    SUBCASE("channels plus components reassemble the transient current") {
        for (const auto& init : {InitialCondition::empty(), InitialCondition::occupied(),
                                 InitialCondition::mixed(0.2, 0.6)}) {
            for (double t : {0.0, 0.05, 0.4, 2.0, 9.0}) {
                const Populations pops = transient_populations(rates, init, t);
                for (Lead lead : {Lead::kLeft, Lead::kRight}) {
                    const CurrentDecomposition d =
                        transient_channel_currents(rates, init, t, lead);
                    CHECK(std::abs(d.total - lead_currents(rates, pops, lead).total()) <
                          1e-10);
                }
            }
        }
    }
}

TEST_CASE("branch current") {
    SUBCASE("no transmission components at symmetric bias, identical leads") {
        const RateSet rates = compute_rates(mt::equal_coupling_params(1.0, 2.5, 2.5));
        const CurrentDecomposition d = steady_components(rates, Lead::kLeft);
        CHECK(branch_current(d) == doctest::Approx(d.total).epsilon(1e-15));
    }
    SUBCASE("one-sided symmetric limit carries one unit") {
        const CurrentDecomposition d =
            steady_components(mt::one_sided_symmetric(), Lead::kLeft);
        CHECK(branch_current(d) == doctest::Approx(1.0));
    }
    SUBCASE("one-sided antisymmetric limit splits half in, half out") {
        const RateSet rates = mt::one_sided_antisymmetric();
        CHECK(branch_current(steady_components(rates, Lead::kLeft)) ==
              doctest::Approx(0.5));
        CHECK(branch_current(steady_components(rates, Lead::kRight)) ==
              doctest::Approx(-0.5));
    }
}

TEST_CASE("matched e/h couplings freeze the total current in time") {
    DeviceParams params;
    params.gamma_e_left = params.gamma_h_left = 1.3;
    params.gamma_e_right = params.gamma_h_right = 0.7;
    params.epsilon_m = 0.6;
    params.mu_left = 2.0;
    params.mu_right = -1.0;
    const RateSet rates = compute_rates(params);
    for (const auto& init : {InitialCondition::empty(), InitialCondition::occupied()}) {
        for (Lead lead : {Lead::kLeft, Lead::kRight}) {
            const double at0 =
                transient_channel_currents(rates, init, 0.0, lead).total;
            for (double t : {0.1, 0.5, 2.0, 10.0 / rates.big_gamma}) {
                const double at_t =
                    transient_channel_currents(rates, init, t, lead).total;
                CHECK(std::abs(at_t - at0) < 1e-12);
            }
        }
    }
}
