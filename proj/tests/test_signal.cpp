#include <doctest.h>

#include <cmath>

#include "dmgrad/signal.hpp"
#include "dmgrad/timescales.hpp"
#include "dmgrad/verify.hpp"

using namespace dmgrad;

namespace {

Scenario sp_scenario(uint64_t seed) {
    Rng rng(seed);
    Scenario sc = random_scenario(rng);
    sc.grad.geom.diffraction = Diffraction::SinglePhoton;
    return sc;
}

double eq16(const Scenario& sc) {
    const double w = sc.dilaton.omega_rho;
    const double SL = std::sin(0.5 * w * sc.grad.tau_L());
    const double ST = std::sin(0.5 * w * sc.grad.geom.T);
    const double dOm = sc.species.delta_eps() * sc.species.compton_frequency() +
                       sc.species.eps_bar() * sc.species.transition_frequency();
    return 32.0 * dOm * dOm / (w * w) * sc.dilaton.rho_0 * sc.dilaton.rho_0 * SL * SL *
           ST * ST * ST * ST;
}

}  // namespace

TEST_CASE("differential phase trivia") {
    Scenario sc = sp_scenario(101);
    const PerturbationParameters pert = sc.pert();
    SUBCASE("identical interferometers in the L->0, p1=p0 limit") {
        Scenario z = sc;
        z.grad.L = 1e-300;  // tau_L underflows to a no-op shift
        z.grad.p1 = z.grad.geom.p0;
        for (int l = 0; l < kNumLabels; ++l)
            CHECK(std::abs(differential_phase(l, z.grad, z.species, z.dilaton, pert,
                                              0.7)) < 1e-12);
    }
    SUBCASE("phi_7 is position- and time-independent, so it always cancels") {
        for (double fr : {0.0, 1.0, 4.0})
            CHECK(differential_phase(7, sc.grad, sc.species, sc.dilaton, pert, fr) == 0.0);
    }
    SUBCASE("clock differential matches the timescale difference") {
        const double fr = 1.3;
        const double dOm = sc.species.delta_eps() * sc.species.compton_frequency() +
                           sc.species.eps_bar() * sc.species.transition_frequency();
        const double t1_lo =
            timescale(TimescaleKind::Tau1, sc.grad.geom.t0, sc.grad.geom.T,
                      sc.dilaton.omega_rho, fr);
        const double t1_hi =
            timescale(TimescaleKind::Tau1, sc.grad.geom.t0 + sc.grad.tau_L(),
                      sc.grad.geom.T, sc.dilaton.omega_rho, fr);
        const double expect = -sc.dilaton.rho_0 * dOm * (t1_hi - t1_lo);
        const double got =
            differential_phase(kLabelM, sc.grad, sc.species, sc.dilaton, pert, fr);
        CHECK(got == doctest::Approx(expect).epsilon(1e-9));
    }
}

TEST_CASE("numeric signal amplitude") {
    Scenario sc = sp_scenario(102);
    const PerturbationParameters pert = sc.pert();
    SUBCASE("no dilaton, no source coupling: zero") {
        Scenario z = sc;
        z.dilaton.rho_0 = 0.0;
        z.dilaton.eps_S = 0.0;
        z.grad.p1 = z.grad.geom.p0;  // static mass-defect differentials off
        const SignalBreakdown b =
            signal_amplitude_numeric(z.grad, z.species, z.dilaton, z.pert());
        CHECK(b.total == 0.0);
    }
    SUBCASE("static mass-defect differentials survive without any dilaton") {
        Scenario z = sc;
        z.dilaton.rho_0 = 0.0;
        z.dilaton.eps_S = 0.0;
        const double dc = differential_phase(3, z.grad, z.species, z.dilaton,
                                             z.pert(), 0.0);
        const double expect = z.species.delta_mu0() * z.grad.geom.k *
                              z.grad.geom.g0 * z.grad.geom.T * z.grad.geom.T *
                              z.grad.wp_diff();
        CHECK(dc == doctest::Approx(expect).epsilon(1e-12));
        // labels 3 and 11 coincide: ordered-pair sum gives 8 dc^2
        const SignalBreakdown b =
            signal_amplitude_numeric(z.grad, z.species, z.dilaton, z.pert());
        CHECK(b.total == doctest::Approx(8.0 * dc * dc).epsilon(1e-10));
    }
    SUBCASE("never negative, and invariant under a phase-origin shift") {
        const SignalBreakdown b =
            signal_amplitude_numeric(sc.grad, sc.species, sc.dilaton, pert);
        CHECK(b.total >= 0.0);
        // same average computed with all phi_rho nodes offset by a constant
        const int n = 256;
        double acc = 0.0;
        for (int q = 0; q < n; ++q) {
            const double fr = 2.0 * M_PI * q / n + 0.8137;
            double tot = 0.0;
            for (int l = 0; l < kNumLabels; ++l)
                tot += differential_phase(l, sc.grad, sc.species, sc.dilaton, pert, fr);
            acc += tot * tot;
        }
        acc = 2.0 * acc / n;
        CHECK(b.total == doctest::Approx(acc).epsilon(1e-12));
    }
    SUBCASE("clock-only scenario reproduces the closed-form mm correlation") {
        Scenario z = sc;
        z.species.mass_defect = 0.0;  // keeps omega_c, kills the DC terms
        z.dilaton.eps_S = 0.0;
        z.grad.geom.k = 1e-30;  // recoil and gravity terms negligible
        z.grad.geom.g0 = 0.0;
        const SignalBreakdown b =
            signal_amplitude_numeric(z.grad, z.species, z.dilaton, z.pert());
        CHECK(2.0 * b.correlations.at({kLabelM, kLabelM}) ==
              doctest::Approx(2.0 * eq16(z)).epsilon(1e-10));
        CHECK(b.total == doctest::Approx(2.0 * eq16(z)).epsilon(1e-8));
    }
}

TEST_CASE("analytic catalog matches the numeric cross-averages") {
    for (uint64_t seed : {301u, 302u, 303u}) {
        Rng rng(seed);
        const Scenario sc = random_scenario(rng);
        const PerturbationParameters pert = sc.pert();
        const SignalBreakdown num =
            signal_amplitude_numeric(sc.grad, sc.species, sc.dilaton, pert);
        for (const auto& [key, nval] : num.correlations) {
            if (!correlation_cataloged(key.first, key.second)) continue;
            const double aval = correlation_analytic(key.first, key.second, sc.grad,
                                                     sc.species, sc.dilaton, pert);
            const double floor =
                1e-4 * std::sqrt(num.correlations.at({key.first, key.first}) *
                                 num.correlations.at({key.second, key.second}));
            const double denom =
                std::max({std::abs(aval), std::abs(nval), floor, 1e-300});
            CHECK(std::abs(aval - nval) / denom < 1e-9);
        }
    }
}

TEST_CASE("catalog zeroes at special phases") {
    Scenario sc = sp_scenario(111);
    SUBCASE("gravity-oscillation cross term vanishes in phase") {
        sc.dilaton.phi_S = 0.0;
        CHECK(correlation_analytic(kLabelM, 9, sc.grad, sc.species, sc.dilaton,
                                   sc.pert()) == 0.0);
    }
    SUBCASE("clock correlation vanishes on full oscillation periods") {
        sc.dilaton.omega_rho = 2.0 * M_PI / sc.grad.geom.T;
        const double mm = correlation_analytic(kLabelM, kLabelM, sc.grad, sc.species,
                                               sc.dilaton, sc.pert());
        const double generic = [&] {
            Scenario g = sc;
            g.dilaton.omega_rho = M_PI / sc.grad.geom.T;
            return correlation_analytic(kLabelM, kLabelM, g.grad, g.species, g.dilaton,
                                        g.pert());
        }();
        CHECK(std::abs(mm) <= 1e-60 * generic);
    }
}

TEST_CASE("caption identities hold exactly in the catalog") {
    Scenario sc = sp_scenario(104);
    const PerturbationParameters pert = sc.pert();
    CHECK(correlation_analytic(kLabelM, 13, sc.grad, sc.species, sc.dilaton, pert) ==
          correlation_analytic(kLabelM, 5, sc.grad, sc.species, sc.dilaton, pert));
    CHECK(correlation_analytic(kLabelM, 14, sc.grad, sc.species, sc.dilaton, pert) ==
          correlation_analytic(kLabelM, 6, sc.grad, sc.species, sc.dilaton, pert));
}

TEST_CASE("uncataloged pairs raise and are flagged") {
    Scenario sc = sp_scenario(105);
    CHECK(!correlation_cataloged(3, 3));
    CHECK_THROWS_AS(
        correlation_analytic(3, 3, sc.grad, sc.species, sc.dilaton, sc.pert()),
        std::domain_error);
}

TEST_CASE("phi_S-independent mode drops the mixed gravity-oscillation terms") {
    Scenario sc = sp_scenario(106);
    sc.grad.geom.g0 = 9.81;
    const PerturbationParameters pert = sc.pert();
    const SignalBreakdown b = signal_amplitude_numeric(
        sc.grad, sc.species, sc.dilaton, pert, PhiSMode::IndependentPhiS, 128, 64);
    const double scale = std::sqrt(b.correlations.at({9, 9}) *
                                   b.correlations.at({kLabelM, kLabelM})) +
                         1e-300;
    CHECK(std::abs(b.correlations.at({kLabelM, 9})) < 1e-10 * scale);
}

TEST_CASE("regime amplitudes") {
    SUBCASE("MeanOnly equals twice the mm correlation at delta_eps = 0") {
        Scenario sc = sp_scenario(107);
        sc.species.eps_g = 4e-4;
        sc.species.eps_e = 4e-4;
        const PerturbationParameters pert = sc.pert();
        const double reg =
            regime_amplitude(Regime::MeanOnly, sc.grad, sc.species, sc.dilaton, pert);
        const double mm = correlation_analytic(kLabelM, kLabelM, sc.grad, sc.species,
                                               sc.dilaton, pert);
        CHECK(reg == doctest::Approx(2.0 * mm).epsilon(1e-12));
    }
    SUBCASE("DiffOnly equals twice the mm correlation at eps_bar = 0") {
        Scenario sc = sp_scenario(108);
        sc.species.eps_g = -3e-4;
        sc.species.eps_e = 3e-4;
        sc.species.mass_defect = 0.0;
        const PerturbationParameters pert = sc.pert();
        const double reg =
            regime_amplitude(Regime::DiffOnly, sc.grad, sc.species, sc.dilaton, pert);
        const double mm = correlation_analytic(kLabelM, kLabelM, sc.grad, sc.species,
                                               sc.dilaton, pert);
        CHECK(reg == doctest::Approx(2.0 * mm).epsilon(1e-12));
    }
    SUBCASE("BraggZeroG matches the full numeric signal") {
        Scenario sc = sp_scenario(109);
        sc.grad.geom.diffraction = Diffraction::Bragg;
        sc.grad.geom.g0 = 0.0;
        const PerturbationParameters pert = sc.pert();
        const double reg =
            regime_amplitude(Regime::BraggZeroG, sc.grad, sc.species, sc.dilaton, pert);
        const SignalBreakdown num =
            signal_amplitude_numeric(sc.grad, sc.species, sc.dilaton, pert);
        CHECK(num.total == doctest::Approx(reg).epsilon(1e-9));
    }
    SUBCASE("preconditions") {
        Scenario sc = sp_scenario(110);
        sc.species.eps_g = 1e-4;
        sc.species.eps_e = 2e-4;
        CHECK_THROWS_AS(regime_amplitude(Regime::MeanOnly, sc.grad, sc.species,
                                         sc.dilaton, sc.pert()),
                        std::domain_error);
        CHECK_THROWS_AS(regime_amplitude(Regime::DiffOnly, sc.grad, sc.species,
                                         sc.dilaton, sc.pert()),
                        std::domain_error);
        sc.grad.geom.g0 = 9.8;
        CHECK_THROWS_AS(regime_amplitude(Regime::BraggZeroG, sc.grad, sc.species,
                                         sc.dilaton, sc.pert()),
                        std::domain_error);
    }
}

TEST_CASE("coupling ratio map") {
    SUBCASE("limits") {
        const auto m = coupling_ratio_map({1e-11}, {1e-22, 1e-11});
        CHECK(std::abs(m[0][0] - 1.0) < 1e-10);          // deltaeps/epsbar -> 0
        CHECK(m[0][1] == doctest::Approx(0.25).epsilon(1e-14));  // on the locus
    }
    SUBCASE("transition band crosses the preset lines") {
        // rows: Omega/omega_c at the rubidium and strontium lines
        const auto m = coupling_ratio_map({1e-16, 1e-11}, {1e-18, 1e-8});
        CHECK(m[0][0] > 0.9);
        CHECK(m[0][1] < 1e-4);
        CHECK(m[1][0] > 0.99);
        CHECK(m[1][1] < 1e-4);
    }
}

TEST_CASE("scale hierarchy for the strontium preset") {
    Scenario sc;
    sc.species = strontium88(1e-4, 1e-4 + 5e-5);  // equal-order violation parameters
    sc.dilaton.omega_rho = 2.0;
    sc.dilaton.rho_0 = 1e-15;
    sc.dilaton.eps_S = 1.25e-4;
    sc.dilaton.phi_S = 0.7;
    sc.grad.geom.k = 1.1e7;
    sc.grad.geom.T = 1.0;
    sc.grad.geom.g0 = 9.81;
    sc.grad.geom.p0 = 0.0;
    sc.grad.L = 100.0;
    sc.grad.p1 = 0.0;
    const PerturbationParameters pert = sc.pert();
    const SignalBreakdown num =
        signal_amplitude_numeric(sc.grad, sc.species, sc.dilaton, pert);
    const double mm = num.correlations.at({kLabelM, kLabelM});
    // omega_c-scaled clock correlation dominates every motional one
    for (const auto& [key, v] : num.correlations) {
        if (key.first == kLabelM && key.second == kLabelM) continue;
        CHECK(std::abs(v) < std::abs(mm));
    }
    // and the Omega-scale terms beat the recoil-scale Bragg survivors
    CHECK(std::abs(num.correlations.at({kLabelM, 2})) >
          std::abs(num.correlations.at({1, 1})));
}
