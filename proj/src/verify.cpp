#include "dmgrad/verify.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <map>
#include <sstream>

#include "dmgrad/quadrature.hpp"
#include "dmgrad/signal.hpp"
#include "dmgrad/timescales.hpp"
#include "dmgrad/trajectory.hpp"

namespace dmgrad {

uint64_t Rng::next() {
    // splitmix64; one fixed, documented stream
    state_ += 0x9e3779b97f4a7c15ull;
    uint64_t z = state_;
    z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ull;
    z = (z ^ (z >> 27)) * 0x94d049bb133111ebull;
    return z ^ (z >> 31);
}

double Rng::uniform() { return (next() >> 11) * 0x1.0p-53; }

double Rng::uniform(double lo, double hi) { return lo + (hi - lo) * uniform(); }

double Rng::log_uniform(double lo, double hi) {
    return std::exp(uniform(std::log(lo), std::log(hi)));
}

Scenario random_scenario(Rng& rng) {
    Scenario sc;
    const PhysicalConstants& pc = codata();
    sc.species.mean_mass = rng.uniform(0.5, 3.0) * 1.45e-25;
    sc.species.eps_g = rng.uniform(-1e-3, 1e-3);
    sc.species.eps_e = rng.uniform(-1e-3, 1e-3);
    const double dmu = rng.log_uniform(1e-13, 1e-10) * (rng.coin() ? 1.0 : -1.0);
    sc.species.mass_defect = dmu * sc.species.mean_mass;

    sc.grad.geom.T = rng.uniform(0.3, 3.0);
    sc.dilaton.omega_rho = rng.log_uniform(0.01, 100.0) / sc.grad.geom.T;
    sc.dilaton.phi_rho = rng.uniform(0.0, 2.0 * M_PI);
    sc.dilaton.rho_0 = rng.log_uniform(1e-16, 1e-8);
    sc.dilaton.eps_S = rng.uniform(-1e-3, 1e-3);
    sc.dilaton.phi_S = rng.uniform(0.0, 2.0 * M_PI);

    sc.grad.geom.k = rng.log_uniform(1e6, 2e7);
    sc.grad.geom.t0 = rng.uniform(0.0, 2.0) / sc.dilaton.omega_rho;
    sc.grad.geom.z0 = rng.uniform(-1.0, 1.0);
    sc.grad.geom.g0 = rng.coin() ? rng.uniform(0.5, 20.0) : 0.0;
    const double hk = pc.hbar * sc.grad.geom.k;
    sc.grad.geom.p0 = rng.uniform(-2.0, 2.0) * hk;
    sc.grad.geom.diffraction =
        rng.coin() ? Diffraction::SinglePhoton : Diffraction::Bragg;
    sc.grad.p1 = rng.uniform(-2.0, 2.0) * hk;
    // omega_rho * tau_L in [1e-3, 3]
    sc.grad.L = rng.log_uniform(1e-3, 3.0) / sc.dilaton.omega_rho * pc.c;
    sc.phi_rho_averaged = false;
    return sc;
}

std::string GateReport::to_string() const {
    std::ostringstream os;
    os << "gate " << name << ": " << (pass ? "PASS" : "FAIL") << " (" << trials
       << " trials";
    if (quadrature_failures) os << ", " << quadrature_failures << " quadrature failures";
    os << ")\n";
    char buf[160];
    for (const auto& r : rows) {
        std::snprintf(buf, sizeof buf, "  %-28s worst residual %.3e  tol %.3e  %s\n",
                      r.item.c_str(), r.worst, r.tolerance, r.pass ? "ok" : "FAIL");
        os << buf;
    }
    return os.str();
}

GateReport oracle_gate(int trials, uint64_t seed, double rel_tol) {
    GateReport rep;
    rep.name = "catalog-vs-oracle";
    rep.trials = trials;
    Rng rng(seed);
    std::map<std::string, ResidualRow> rows;

    for (int t = 0; t < trials; ++t) {
        const Scenario sc = random_scenario(rng);
        const PerturbationParameters pert = sc.pert();
        for (PerturbationRow row : kAllRows) {
            OraclePhase oracle;
            try {
                oracle = oracle_phase(row, sc.grad.geom, sc.species, sc.dilaton, pert);
            } catch (const QuadratureError&) {
                ++rep.quadrature_failures;
                continue;
            }
            double catalog = 0.0;
            for (int l : row_labels(row))
                catalog +=
                    phase_contribution(l, sc.grad.geom, sc.species, sc.dilaton, pert);
            const bool zero_row = row_labels(row).empty();
            const double tol = zero_row ? 1e-12 : rel_tol;
            // rounding floor of the window cancellation plus the criterion floors
            const double denom =
                zero_row ? std::max(oracle.scale, 1e-300)
                         : std::max({std::abs(catalog), 1e-18 / rel_tol,
                                     5e-13 * oracle.scale / rel_tol});
            const double resid = std::abs(catalog - oracle.value) / denom;
            auto& r = rows[row_name(row)];
            r.item = row_name(row);
            r.tolerance = tol;
            r.worst = std::max(r.worst, resid);
        }
    }
    for (auto& [_, r] : rows) {
        r.pass = r.worst <= r.tolerance;
        rep.pass = rep.pass && r.pass;
        rep.rows.push_back(r);
    }
    rep.pass = rep.pass && rep.quadrature_failures == 0;
    return rep;
}

GateReport timescale_gate(int draws, uint64_t seed, double rel_tol) {
    GateReport rep;
    rep.name = "timescale-closed-vs-quadrature";
    rep.trials = draws;
    Rng rng(seed);
    std::map<std::string, ResidualRow> rows;
    constexpr TimescaleKind kinds[] = {TimescaleKind::Tau1, TimescaleKind::Tau2Sq,
                                       TimescaleKind::Tau3Cu, TimescaleKind::TauSSq,
                                       TimescaleKind::TauEPSq};

    for (int i = 0; i < draws; ++i) {
        const double T = rng.uniform(0.1, 5.0);
        // include the series/cancellation regime
        const double x = rng.log_uniform(1e-8, 1e3);
        const double w = x / T;
        const double t0 = rng.uniform(0.0, 4.0) * T;
        const double fr = rng.uniform(0.0, 2.0 * M_PI);
        const double fS = rng.uniform(0.0, 2.0 * M_PI);
        for (TimescaleKind k : kinds) {
            double closed, quad;
            try {
                closed = timescale(k, t0, T, w, fr, fS);
                quad = timescale_quadrature(k, t0, T, w, fr, fS);
            } catch (const QuadratureError&) {
                ++rep.quadrature_failures;
                continue;
            }
            const int n = (k == TimescaleKind::Tau1)   ? 1
                          : (k == TimescaleKind::Tau3Cu) ? 3
                                                         : 2;
            // scale floor: the n-th moment of the windows
            const double scale = std::max(std::abs(closed), std::pow(T, n));
            const double resid = std::abs(closed - quad) / scale;
            auto& r = rows[timescale_name(k)];
            r.item = timescale_name(k);
            r.tolerance = rel_tol;
            r.worst = std::max(r.worst, resid);
        }
    }
    for (auto& [_, r] : rows) {
        r.pass = r.worst <= r.tolerance;
        rep.pass = rep.pass && r.pass;
        rep.rows.push_back(r);
    }
    rep.pass = rep.pass && rep.quadrature_failures == 0;
    return rep;
}

GateReport signal_gate(int trials, uint64_t seed, double rel_tol) {
    GateReport rep;
    rep.name = "catalog-vs-numeric-signal";
    rep.trials = trials;
    Rng rng(seed);
    std::map<std::string, ResidualRow> rows;

    for (int t = 0; t < trials; ++t) {
        const Scenario sc = random_scenario(rng);
        const PerturbationParameters pert = sc.pert();
        const SignalBreakdown num = signal_amplitude_numeric(
            sc.grad, sc.species, sc.dilaton, pert, PhiSMode::Coherent, 256, 64);
        for (const auto& [key, nval] : num.correlations) {
            if (!correlation_cataloged(key.first, key.second)) continue;
            const double aval = correlation_analytic(key.first, key.second, sc.grad,
                                                     sc.species, sc.dilaton, pert);
            // the numeric product loses ~eps relative to the diagonal scale
            const double floor_ii = std::sqrt(
                num.correlations.at({key.first, key.first}) *
                num.correlations.at({key.second, key.second}));
            const double denom = std::max({std::abs(aval), std::abs(nval),
                                           1e-4 * floor_ii, 1e-300});
            const double resid = std::abs(aval - nval) / denom;
            const std::string item =
                "(" + label_name(key.first) + "," + label_name(key.second) + ")";
            auto& r = rows[item];
            r.item = item;
            r.tolerance = rel_tol;
            r.worst = std::max(r.worst, resid);
        }
    }
    for (auto& [_, r] : rows) {
        r.pass = r.worst <= r.tolerance;
        rep.pass = rep.pass && r.pass;
        rep.rows.push_back(r);
    }
    return rep;
}

}  // namespace dmgrad
