#pragma once

#include <map>
#include <utility>
#include <vector>

#include "dmgrad/dilaton.hpp"
#include "dmgrad/geometry.hpp"
#include "dmgrad/phase_catalog.hpp"

namespace dmgrad {

// Differential phase Delta phi_i = phi_i(z0+L, p1, t0+tau_L) - phi_i(z0, p0, t0)
// for one label, at an explicit dilaton phase. The standard -k g0 T^2 phase is
// common mode and excluded.
double differential_phase(int label, const GradiometerConfig& grad,
                          const AtomSpecies& species, const DilatonParams& dilaton,
                          const PerturbationParameters& pert, double phi_rho,
                          const PhysicalConstants& pc = codata());

enum class SignalMethod { AnalyticCatalog, NumericAverage };
enum class PhiSMode { Coherent, IndependentPhiS };

// Correlations <Delta phi^2_{i,j}> keyed by unordered label pair (i <= j);
// each entry stores the bare phi_rho average of Delta phi_i * Delta phi_j,
// matching the normalization of the analytic catalog. The total doubles the
// diagonal and quadruples the off-diagonal entries:
// Phi_S^2 = 2 sum_{ordered i,j} = 2 (sum_diag + 2 sum_{i<j}).
struct SignalBreakdown {
    std::map<std::pair<int, int>, double> correlations;
    double total = 0.0;  // Phi_S^2, rad^2
    SignalMethod method = SignalMethod::NumericAverage;
};

// phi_rho average over uniform nodes (trapezoid; exact for the trigonometric
// polynomials these phases are). IndependentPhiS additionally averages over a
// uniform phi_S grid.
SignalBreakdown signal_amplitude_numeric(const GradiometerConfig& grad,
                                         const AtomSpecies& species,
                                         const DilatonParams& dilaton,
                                         const PerturbationParameters& pert,
                                         PhiSMode mode = PhiSMode::Coherent,
                                         int phi_rho_nodes = 256, int phi_s_nodes = 64,
                                         const PhysicalConstants& pc = codata());

// True if (i, j) is in the analytic catalog (order-insensitive).
bool correlation_cataloged(int i, int j);

// Closed-form <Delta phi^2_{i,j}>. Throws std::domain_error for pairs outside
// the catalog; callers fall back to the numeric average.
double correlation_analytic(int i, int j, const GradiometerConfig& grad,
                            const AtomSpecies& species, const DilatonParams& dilaton,
                            const PerturbationParameters& pert,
                            const PhysicalConstants& pc = codata());

// Sum of the cataloged pairs only, with the Phi_S^2 double-sum weights.
SignalBreakdown signal_amplitude_catalog(const GradiometerConfig& grad,
                                         const AtomSpecies& species,
                                         const DilatonParams& dilaton,
                                         const PerturbationParameters& pert,
                                         const PhysicalConstants& pc = codata());

enum class Regime { MeanOnly, DiffOnly, BraggZeroG };

// Closed-form limiting cases of the signal amplitude:
//   MeanOnly   (delta_eps = 0): 64 (Omega^2/w^2) epsbar^2 rho0^2 S(tauL)^2 S(T)^4
//   DiffOnly   (eps_bar = 0) : 64 (omega_c^2/w^2) deltaeps^2 rho0^2 S(tauL)^2 S(T)^4
//   BraggZeroG (g0 = 0)      : 2 <Delta phi^2_{1,1}>
// Throws std::domain_error when the stated precondition does not hold.
double regime_amplitude(Regime regime, const GradiometerConfig& grad,
                        const AtomSpecies& species, const DilatonParams& dilaton,
                        const PerturbationParameters& pert,
                        const PhysicalConstants& pc = codata());

// First-order fractional corrections to Phi_S^2 / (2 <Delta phi^2_{m,m}>) - 1
// in the MeanOnly regime:
//   -(omega_k/Omega)(2 + 4 wp_mean) + 2 k g0 T/Omega
//   - 2 (k g0/(Omega w)) (eps_S/eps_bar) sin(phi_S).
double mean_only_ratio_correction(const GradiometerConfig& grad,
                                  const AtomSpecies& species,
                                  const DilatonParams& dilaton,
                                  const PhysicalConstants& pc = codata());

// <Delta phi^2_{m,m}>|_{deltaeps=0} / <Delta phi^2_{m,m}>
//   = [1 + (deltaeps/epsbar)(omega_c/Omega)]^{-2},
// on a grid of Omega/omega_c (rows) and deltaeps/epsbar (columns).
std::vector<std::vector<double>> coupling_ratio_map(
    const std::vector<double>& omega_over_omegac,
    const std::vector<double>& deltaeps_over_epsbar);

}  // namespace dmgrad
