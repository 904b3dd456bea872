#pragma once

#include "dmgrad/constants.hpp"
#include "dmgrad/species.hpp"

namespace dmgrad {

// Oscillating dilaton background plus source-mass coupling. The field's wave
// vector is fixed to zero (non-relativistic dark-matter limit); no member
// exists for it.
struct DilatonParams {
    double omega_rho = 0.0;  // oscillation frequency, rad/s
    double phi_rho = 0.0;    // field phase, rad
    double rho_0 = 0.0;      // dimensionless amplitude
    double eps_S = 0.0;      // source-mass coupling, dimensionless
    double phi_S = 0.0;      // source-oscillation phase offset, rad
};

// rho_0 = (m_P c^2 / (hbar omega_rho)) sqrt(8 pi rho_DM L_P^3 / (m_P c^2)),
// with rho_DM in J/m^3. Throws on omega_rho <= 0 or rho_DM < 0.
double dilaton_amplitude(double omega_rho, double rho_dm_si,
                         const PhysicalConstants& pc = codata());

// rho(z, t) = eps_S g0 z / c^2 + rho_0 cos(omega_rho t + phi_rho)
double dilaton_field(double z, double t, const DilatonParams& dp, double g0,
                     const PhysicalConstants& pc = codata());

// Dimensionless modulation amplitudes entering the perturbation rows.
// mu_bar_amp / delta_mu_amp follow the brace policy (dropped by default);
// delta_mu_clock_amp always keeps the mass-defect cross term because it sets
// the transition-frequency modulation delta Omega = omega_c * delta_mu_clock_amp.
struct PerturbationParameters {
    double mu_bar_amp = 0.0;         // amplitude of mu_bar_DM(t)
    double delta_mu_amp = 0.0;       // amplitude of Delta mu_DM(t), kinetic/potential rows
    double delta_mu_clock_amp = 0.0; // amplitude of Delta mu_DM(t), rest-mass row
    double gamma_bar_EP = 0.0;       // eps_S * eps_bar
    double delta_gamma_EP = 0.0;     // eps_S * delta_eps
    double gamma_DM_amp = 0.0;       // eps_S * rho_0
    bool include_brace_terms = false;
};

PerturbationParameters perturbation_parameters(const AtomSpecies& s,
                                               const DilatonParams& dp,
                                               bool include_brace_terms = false);

// delta Omega = (omega_c delta_eps + Omega eps_bar) rho_0, rad/s
double transition_modulation_amplitude(const AtomSpecies& s, double rho_0,
                                       const PhysicalConstants& pc = codata());

// (omega_c eps_bar + Omega delta_eps / 4) rho_0, rad/s
double compton_modulation_amplitude(const AtomSpecies& s, double rho_0,
                                    const PhysicalConstants& pc = codata());

}  // namespace dmgrad
