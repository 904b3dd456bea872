#include <cmath>
#include <stdexcept>

#include "dmgrad/dilaton.hpp"
#include "dmgrad/species.hpp"

namespace dmgrad {

AtomSpecies species_preset(const std::string& name, double eps_g, double eps_e) {
    if (name == "strontium88" || name == "sr88") return strontium88(eps_g, eps_e);
    if (name == "rubidium87" || name == "rb87") return rubidium87(eps_g, eps_e);
    throw std::invalid_argument("unknown species preset '" + name +
                                "' (known: strontium88, rubidium87)");
}

double dilaton_amplitude(double omega_rho, double rho_dm_si, const PhysicalConstants& pc) {
    if (!(omega_rho > 0.0))
        throw std::domain_error("dilaton_amplitude: omega_rho must be > 0");
    if (rho_dm_si < 0.0)
        throw std::domain_error("dilaton_amplitude: rho_DM must be >= 0");
    const double mp_c2 = pc.planck_mass() * pc.c * pc.c;
    const double lp = pc.planck_length();
    return mp_c2 / (pc.hbar * omega_rho) *
           std::sqrt(8.0 * M_PI * rho_dm_si * lp * lp * lp / mp_c2);
}

double dilaton_field(double z, double t, const DilatonParams& dp, double g0,
                     const PhysicalConstants& pc) {
    return dp.eps_S * g0 * z / (pc.c * pc.c) +
           dp.rho_0 * std::cos(dp.omega_rho * t + dp.phi_rho);
}

PerturbationParameters perturbation_parameters(const AtomSpecies& s, const DilatonParams& dp,
                                               bool include_brace_terms) {
    const double eb = s.eps_bar();
    const double de = s.delta_eps();
    const double dmu = s.delta_mu0();
    PerturbationParameters p;
    p.include_brace_terms = include_brace_terms;
    if (include_brace_terms) {
        p.mu_bar_amp = dp.rho_0 * (eb + dmu * de / 4.0);
        p.delta_mu_amp = dp.rho_0 * (de + dmu * eb);
    } else {
        p.mu_bar_amp = dp.rho_0 * eb;
        p.delta_mu_amp = dp.rho_0 * de;
    }
    p.delta_mu_clock_amp = dp.rho_0 * (de + dmu * eb);
    p.gamma_bar_EP = dp.eps_S * eb;
    p.delta_gamma_EP = dp.eps_S * de;
    p.gamma_DM_amp = dp.eps_S * dp.rho_0;
    return p;
}

double transition_modulation_amplitude(const AtomSpecies& s, double rho_0,
                                       const PhysicalConstants& pc) {
    return (s.compton_frequency(pc) * s.delta_eps() +
            s.transition_frequency(pc) * s.eps_bar()) * rho_0;
}

double compton_modulation_amplitude(const AtomSpecies& s, double rho_0,
                                    const PhysicalConstants& pc) {
    return (s.compton_frequency(pc) * s.eps_bar() +
            s.transition_frequency(pc) * s.delta_eps() / 4.0) * rho_0;
}

}  // namespace dmgrad
