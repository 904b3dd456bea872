#pragma once

#include <stdexcept>
#include <string>

#include "dmgrad/constants.hpp"

namespace dmgrad {

// Two-level atom: mean rest mass, mass defect between the internal states,
// and the per-state dilaton couplings.
struct AtomSpecies {
    double mean_mass = 0.0;    // m_bar0, kg
    double mass_defect = 0.0;  // Delta m0 = m_e0 - m_g0, kg
    double eps_g = 0.0;        // ground-state dilaton coupling, dimensionless
    double eps_e = 0.0;        // excited-state dilaton coupling, dimensionless

    double eps_bar() const { return 0.5 * (eps_e + eps_g); }
    double delta_eps() const { return eps_e - eps_g; }
    double delta_mu0() const { return mass_defect / mean_mass; }

    // Compton frequency omega_c = m_bar0 c^2 / hbar, rad/s
    double compton_frequency(const PhysicalConstants& pc = codata()) const {
        return mean_mass * pc.c * pc.c / pc.hbar;
    }
    // Transition frequency Omega = Delta m0 c^2 / hbar, rad/s
    double transition_frequency(const PhysicalConstants& pc = codata()) const {
        return mass_defect * pc.c * pc.c / pc.hbar;
    }
};

inline void validate(const AtomSpecies& s) {
    if (!(s.mean_mass > 0.0))
        throw std::invalid_argument("species: mean_mass must be > 0");
    if (!(std::abs(s.mass_defect) < s.mean_mass))
        throw std::invalid_argument("species: |mass_defect| must be < mean_mass");
}

// Sr-88 with the 1S0 - 3P0 clock transition at 698 nm.
inline AtomSpecies strontium88(double eps_g = 0.0, double eps_e = 0.0,
                               const PhysicalConstants& pc = codata()) {
    const double mass = 87.90561254 * units::atomic_mass_unit;
    const double nu = 429228004229872.99;  // Hz
    const double dm = 2.0 * M_PI * nu * pc.hbar / (pc.c * pc.c);
    return AtomSpecies{mass, dm, eps_g, eps_e};
}

// Rb-87 with the ground-state hyperfine transition.
inline AtomSpecies rubidium87(double eps_g = 0.0, double eps_e = 0.0,
                              const PhysicalConstants& pc = codata()) {
    const double mass = 86.909180531 * units::atomic_mass_unit;
    const double nu = 6834682610.904312;  // Hz
    const double dm = 2.0 * M_PI * nu * pc.hbar / (pc.c * pc.c);
    return AtomSpecies{mass, dm, eps_g, eps_e};
}

AtomSpecies species_preset(const std::string& name, double eps_g, double eps_e);

}  // namespace dmgrad
