#pragma once

#include <stdexcept>

#include "dmgrad/constants.hpp"
#include "dmgrad/species.hpp"

namespace dmgrad {

enum class Diffraction { SinglePhoton, Raman, Bragg };

const char* diffraction_name(Diffraction d);

// Mach-Zehnder geometry: beam splitter at t0, mirror at t0+T, beam splitter
// at t0+2T, effective wave vector k, launched at (z0, p0) in a linear
// gravitational field g0.
struct MziGeometry {
    double k = 0.0;   // effective wave vector, rad/m
    double T = 0.0;   // interrogation half-time, s
    double t0 = 0.0;  // start time, s
    double z0 = 0.0;  // initial position, m
    double p0 = 0.0;  // initial momentum, kg m/s
    double g0 = 0.0;  // gravitational acceleration, m/s^2
    Diffraction diffraction = Diffraction::SinglePhoton;

    // Dimensionless momenta and the recoil frequency.
    double wp0(const PhysicalConstants& pc = codata()) const {
        return p0 / (pc.hbar * k);
    }
    double wpbar_mirror(const AtomSpecies& s, const PhysicalConstants& pc = codata()) const {
        return (p0 - s.mean_mass * g0 * T + 0.5 * pc.hbar * k) / (pc.hbar * k);
    }
    double recoil_frequency(const AtomSpecies& s, const PhysicalConstants& pc = codata()) const {
        return pc.hbar * k * k / (2.0 * s.mean_mass);
    }
};

inline void validate(const MziGeometry& g) {
    if (g.k == 0.0) throw std::invalid_argument("geometry: k must be nonzero");
    if (!(g.T > 0.0)) throw std::invalid_argument("geometry: T must be > 0");
}

// Bragg diffraction never addresses the internal transition, so the mass
// defect and the differential coupling drop out of the model; both arms stay
// in the ground state. Raman shares the single-photon formulas with adjusted
// frequency scales.
inline AtomSpecies effective_species(const AtomSpecies& s, Diffraction d) {
    if (d != Diffraction::Bragg) return s;
    const double eb = s.eps_bar();
    return AtomSpecies{s.mean_mass, 0.0, eb, eb};
}

// Two vertically separated MZIs driven by the same light. The upper
// interferometer starts at z0 + L with momentum p1, delayed by tau_L = L/c.
struct GradiometerConfig {
    MziGeometry geom;  // lower interferometer
    double L = 0.0;    // baseline, m (> 0)
    double p1 = 0.0;   // upper-interferometer initial momentum, kg m/s

    double tau_L(const PhysicalConstants& pc = codata()) const { return L / pc.c; }
    double wp_mean(const PhysicalConstants& pc = codata()) const {
        return (p1 + geom.p0) / (2.0 * pc.hbar * geom.k);
    }
    double wp_diff(const PhysicalConstants& pc = codata()) const {
        return (p1 - geom.p0) / (pc.hbar * geom.k);
    }
    MziGeometry upper() const {
        MziGeometry u = geom;
        u.z0 += L;
        u.p0 = p1;
        u.t0 += tau_L();
        return u;
    }
};

inline void validate(const GradiometerConfig& g) {
    validate(g.geom);
    if (!(g.L > 0.0)) throw std::invalid_argument("gradiometer: L must be > 0");
}

}  // namespace dmgrad
