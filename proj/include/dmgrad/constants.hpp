#pragma once

#include <cmath>

// Fundamental constants (CODATA 2018) and unit conversions.
// All library-internal quantities are strict SI; conversions happen at the
// input boundary only.

namespace dmgrad {

struct PhysicalConstants {
    double c = 299792458.0;          // speed of light, m/s (exact)
    double hbar = 1.054571817e-34;   // reduced Planck constant, J s
    double G = 6.67430e-11;          // gravitational constant, m^3/(kg s^2)

    double planck_mass() const { return std::sqrt(hbar * c / G); }    // kg
    double planck_length() const { return std::sqrt(hbar * G / (c * c * c)); }  // m
};

inline const PhysicalConstants& codata() {
    static const PhysicalConstants pc{};
    return pc;
}

namespace units {

inline constexpr double atomic_mass_unit = 1.66053906660e-27;  // kg
inline constexpr double elementary_charge = 1.602176634e-19;   // C (exact)
inline constexpr double electron_volt = elementary_charge;     // J
inline constexpr double gev = 1.0e9 * electron_volt;           // J

// GeV/cm^3 -> J/m^3
inline constexpr double gev_per_cm3 = gev / 1.0e-6;

// eV/c^2 -> kg
inline double ev_per_c2_to_kg(double ev, const PhysicalConstants& pc = codata()) {
    return ev * electron_volt / (pc.c * pc.c);
}

}  // namespace units

}  // namespace dmgrad
