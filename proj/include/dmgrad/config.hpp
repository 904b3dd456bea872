#pragma once

#include <optional>
#include <stdexcept>
#include <string>

#include "dmgrad/dilaton.hpp"
#include "dmgrad/geometry.hpp"
#include "dmgrad/species.hpp"

namespace dmgrad {

struct ConfigError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct Numerics {
    int phi_rho_nodes = 256;
    int phi_s_nodes = 64;
    double oracle_rel_tol = 1e-6;     // catalog vs trajectory oracle
    double signal_rel_tol = 1e-9;     // analytic vs numeric correlations
    double timescale_rel_tol = 1e-10; // closed form vs quadrature
    bool include_brace_terms = false;
    int threads = 1;
};

// One fully specified scenario: species, dilaton background, lower-MZI
// geometry, gradiometer baseline, numerical policy. phi_rho is either fixed
// (deterministic phases) or averaged (signal-amplitude mode); never both.
// When the config gives rho_DM instead of rho_0, the density is kept so that
// omega_rho scans re-derive the amplitude at every grid point.
struct Scenario {
    AtomSpecies species;
    DilatonParams dilaton;
    GradiometerConfig grad;
    std::optional<double> rho_dm;  // J/m^3
    bool phi_rho_averaged = false;
    Numerics numerics;

    PerturbationParameters pert() const {
        return perturbation_parameters(species, dilaton, numerics.include_brace_terms);
    }
};

// Flat sectioned key = value format with mandatory unit suffixes on
// dimensioned keys, e.g.
//   [geometry]
//   T = 1.0 s
//   k = 1.1e7 rad/m
// Errors carry the section.key path and line number.
Scenario parse_config(const std::string& text);
Scenario load_config(const std::string& path);

// Serialization used by the round-trip test (17 significant digits).
std::string dump_config(const Scenario& sc);

}  // namespace dmgrad
