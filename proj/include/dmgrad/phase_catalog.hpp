#pragma once

#include <array>
#include <string>

#include "dmgrad/dilaton.hpp"
#include "dmgrad/geometry.hpp"
#include "dmgrad/species.hpp"

namespace dmgrad {

// Phase labels: index 0 is the clock contribution phi_m, indices 1..14 the
// motional contributions phi_1..phi_14.
inline constexpr int kLabelM = 0;
inline constexpr int kNumLabels = 15;

std::string label_name(int label);
int label_from_name(const std::string& name);

// Standard MZI phase -k g0 T^2.
double standard_phase(const MziGeometry& geom);

// One dilaton-induced contribution for the given label. Bragg geometries
// evaluate with the effective species (no mass defect, no differential
// coupling), which zeroes labels {m,3,4,5,6,8,11,12,13,14} exactly.
double phase_contribution(int label, const MziGeometry& geom, const AtomSpecies& species,
                          const DilatonParams& dilaton, const PerturbationParameters& pert,
                          const PhysicalConstants& pc = codata());

struct PhaseBreakdown {
    double standard = 0.0;                      // -k g0 T^2
    std::array<double, kNumLabels> contributions{};  // [0]=phi_m, [i]=phi_i
    double total = 0.0;                         // standard + sum, label-ascending
};

PhaseBreakdown phase_breakdown(const MziGeometry& geom, const AtomSpecies& species,
                               const DilatonParams& dilaton,
                               const PerturbationParameters& pert,
                               const PhysicalConstants& pc = codata());

}  // namespace dmgrad
