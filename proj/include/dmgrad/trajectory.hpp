#pragma once

#include <array>
#include <string>
#include <vector>

#include "dmgrad/dilaton.hpp"
#include "dmgrad/geometry.hpp"
#include "dmgrad/phase_catalog.hpp"

namespace dmgrad {

// Piecewise classical motion of one interferometer arm. Momentum decays
// linearly at -m_bar g0 within a segment; kicks of +-hbar k happen at the
// segment boundaries. lambda = +1 on excited-state stretches, -1 on ground.
struct ArmSegment {
    double t_start = 0.0;
    double t_end = 0.0;
    double p_start = 0.0;  // momentum at t_start, kg m/s
    double z_start = 0.0;  // position at t_start, m
    double lambda = -1.0;
};

struct ArmTrajectory {
    std::vector<ArmSegment> segments;  // abutting, covering [t0, t0+2T]

    // State at time t (t inside the covered range).
    void state(double mbar, double g0, double t, double* z, double* p,
               double* lambda) const;
    double final_position(double mbar, double g0) const;
};

struct ArmPair {
    ArmTrajectory upper;  // arm kicked at t0
    ArmTrajectory lower;
};

// Unperturbed MZI arms: kick +hbar k at t0 on the upper arm, the mirror at
// t0+T swaps the momenta, closure at t0+2T. Single-photon/Raman arms swap the
// internal state at each pulse; Bragg arms stay in the ground state.
ArmPair classical_trajectories(const MziGeometry& geom, const AtomSpecies& species,
                               const PhysicalConstants& pc = codata());

// The twelve perturbation rows, one per additive potential term: rest-mass,
// kinetic and potential parts split by physical origin.
enum class PerturbationRow {
    RestMassMean,        // mu_bar_DM m c^2            -> 0
    RestMassDefect,      // dmu0 m c^2 lambda/2        -> 0
    RestMassTransition,  // Dmu_DM m c^2 lambda/2      -> phi_m
    KineticMean,         // -mu_bar_DM p^2/2m          -> phi_1 + phi_2
    KineticDefect,       // -dmu0 p^2/2m lambda/2      -> phi_3
    KineticTransition,   // -Dmu_DM p^2/2m lambda/2    -> phi_4 + phi_5 + phi_6
    PotentialEP,         // gamma_bar_EP m g0 z        -> phi_7
    PotentialDeltaEP,    // Dgamma_EP m g0 z lambda/2  -> phi_8
    PotentialGravityOsc, // gamma_DM m g0 z            -> phi_9
    PotentialMean,       // mu_bar_DM m g0 z           -> phi_10
    PotentialDefect,     // dmu0 m g0 z lambda/2       -> phi_11
    PotentialTransition, // Dmu_DM m g0 z lambda/2     -> phi_12 + phi_13 + phi_14
};

inline constexpr std::array<PerturbationRow, 12> kAllRows = {
    PerturbationRow::RestMassMean,        PerturbationRow::RestMassDefect,
    PerturbationRow::RestMassTransition,  PerturbationRow::KineticMean,
    PerturbationRow::KineticDefect,       PerturbationRow::KineticTransition,
    PerturbationRow::PotentialEP,         PerturbationRow::PotentialDeltaEP,
    PerturbationRow::PotentialGravityOsc, PerturbationRow::PotentialMean,
    PerturbationRow::PotentialDefect,     PerturbationRow::PotentialTransition,
};

const char* row_name(PerturbationRow row);

// Catalog labels summed by the row (empty for the two vanishing rows).
std::vector<int> row_labels(PerturbationRow row);

struct OraclePhase {
    double value = 0.0;  // rad
    double scale = 0.0;  // (1/hbar) sum of |integral of V| per arm/window; the
                         // floating-point floor of the cancellation
};

// -(1/hbar) [ int V(upper) - int V(lower) ] over [t0, t0+2T] along the
// unperturbed classical arms, one perturbation row at a time, by the same
// quadrature engine as the timescale oracle.
OraclePhase oracle_phase(PerturbationRow row, const MziGeometry& geom,
                         const AtomSpecies& species, const DilatonParams& dilaton,
                         const PerturbationParameters& pert,
                         const PhysicalConstants& pc = codata(),
                         double rel_tol = 1e-12);

}  // namespace dmgrad
