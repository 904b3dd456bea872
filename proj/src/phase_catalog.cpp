#include "dmgrad/phase_catalog.hpp"

#include <cmath>
#include <stdexcept>

#include "dmgrad/timescales.hpp"

namespace dmgrad {

std::string label_name(int label) {
    if (label == kLabelM) return "m";
    if (label >= 1 && label < kNumLabels) return std::to_string(label);
    throw std::domain_error("label_name: label out of range");
}

int label_from_name(const std::string& name) {
    if (name == "m") return kLabelM;
    const int v = std::stoi(name);
    if (v >= 1 && v < kNumLabels) return v;
    throw std::domain_error("label_from_name: '" + name + "'");
}

double standard_phase(const MziGeometry& geom) {
    return -geom.k * geom.g0 * geom.T * geom.T;
}

double phase_contribution(int label, const MziGeometry& geom, const AtomSpecies& species,
                          const DilatonParams& dilaton, const PerturbationParameters& pert,
                          const PhysicalConstants& pc) {
    const AtomSpecies s = effective_species(species, geom.diffraction);
    // Bragg zeroes the clock amplitude and the mass-defect terms through the
    // effective species; the policy amplitudes must follow suit.
    PerturbationParameters p = pert;
    if (geom.diffraction == Diffraction::Bragg)
        p = perturbation_parameters(s, dilaton, pert.include_brace_terms);

    const double wc = s.compton_frequency(pc);
    const double dmu0 = s.delta_mu0();
    const double wk = geom.recoil_frequency(s, pc);
    const double wp0 = geom.wp0(pc);
    const double wpb = geom.wpbar_mirror(s, pc);
    const double k = geom.k, g0 = geom.g0, T = geom.T, z0 = geom.z0, t0 = geom.t0;
    const double w = dilaton.omega_rho, fr = dilaton.phi_rho, fS = dilaton.phi_S;

    auto tau = [&](TimescaleKind kind) { return timescale(kind, t0, T, w, fr, fS); };

    switch (label) {
        case kLabelM:
            // -(rho0 (deltaeps omega_c + epsbar Omega)) tau1 written through the
            // full rest-mass modulation amplitude.
            return -wc * p.delta_mu_clock_amp * tau(TimescaleKind::Tau1);
        case 1:
            return p.mu_bar_amp * wk * tau(TimescaleKind::Tau1) * (1.0 + 2.0 * wp0);
        case 2:
            return -p.mu_bar_amp * k * g0 * tau(TimescaleKind::Tau2Sq);
        case 3:
            return dmu0 * k * g0 * T * T * wpb;
        case 4:
            return p.delta_mu_amp * wk * tau(TimescaleKind::Tau1) *
                   (wp0 * wp0 + wp0 + 0.5);
        case 5:
        case 13:
            return -p.delta_mu_amp * k * g0 * tau(TimescaleKind::Tau2Sq) * (wp0 + 0.5);
        case 6:
        case 14:
            return p.delta_mu_amp * (g0 * g0 / (2.0 * pc.c * pc.c)) * wc *
                   tau(TimescaleKind::Tau3Cu);
        case 7:
            return -p.gamma_bar_EP * k * g0 * T * T;
        case 8:
            return p.delta_gamma_EP * k * g0 * T * T * wpb;
        case 9:
            return -p.gamma_DM_amp * k * g0 * tau(TimescaleKind::TauSSq);
        case 10:
            return -p.mu_bar_amp * k * g0 * tau(TimescaleKind::TauEPSq);
        case 11:
            return dmu0 * k * g0 * T * T * wpb;
        case 12:
            return -p.delta_mu_amp * (g0 * z0 / (pc.c * pc.c)) * wc *
                   tau(TimescaleKind::Tau1);
        default:
            throw std::domain_error("phase_contribution: unknown label " +
                                    std::to_string(label));
    }
}

PhaseBreakdown phase_breakdown(const MziGeometry& geom, const AtomSpecies& species,
                               const DilatonParams& dilaton,
                               const PerturbationParameters& pert,
                               const PhysicalConstants& pc) {
    PhaseBreakdown b;
    b.standard = standard_phase(geom);
    double sum = b.standard;
    for (int l = 0; l < kNumLabels; ++l) {
        b.contributions[l] = phase_contribution(l, geom, species, dilaton, pert, pc);
        sum += b.contributions[l];
    }
    b.total = sum;
    return b;
}

}  // namespace dmgrad
