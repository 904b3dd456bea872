#include "dmgrad/trajectory.hpp"

#include <cmath>
#include <stdexcept>

#include "dmgrad/quadrature.hpp"

namespace dmgrad {

void ArmTrajectory::state(double mbar, double g0, double t, double* z, double* p,
                          double* lambda) const {
    const ArmSegment* seg = &segments.back();
    for (const auto& s : segments) {
        if (t <= s.t_end) { seg = &s; break; }
    }
    const double dt = t - seg->t_start;
    *p = seg->p_start - mbar * g0 * dt;
    *z = seg->z_start + (seg->p_start * dt - 0.5 * mbar * g0 * dt * dt) / mbar;
    *lambda = seg->lambda;
}

double ArmTrajectory::final_position(double mbar, double g0) const {
    const ArmSegment& s = segments.back();
    const double dt = s.t_end - s.t_start;
    return s.z_start + (s.p_start * dt - 0.5 * mbar * g0 * dt * dt) / mbar;
}

ArmPair classical_trajectories(const MziGeometry& geom, const AtomSpecies& species,
                               const PhysicalConstants& pc) {
    validate(geom);
    const double hk = pc.hbar * geom.k;
    const double m = species.mean_mass;
    const bool bragg = geom.diffraction == Diffraction::Bragg;

    auto make_arm = [&](bool kicked) {
        ArmTrajectory arm;
        ArmSegment s1;
        s1.t_start = geom.t0;
        s1.t_end = geom.t0 + geom.T;
        s1.p_start = geom.p0 + (kicked ? hk : 0.0);
        s1.z_start = geom.z0;
        s1.lambda = bragg ? -1.0 : (kicked ? 1.0 : -1.0);
        ArmSegment s2;
        s2.t_start = s1.t_end;
        s2.t_end = geom.t0 + 2.0 * geom.T;
        // mirror pulse swaps the momenta of the two arms
        s2.p_start = geom.p0 + (kicked ? 0.0 : hk) - m * geom.g0 * geom.T;
        const double dt = geom.T;
        s2.z_start = s1.z_start + (s1.p_start * dt - 0.5 * m * geom.g0 * dt * dt) / m;
        s2.lambda = bragg ? -1.0 : (kicked ? -1.0 : 1.0);
        arm.segments = {s1, s2};
        return arm;
    };
    return {make_arm(true), make_arm(false)};
}

const char* row_name(PerturbationRow row) {
    switch (row) {
        case PerturbationRow::RestMassMean: return "Vm/mean-mass";
        case PerturbationRow::RestMassDefect: return "Vm/mass-defect";
        case PerturbationRow::RestMassTransition: return "Vm/transition (m)";
        case PerturbationRow::KineticMean: return "Vkin/mean-mass (1+2)";
        case PerturbationRow::KineticDefect: return "Vkin/mass-defect (3)";
        case PerturbationRow::KineticTransition: return "Vkin/transition (4+5+6)";
        case PerturbationRow::PotentialEP: return "Vpot/EP (7)";
        case PerturbationRow::PotentialDeltaEP: return "Vpot/state-EP (8)";
        case PerturbationRow::PotentialGravityOsc: return "Vpot/gravity-osc (9)";
        case PerturbationRow::PotentialMean: return "Vpot/mean-mass (10)";
        case PerturbationRow::PotentialDefect: return "Vpot/mass-defect (11)";
        case PerturbationRow::PotentialTransition: return "Vpot/transition (12+13+14)";
    }
    return "?";
}

std::vector<int> row_labels(PerturbationRow row) {
    switch (row) {
        case PerturbationRow::RestMassMean: return {};
        case PerturbationRow::RestMassDefect: return {};
        case PerturbationRow::RestMassTransition: return {kLabelM};
        case PerturbationRow::KineticMean: return {1, 2};
        case PerturbationRow::KineticDefect: return {3};
        case PerturbationRow::KineticTransition: return {4, 5, 6};
        case PerturbationRow::PotentialEP: return {7};
        case PerturbationRow::PotentialDeltaEP: return {8};
        case PerturbationRow::PotentialGravityOsc: return {9};
        case PerturbationRow::PotentialMean: return {10};
        case PerturbationRow::PotentialDefect: return {11};
        case PerturbationRow::PotentialTransition: return {12, 13, 14};
    }
    return {};
}

namespace {

struct RowContext {
    const AtomSpecies* s;
    const DilatonParams* d;
    const PerturbationParameters* p;
    const PhysicalConstants* pc;
    double g0;
};

double row_potential(PerturbationRow row, const RowContext& c, double z, double pm,
                     double lam, double t) {
    const double mbar = c.s->mean_mass;
    const double c2 = c.pc->c * c.pc->c;
    const double costh = std::cos(c.d->omega_rho * t + c.d->phi_rho);
    switch (row) {
        case PerturbationRow::RestMassMean:
            return c.p->mu_bar_amp * costh * mbar * c2;
        case PerturbationRow::RestMassDefect:
            return c.s->delta_mu0() * mbar * c2 * 0.5 * lam;
        case PerturbationRow::RestMassTransition:
            return c.p->delta_mu_clock_amp * costh * mbar * c2 * 0.5 * lam;
        case PerturbationRow::KineticMean:
            return -c.p->mu_bar_amp * costh * pm * pm / (2.0 * mbar);
        case PerturbationRow::KineticDefect:
            return -c.s->delta_mu0() * pm * pm / (2.0 * mbar) * 0.5 * lam;
        case PerturbationRow::KineticTransition:
            return -c.p->delta_mu_amp * costh * pm * pm / (2.0 * mbar) * 0.5 * lam;
        case PerturbationRow::PotentialEP:
            return c.p->gamma_bar_EP * mbar * c.g0 * z;
        case PerturbationRow::PotentialDeltaEP:
            return c.p->delta_gamma_EP * mbar * c.g0 * z * 0.5 * lam;
        case PerturbationRow::PotentialGravityOsc:
            return c.p->gamma_DM_amp *
                   std::cos(c.d->omega_rho * t + c.d->phi_rho + c.d->phi_S) * mbar *
                   c.g0 * z;
        case PerturbationRow::PotentialMean:
            return c.p->mu_bar_amp * costh * mbar * c.g0 * z;
        case PerturbationRow::PotentialDefect:
            return c.s->delta_mu0() * mbar * c.g0 * z * 0.5 * lam;
        case PerturbationRow::PotentialTransition:
            return c.p->delta_mu_amp * costh * mbar * c.g0 * z * 0.5 * lam;
    }
    throw std::domain_error("row_potential: unknown row");
}

}  // namespace

OraclePhase oracle_phase(PerturbationRow row, const MziGeometry& geom,
                         const AtomSpecies& species, const DilatonParams& dilaton,
                         const PerturbationParameters& pert, const PhysicalConstants& pc,
                         double rel_tol) {
    const AtomSpecies s = effective_species(species, geom.diffraction);
    PerturbationParameters p = pert;
    if (geom.diffraction == Diffraction::Bragg)
        p = perturbation_parameters(s, dilaton, pert.include_brace_terms);
    const ArmPair arms = classical_trajectories(geom, s, pc);
    const RowContext ctx{&s, &dilaton, &p, &pc, geom.g0};

    auto diff = [&](double t) {
        double zu, pu, lu, zl, pl, ll;
        arms.upper.state(s.mean_mass, geom.g0, t, &zu, &pu, &lu);
        arms.lower.state(s.mean_mass, geom.g0, t, &zl, &pl, &ll);
        return row_potential(row, ctx, zu, pu, lu, t) -
               row_potential(row, ctx, zl, pl, ll, t);
    };

    OraclePhase out;
    for (const auto& seg : arms.upper.segments) {
        // segment interiors only; the delta kicks carry no perturbation weight
        const QuadResult q = integrate_oscillatory(diff, seg.t_start, seg.t_end,
                                                   dilaton.omega_rho, rel_tol);
        out.value += q.value;
        out.scale += q.abs_scale;
    }
    out.value /= -pc.hbar;
    out.scale /= pc.hbar;
    return out;
}

}  // namespace dmgrad
