#include "dmgrad/signal.hpp"

#include <cmath>
#include <set>
#include <stdexcept>

namespace dmgrad {

double differential_phase(int label, const GradiometerConfig& grad,
                          const AtomSpecies& species, const DilatonParams& dilaton,
                          const PerturbationParameters& pert, double phi_rho,
                          const PhysicalConstants& pc) {
    DilatonParams d = dilaton;
    d.phi_rho = phi_rho;
    const double lo = phase_contribution(label, grad.geom, species, d, pert, pc);
    const double hi = phase_contribution(label, grad.upper(), species, d, pert, pc);
    return hi - lo;
}

SignalBreakdown signal_amplitude_numeric(const GradiometerConfig& grad,
                                         const AtomSpecies& species,
                                         const DilatonParams& dilaton,
                                         const PerturbationParameters& pert,
                                         PhiSMode mode, int phi_rho_nodes,
                                         int phi_s_nodes, const PhysicalConstants& pc) {
    validate(grad);
    const int ns = (mode == PhiSMode::IndependentPhiS) ? phi_s_nodes : 1;
    SignalBreakdown out;
    out.method = SignalMethod::NumericAverage;
    std::map<std::pair<int, int>, double> acc;
    for (int i = 0; i < kNumLabels; ++i)
        for (int j = i; j < kNumLabels; ++j) acc[{i, j}] = 0.0;

    std::vector<std::array<double, kNumLabels>> dphi(phi_rho_nodes);
    for (int is = 0; is < ns; ++is) {
        DilatonParams d = dilaton;
        if (mode == PhiSMode::IndependentPhiS)
            d.phi_S = 2.0 * M_PI * is / ns;
        for (int iq = 0; iq < phi_rho_nodes; ++iq) {
            const double fr = 2.0 * M_PI * iq / phi_rho_nodes;
            for (int l = 0; l < kNumLabels; ++l)
                dphi[iq][l] = differential_phase(l, grad, species, d, pert, fr, pc);
        }
        for (int i = 0; i < kNumLabels; ++i)
            for (int j = i; j < kNumLabels; ++j) {
                double s = 0.0;
                for (int iq = 0; iq < phi_rho_nodes; ++iq) s += dphi[iq][i] * dphi[iq][j];
                acc[{i, j}] += s / phi_rho_nodes;
            }
    }
    double total = 0.0;
    for (auto& [key, v] : acc) {
        v /= ns;
        out.correlations[key] = v;
        total += (key.first == key.second) ? 2.0 * v : 4.0 * v;
    }
    out.total = total;
    return out;
}

namespace {

const std::set<std::pair<int, int>>& catalog_pairs() {
    static const std::set<std::pair<int, int>> pairs = {
        {kLabelM, kLabelM}, {kLabelM, 1},  {kLabelM, 2},  {kLabelM, 4},
        {kLabelM, 5},       {kLabelM, 6},  {kLabelM, 9},  {kLabelM, 12},
        {kLabelM, 13},      {kLabelM, 14}, {1, 1},        {1, 2},
        {1, 9},             {1, 10},       {2, 2},        {2, 9},
        {2, 10},            {9, 9},        {9, 10},       {10, 10}};
    return pairs;
}

std::pair<int, int> ordered(int i, int j) {
    return (i <= j) ? std::make_pair(i, j) : std::make_pair(j, i);
}

// Per-interferometer amplitudes shared by the closed forms.
struct CorrContext {
    double w, T, tauL;
    double ST, CT, SL, CL;  // half-angle sin/cos at T and tau_L
    double X;               // SL^2 ST^4
    double Gm;              // omega_c * delta_mu_clock_amp
    double Amu, Admu, Ag;   // mean-mass, transition, gravity-osc amplitudes
    double wk, kg0;
    double wpm;             // (p1 + p0)/(2 hbar k)
    double dwp;             // (p1 - p0)/(hbar k)
    double wc, c, g0, z0, L;
};

CorrContext make_context(const GradiometerConfig& grad, const AtomSpecies& species0,
                         const DilatonParams& dilaton, const PerturbationParameters& pert,
                         const PhysicalConstants& pc) {
    const AtomSpecies s = effective_species(species0, grad.geom.diffraction);
    PerturbationParameters p = pert;
    if (grad.geom.diffraction == Diffraction::Bragg)
        p = perturbation_parameters(s, dilaton, pert.include_brace_terms);
    CorrContext c;
    c.w = dilaton.omega_rho;
    c.T = grad.geom.T;
    c.tauL = grad.tau_L(pc);
    c.ST = std::sin(0.5 * c.w * c.T);
    c.CT = std::cos(0.5 * c.w * c.T);
    c.SL = std::sin(0.5 * c.w * c.tauL);
    c.CL = std::cos(0.5 * c.w * c.tauL);
    c.X = c.SL * c.SL * std::pow(c.ST, 4);
    c.Gm = s.compton_frequency(pc) * p.delta_mu_clock_amp;
    c.Amu = p.mu_bar_amp;
    c.Admu = p.delta_mu_amp;
    c.Ag = p.gamma_DM_amp;
    c.wk = grad.geom.recoil_frequency(s, pc);
    c.kg0 = grad.geom.k * grad.geom.g0;
    c.wpm = grad.wp_mean(pc);
    c.dwp = grad.wp_diff(pc);
    c.wc = s.compton_frequency(pc);
    c.c = pc.c;
    c.g0 = grad.geom.g0;
    c.z0 = grad.geom.z0;
    c.L = grad.L;
    return c;
}

double catalog_value(const CorrContext& c, int i, int j) {
    const double w = c.w, T = c.T;
    const double ST = c.ST, CT = c.CT, SL = c.SL, CL = c.CL, X = c.X;
    const double ST2 = ST * ST, ST3 = ST2 * ST, ST4 = ST2 * ST2;
    const auto key = ordered(i, j);
    if (key == ordered(kLabelM, kLabelM))
        return 32.0 * (c.Gm / w) * (c.Gm / w) * X;
    if (key == ordered(kLabelM, 1))
        return -16.0 * (c.Gm / w) * (c.wk / w) * c.Amu * (2.0 + 4.0 * c.wpm) * X;
    if (key == ordered(kLabelM, 2))
        return 32.0 * (c.Gm / w) * (c.kg0 * T / w) * c.Amu * X;
    if (key == ordered(kLabelM, 4))
        return -8.0 * (c.Gm / w) * (c.wk / w) * c.Admu *
               (2.0 + 4.0 * c.wpm * (1.0 + c.wpm) + c.dwp * c.dwp) * X;
    if (key == ordered(kLabelM, 5) || key == ordered(kLabelM, 13))
        return c.Gm * c.Admu * c.kg0 *
               ((16.0 * T / (w * w)) * (1.0 + 2.0 * c.wpm) * ST4 * SL * SL +
                (16.0 / (w * w * w)) * c.dwp * ST4 * SL * CL -
                (16.0 * T / (w * w)) * c.dwp * ST3 * CT * SL * CL);
    if (key == ordered(kLabelM, 6) || key == ordered(kLabelM, 14))
        return 8.0 * (c.Gm / w) * c.Admu * (c.g0 * c.g0 / (c.c * c.c * w * w)) *
               (c.wc / w) * SL * SL * ST2 *
               (w * w * T * T - 4.0 * w * w * T * T * ST2 + 4.0 * ST2 -
                4.0 * w * T * ST * CT);
    if (key == ordered(kLabelM, 12))
        return 16.0 * (c.Gm / w) * (c.g0 * (2.0 * c.z0 + c.L) / (c.c * c.c)) *
               (c.wc / w) * c.Admu * X;
    if (key == ordered(9, 9))
        return 32.0 * (c.kg0 * c.kg0 / std::pow(w, 4)) * c.Ag * c.Ag * X;
    if (key == ordered(1, 1))
        return 16.0 * (c.wk / w) * (c.wk / w) * c.Amu * c.Amu * ST4 *
               (2.0 * (1.0 + 2.0 * c.wpm) * (1.0 + 2.0 * c.wpm) * SL * SL +
                2.0 * c.dwp * c.dwp * CL * CL);
    if (key == ordered(1, 2))
        return c.Amu * c.Amu * c.wk * c.kg0 *
               (-(16.0 * T / (w * w)) * (2.0 + 4.0 * c.wpm) * ST4 * SL * SL +
                (32.0 / (w * w * w)) * c.dwp * CL * SL * ST4 -
                (32.0 * T / (w * w)) * c.dwp * CL * SL * ST3 * CT);
    if (key == ordered(2, 2))
        return 32.0 * (c.kg0 * c.kg0 / std::pow(w, 4)) * c.Amu * c.Amu * SL * SL * ST2 *
               (ST2 + w * w * T * T - 2.0 * w * T * ST * CT);
    if (key == ordered(10, 10))
        return 32.0 * (c.kg0 * c.kg0 / std::pow(w, 4)) * c.Amu * c.Amu * X;
    if (key == ordered(1, 10))
        return 32.0 * (c.kg0 / (w * w)) * (c.wk / w) * c.Amu * c.Amu * c.dwp * SL * CL * ST4;
    if (key == ordered(2, 10))
        return 32.0 * (c.kg0 * c.kg0 / std::pow(w, 4)) * c.Amu * c.Amu * SL * SL * ST3 *
               (ST - w * T * CT);
    throw std::domain_error("correlation_analytic: pair not cataloged");
}

}  // namespace

bool correlation_cataloged(int i, int j) {
    return catalog_pairs().count(ordered(i, j)) > 0;
}

double correlation_analytic(int i, int j, const GradiometerConfig& grad,
                            const AtomSpecies& species, const DilatonParams& dilaton,
                            const PerturbationParameters& pert,
                            const PhysicalConstants& pc) {
    validate(grad);
    if (!correlation_cataloged(i, j))
        throw std::domain_error("correlation_analytic: pair (" + label_name(i) + "," +
                                label_name(j) + ") not cataloged");
    const CorrContext c = make_context(grad, species, dilaton, pert, pc);
    const auto key = ordered(i, j);
    // phi_S-bearing entries are spelled out here; the rest live in catalog_value.
    const double w = c.w, T = c.T;
    const double ST = c.ST, CT = c.CT, SL = c.SL, CL = c.CL;
    const double ST3 = ST * ST * ST, ST4 = ST3 * ST;
    const double sS = std::sin(dilaton.phi_S), cS = std::cos(dilaton.phi_S);
    if (key == ordered(kLabelM, 9))
        return -32.0 * (c.Gm / w) * (c.kg0 / (w * w)) * c.Ag * sS * c.X;
    if (key == ordered(9, 10))
        return 32.0 * (c.kg0 * c.kg0 / std::pow(w, 4)) * c.Ag * c.Amu * cS * c.X;
    if (key == ordered(1, 9))
        return 32.0 * (c.kg0 / (w * w)) * (c.wk / w) * c.Ag * c.Amu * ST4 * SL *
               ((1.0 + 2.0 * c.wpm) * SL * sS + c.dwp * CL * cS);
    if (key == ordered(2, 9))
        return 32.0 * (c.kg0 * c.kg0 / std::pow(w, 4)) * c.Ag * c.Amu * SL * SL * ST3 *
               (ST * cS - w * T * (CT * cS + ST * sS));
    return catalog_value(c, i, j);
}

SignalBreakdown signal_amplitude_catalog(const GradiometerConfig& grad,
                                         const AtomSpecies& species,
                                         const DilatonParams& dilaton,
                                         const PerturbationParameters& pert,
                                         const PhysicalConstants& pc) {
    SignalBreakdown out;
    out.method = SignalMethod::AnalyticCatalog;
    double total = 0.0;
    for (const auto& key : catalog_pairs()) {
        const double v =
            correlation_analytic(key.first, key.second, grad, species, dilaton, pert, pc);
        out.correlations[key] = v;
        total += (key.first == key.second) ? 2.0 * v : 4.0 * v;
    }
    out.total = total;
    return out;
}

double regime_amplitude(Regime regime, const GradiometerConfig& grad,
                        const AtomSpecies& species, const DilatonParams& dilaton,
                        const PerturbationParameters& pert, const PhysicalConstants& pc) {
    validate(grad);
    const double w = dilaton.omega_rho;
    const double SL = std::sin(0.5 * w * grad.tau_L(pc));
    const double ST = std::sin(0.5 * w * grad.geom.T);
    const double X = SL * SL * std::pow(ST, 4);
    switch (regime) {
        case Regime::MeanOnly: {
            if (species.delta_eps() != 0.0)
                throw std::domain_error("regime MeanOnly requires delta_eps = 0");
            const double Om = species.transition_frequency(pc);
            const double eb = species.eps_bar();
            return 64.0 * (Om * Om / (w * w)) * eb * eb * dilaton.rho_0 * dilaton.rho_0 * X;
        }
        case Regime::DiffOnly: {
            if (species.eps_bar() != 0.0)
                throw std::domain_error("regime DiffOnly requires eps_bar = 0");
            const double wc = species.compton_frequency(pc);
            const double de = species.delta_eps();
            return 64.0 * (wc * wc / (w * w)) * de * de * dilaton.rho_0 * dilaton.rho_0 * X;
        }
        case Regime::BraggZeroG: {
            if (grad.geom.g0 != 0.0)
                throw std::domain_error("regime BraggZeroG requires g0 = 0");
            GradiometerConfig g = grad;
            g.geom.diffraction = Diffraction::Bragg;
            return 2.0 * correlation_analytic(1, 1, g, species, dilaton, pert, pc);
        }
    }
    throw std::domain_error("regime_amplitude: unknown regime");
}

double mean_only_ratio_correction(const GradiometerConfig& grad, const AtomSpecies& species,
                                  const DilatonParams& dilaton, const PhysicalConstants& pc) {
    const double Om = species.transition_frequency(pc);
    if (Om == 0.0)
        throw std::domain_error("mean_only_ratio_correction: Omega = 0");
    const double eb = species.eps_bar();
    if (eb == 0.0)
        throw std::domain_error("mean_only_ratio_correction: eps_bar = 0");
    const double wk = grad.geom.recoil_frequency(species, pc);
    const double kg0T = grad.geom.k * grad.geom.g0 * grad.geom.T;
    return -(wk / Om) * (2.0 + 4.0 * grad.wp_mean(pc)) + 2.0 * kg0T / Om -
           2.0 * (grad.geom.k * grad.geom.g0 / (Om * dilaton.omega_rho)) *
               (dilaton.eps_S / eb) * std::sin(dilaton.phi_S);
}

std::vector<std::vector<double>> coupling_ratio_map(
    const std::vector<double>& omega_over_omegac,
    const std::vector<double>& deltaeps_over_epsbar) {
    std::vector<std::vector<double>> out(omega_over_omegac.size());
    for (size_t i = 0; i < omega_over_omegac.size(); ++i) {
        out[i].resize(deltaeps_over_epsbar.size());
        for (size_t j = 0; j < deltaeps_over_epsbar.size(); ++j) {
            const double q = 1.0 + deltaeps_over_epsbar[j] / omega_over_omegac[i];
            out[i][j] = 1.0 / (q * q);
        }
    }
    return out;
}

}  // namespace dmgrad
