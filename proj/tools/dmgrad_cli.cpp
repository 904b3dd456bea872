#include <algorithm>
#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <iostream>
#include <sstream>
#include <vector>

#include <CLI11.hpp>

#include "dmgrad/config.hpp"
#include "dmgrad/csv.hpp"
#include "dmgrad/phase_catalog.hpp"
#include "dmgrad/quadrature.hpp"
#include "dmgrad/scan.hpp"
#include "dmgrad/signal.hpp"
#include "dmgrad/verify.hpp"

namespace {

using namespace dmgrad;

struct GlobalOpts {
    std::string config_path;
    std::string out_path;
    uint64_t seed = 12345;
    int threads = 0;  // 0 = unset
    double tolerance = 0.0;  // 0 = unset
};

int resolve_threads(const GlobalOpts& g, const Scenario* sc) {
    if (g.threads > 0) return g.threads;
    if (const char* env = std::getenv("DMGRAD_THREADS")) {
        const int v = std::atoi(env);
        if (v > 0) return v;
    }
    if (sc) return sc->numerics.threads;
    return 1;
}

void emit(const GlobalOpts& g, const std::string& text) {
    if (g.out_path.empty()) {
        std::cout << text;
    } else {
        std::ofstream out(g.out_path, std::ios::binary);
        if (!out) throw std::runtime_error("cannot open output file " + g.out_path);
        out << text;
    }
}

int cmd_phases(const GlobalOpts& g) {
    const Scenario sc = load_config(g.config_path);
    if (sc.phi_rho_averaged)
        throw ConfigError(g.config_path +
                          ": dilaton.phi_rho = averaged, but the phases command needs a "
                          "fixed phase (signal-amplitude mode and fixed-phase mode do "
                          "not mix)");
    const PerturbationParameters pert = sc.pert();
    const PhaseBreakdown lo =
        phase_breakdown(sc.grad.geom, sc.species, sc.dilaton, pert);
    const PhaseBreakdown hi =
        phase_breakdown(sc.grad.upper(), sc.species, sc.dilaton, pert);

    CsvWriter csv({"label", "phi_lower_rad", "phi_upper_rad", "delta_phi_rad"});
    csv.add_row({"standard", CsvWriter::num(lo.standard), CsvWriter::num(hi.standard),
                 CsvWriter::num(0.0)});
    for (int l = 0; l < kNumLabels; ++l)
        csv.add_row({label_name(l), CsvWriter::num(lo.contributions[l]),
                     CsvWriter::num(hi.contributions[l]),
                     CsvWriter::num(hi.contributions[l] - lo.contributions[l])});

    std::ostringstream rep;
    rep << "per-label MZI phases, " << diffraction_name(sc.grad.geom.diffraction)
        << " diffraction\n";
    char buf[160];
    std::snprintf(buf, sizeof buf, "  %-8s %22s %22s %22s\n", "label", "lower [rad]",
                  "upper [rad]", "differential [rad]");
    rep << buf;
    std::snprintf(buf, sizeof buf, "  %-8s %22.13e %22.13e %22.13e\n", "standard",
                  lo.standard, hi.standard, 0.0);
    rep << buf;
    for (int l = 0; l < kNumLabels; ++l) {
        std::snprintf(buf, sizeof buf, "  %-8s %22.13e %22.13e %22.13e\n",
                      label_name(l).c_str(), lo.contributions[l], hi.contributions[l],
                      hi.contributions[l] - lo.contributions[l]);
        rep << buf;
    }
    std::snprintf(buf, sizeof buf, "  total lower %.13e rad, total upper %.13e rad\n",
                  lo.total, hi.total);
    rep << buf;

    if (g.out_path.empty()) {
        std::cout << rep.str();
    } else {
        csv.write_file(g.out_path);
        std::cout << rep.str() << "CSV written to " << g.out_path << "\n";
    }
    return 0;
}

int cmd_signal(const GlobalOpts& g, const std::string& phis_mode) {
    const Scenario sc = load_config(g.config_path);
    if (!sc.phi_rho_averaged)
        throw ConfigError(g.config_path +
                          ": dilaton.phi_rho is a fixed value, but the signal command "
                          "averages over it; set phi_rho = averaged");
    const PerturbationParameters pert = sc.pert();
    const PhiSMode mode =
        (phis_mode == "independent") ? PhiSMode::IndependentPhiS : PhiSMode::Coherent;
    const SignalBreakdown num =
        signal_amplitude_numeric(sc.grad, sc.species, sc.dilaton, pert, mode,
                                 sc.numerics.phi_rho_nodes, sc.numerics.phi_s_nodes);
    const SignalBreakdown cat =
        signal_amplitude_catalog(sc.grad, sc.species, sc.dilaton, pert);

    CsvWriter csv({"i", "j", "correlation_numeric_rad2", "correlation_analytic_rad2",
                   "cataloged"});
    std::vector<std::pair<double, std::pair<int, int>>> ranking;
    for (const auto& [key, v] : num.correlations) {
        const bool in_cat = correlation_cataloged(key.first, key.second);
        const double weight = (key.first == key.second) ? 2.0 : 4.0;
        ranking.push_back({std::abs(weight * v), key});
        csv.add_row({label_name(key.first), label_name(key.second), CsvWriter::num(v),
                     in_cat && mode == PhiSMode::Coherent
                         ? CsvWriter::num(cat.correlations.at(key))
                         : "",
                     in_cat ? "yes" : "no"});
    }
    std::sort(ranking.begin(), ranking.end(), [](const auto& a, const auto& b) {
        return a.first > b.first || (a.first == b.first && a.second < b.second);
    });

    std::ostringstream rep;
    char buf[200];
    rep << "signal amplitude Phi_S^2 ("
        << (mode == PhiSMode::Coherent ? "coherent phi_S" : "phi_S averaged") << ")\n";
    std::snprintf(buf, sizeof buf, "  numeric average  : %.15e rad^2 (%d phi_rho nodes)\n",
                  num.total, sc.numerics.phi_rho_nodes);
    rep << buf;
    if (mode == PhiSMode::Coherent) {
        std::snprintf(buf, sizeof buf,
                      "  analytic catalog : %.15e rad^2 (%zu cataloged pairs)\n",
                      cat.total, cat.correlations.size());
        rep << buf;
    }
    rep << "  dominance ranking (top 8 by |2 sum_{i,j}| weight):\n";
    for (size_t i = 0; i < std::min<size_t>(8, ranking.size()); ++i) {
        if (ranking[i].first == 0.0) break;
        std::snprintf(buf, sizeof buf, "    %zu. (%s,%s)  %.6e rad^2\n", i + 1,
                      label_name(ranking[i].second.first).c_str(),
                      label_name(ranking[i].second.second).c_str(), ranking[i].first);
        rep << buf;
    }
    rep << "  pairs outside the analytic catalog contribute through the numeric path "
           "only\n";

    if (g.out_path.empty()) {
        std::cout << rep.str();
    } else {
        csv.write_file(g.out_path);
        std::cout << rep.str() << "CSV written to " << g.out_path << "\n";
    }
    return 0;
}

int cmd_scan(const GlobalOpts& g, const std::vector<std::string>& axis_specs) {
    const Scenario sc = load_config(g.config_path);
    if (!sc.phi_rho_averaged)
        throw ConfigError(g.config_path +
                          ": scans sweep the signal amplitude; set phi_rho = averaged");
    std::vector<ScanAxis> axes;
    for (const auto& spec : axis_specs) axes.push_back(parse_scan_axis(spec));
    const std::string csv = run_scan(sc, axes, resolve_threads(g, &sc));
    emit(g, csv);
    return 0;
}

int cmd_verify(const GlobalOpts& g, int trials) {
    Numerics num;
    if (!g.config_path.empty()) num = load_config(g.config_path).numerics;
    const double oracle_tol = g.tolerance > 0.0 ? g.tolerance : num.oracle_rel_tol;

    const GateReport a = oracle_gate(trials, g.seed, oracle_tol);
    const GateReport b = signal_gate(trials, g.seed + 1, num.signal_rel_tol);
    const GateReport c = timescale_gate(1000, g.seed + 2, num.timescale_rel_tol);

    std::ostringstream rep;
    rep << a.to_string() << b.to_string() << c.to_string();
    const bool pass = a.pass && b.pass && c.pass;
    rep << (pass ? "verification PASS" : "verification FAIL") << " (seed " << g.seed
        << ", " << trials << " trials)\n";
    emit(g, rep.str());
    if (a.quadrature_failures + b.quadrature_failures + c.quadrature_failures > 0)
        return 3;
    return pass ? 0 : 2;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"dark-matter dilaton phases and signal amplitudes for "
                 "Mach-Zehnder atom gradiometers"};
    app.require_subcommand(1);
    app.fallthrough();  // global flags may follow the subcommand
    GlobalOpts g;
    app.add_option("--config", g.config_path, "scenario config file");
    app.add_option("--out", g.out_path, "output file (CSV or report)");
    app.add_option("--seed", g.seed, "random seed for verify");
    app.add_option("--threads", g.threads,
                   "worker threads (else DMGRAD_THREADS, else config)");
    app.add_option("--tolerance", g.tolerance, "catalog-vs-oracle gate tolerance");

    auto* phases = app.add_subcommand("phases", "per-label phases and differentials");
    auto* signal = app.add_subcommand("signal", "signal amplitude breakdown");
    std::string phis_mode = "coherent";
    signal->add_option("--phi-s", phis_mode, "coherent | independent")
        ->check(CLI::IsMember({"coherent", "independent"}));
    auto* scan = app.add_subcommand("scan", "parameter scans to CSV");
    std::vector<std::string> axis_specs;
    scan->add_option("--axis", axis_specs, "axis spec path:lo:hi:points:spacing")
        ->required()
        ->expected(1, 2);
    auto* verify = app.add_subcommand("verify", "run the oracle residual gates");
    int trials = 100;
    verify->add_option("--trials", trials, "scenarios per gate")
        ->check(CLI::PositiveNumber);

    CLI11_PARSE(app, argc, argv);

    try {
        if (phases->parsed()) {
            if (g.config_path.empty()) throw ConfigError("phases: --config is required");
            return cmd_phases(g);
        }
        if (signal->parsed()) {
            if (g.config_path.empty()) throw ConfigError("signal: --config is required");
            return cmd_signal(g, phis_mode);
        }
        if (scan->parsed()) {
            if (g.config_path.empty()) throw ConfigError("scan: --config is required");
            return cmd_scan(g, axis_specs);
        }
        if (verify->parsed()) return cmd_verify(g, trials);
    } catch (const QuadratureError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 3;
    } catch (const ConfigError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    }
    return 0;
}
