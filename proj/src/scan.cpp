#include "dmgrad/scan.hpp"

#include <algorithm>
#include <atomic>
#include <cmath>
#include <functional>
#include <sstream>
#include <thread>

#include "dmgrad/csv.hpp"
#include "dmgrad/signal.hpp"

namespace dmgrad {

ScanAxis parse_scan_axis(const std::string& spec) {
    std::vector<std::string> parts;
    std::string cur;
    for (char c : spec) {
        if (c == ':') {
            parts.push_back(cur);
            cur.clear();
        } else {
            cur += c;
        }
    }
    parts.push_back(cur);
    if (parts.size() != 5)
        throw ConfigError("scan axis '" + spec + "': expected path:lo:hi:points:spacing");
    ScanAxis ax;
    ax.path = parts[0];
    try {
        ax.lo = std::stod(parts[1]);
        ax.hi = std::stod(parts[2]);
        ax.points = std::stoi(parts[3]);
    } catch (const std::exception&) {
        throw ConfigError("scan axis '" + spec + "': bad numeric field");
    }
    if (parts[4] == "linear")
        ax.spacing = ScanSpacing::Linear;
    else if (parts[4] == "log")
        ax.spacing = ScanSpacing::Log;
    else
        throw ConfigError("scan axis '" + spec + "': spacing must be linear or log");
    if (ax.points < 1) throw ConfigError("scan axis '" + spec + "': points must be >= 1");
    if (ax.spacing == ScanSpacing::Log && !(ax.lo > 0.0 && ax.hi > 0.0))
        throw ConfigError("scan axis '" + spec + "': log spacing needs positive bounds");
    return ax;
}

const std::vector<std::string>& scan_parameter_paths() {
    static const std::vector<std::string> paths = {
        "dilaton.omega_rho",
        "dilaton.rho_0",
        "dilaton.eps_S",
        "dilaton.phi_S",
        "geometry.T",
        "geometry.k",
        "geometry.g0",
        "geometry.t0",
        "geometry.z0",
        "gradiometer.L",
        "species.omega_over_omega_c",
        "species.delta_eps_over_eps_bar",
    };
    return paths;
}

std::vector<double> axis_values(const ScanAxis& axis) {
    std::vector<double> v(axis.points);
    if (axis.points == 1) {
        v[0] = axis.lo;
        return v;
    }
    for (int i = 0; i < axis.points; ++i) {
        const double f = static_cast<double>(i) / (axis.points - 1);
        v[i] = (axis.spacing == ScanSpacing::Linear)
                   ? axis.lo + f * (axis.hi - axis.lo)
                   : std::exp(std::log(axis.lo) + f * (std::log(axis.hi) - std::log(axis.lo)));
    }
    return v;
}

void apply_scan_value(Scenario& sc, const std::string& path, double value) {
    if (path == "dilaton.omega_rho") {
        sc.dilaton.omega_rho = value;
        // density-specified amplitude scales with the Compton frequency
        if (sc.rho_dm) sc.dilaton.rho_0 = dilaton_amplitude(value, *sc.rho_dm);
        return;
    }
    if (path == "dilaton.rho_0") { sc.dilaton.rho_0 = value; return; }
    if (path == "dilaton.eps_S") { sc.dilaton.eps_S = value; return; }
    if (path == "dilaton.phi_S") { sc.dilaton.phi_S = value; return; }
    if (path == "geometry.T") { sc.grad.geom.T = value; return; }
    if (path == "geometry.k") { sc.grad.geom.k = value; return; }
    if (path == "geometry.g0") { sc.grad.geom.g0 = value; return; }
    if (path == "geometry.t0") { sc.grad.geom.t0 = value; return; }
    if (path == "geometry.z0") { sc.grad.geom.z0 = value; return; }
    if (path == "gradiometer.L") { sc.grad.L = value; return; }
    if (path == "species.omega_over_omega_c") {
        // rescale the mass defect at fixed mean mass
        sc.species.mass_defect = value * sc.species.mean_mass;
        return;
    }
    if (path == "species.delta_eps_over_eps_bar") {
        // rescale the coupling split at fixed mean coupling
        const double eb = sc.species.eps_bar();
        sc.species.eps_g = eb * (1.0 - 0.5 * value);
        sc.species.eps_e = eb * (1.0 + 0.5 * value);
        return;
    }
    std::ostringstream os;
    os << "unknown scan parameter path '" << path << "'; valid paths:";
    for (const auto& p : scan_parameter_paths()) os << " " << p;
    throw ConfigError(os.str());
}

namespace {

struct PointResult {
    double phis2_numeric = 0.0;
    double phis2_catalog = 0.0;
    std::string regime_mean, regime_diff, regime_bragg;
    std::string dominant;
    std::string fig3;
};

std::string dominant_pair(const SignalBreakdown& b) {
    double best = -1.0;
    std::pair<int, int> arg{0, 0};
    for (const auto& [key, v] : b.correlations) {
        const double w = (key.first == key.second) ? 2.0 * std::abs(v) : 4.0 * std::abs(v);
        if (w > best) { best = w; arg = key; }
    }
    return "(" + label_name(arg.first) + "," + label_name(arg.second) + ")";
}

PointResult evaluate_point(const Scenario& sc, bool fig3_axes, double omega_ratio,
                           double eps_ratio) {
    PointResult r;
    const PerturbationParameters pert = sc.pert();
    const SignalBreakdown num = signal_amplitude_numeric(
        sc.grad, sc.species, sc.dilaton, pert, PhiSMode::Coherent,
        sc.numerics.phi_rho_nodes, sc.numerics.phi_s_nodes);
    r.phis2_numeric = num.total;
    r.phis2_catalog = signal_amplitude_catalog(sc.grad, sc.species, sc.dilaton, pert).total;
    r.dominant = dominant_pair(num);
    if (sc.species.delta_eps() == 0.0 && sc.species.transition_frequency() != 0.0)
        r.regime_mean = CsvWriter::num(
            regime_amplitude(Regime::MeanOnly, sc.grad, sc.species, sc.dilaton, pert));
    if (sc.species.eps_bar() == 0.0)
        r.regime_diff = CsvWriter::num(
            regime_amplitude(Regime::DiffOnly, sc.grad, sc.species, sc.dilaton, pert));
    if (sc.grad.geom.diffraction == Diffraction::Bragg && sc.grad.geom.g0 == 0.0)
        r.regime_bragg = CsvWriter::num(
            regime_amplitude(Regime::BraggZeroG, sc.grad, sc.species, sc.dilaton, pert));
    if (fig3_axes) {
        // ratio from the axis values; species doubles cannot carry coupling
        // splits 18 orders below the mean
        r.fig3 = CsvWriter::num(coupling_ratio_map({omega_ratio}, {eps_ratio})[0][0]);
    }
    return r;
}

void parallel_for(int n, int threads, const std::function<void(int)>& fn) {
    threads = std::max(1, std::min(threads, n));
    if (threads == 1) {
        for (int i = 0; i < n; ++i) fn(i);
        return;
    }
    std::vector<std::thread> pool;
    std::atomic<int> next{0};
    for (int t = 0; t < threads; ++t)
        pool.emplace_back([&] {
            for (int i = next.fetch_add(1); i < n; i = next.fetch_add(1)) fn(i);
        });
    for (auto& th : pool) th.join();
}

}  // namespace

std::string run_scan(const Scenario& base, const std::vector<ScanAxis>& axes, int threads) {
    if (axes.empty() || axes.size() > 2)
        throw ConfigError("scan: 1 or 2 axes required");
    for (const auto& ax : axes) {
        Scenario probe = base;  // validate the path up front
        apply_scan_value(probe, ax.path, ax.lo);
    }
    const bool fig3_axes =
        axes.size() == 2 &&
        ((axes[0].path == "species.omega_over_omega_c" &&
          axes[1].path == "species.delta_eps_over_eps_bar") ||
         (axes[1].path == "species.omega_over_omega_c" &&
          axes[0].path == "species.delta_eps_over_eps_bar"));

    std::vector<std::vector<double>> grids;
    for (const auto& ax : axes) grids.push_back(axis_values(ax));
    const int n1 = static_cast<int>(grids[0].size());
    const int n2 = axes.size() == 2 ? static_cast<int>(grids[1].size()) : 1;
    const int n = n1 * n2;

    std::vector<PointResult> results(n);
    parallel_for(n, threads, [&](int idx) {
        Scenario sc = base;
        const int i = idx / n2, j = idx % n2;
        apply_scan_value(sc, axes[0].path, grids[0][i]);
        if (axes.size() == 2) apply_scan_value(sc, axes[1].path, grids[1][j]);
        double omega_ratio = 1.0, eps_ratio = 0.0;
        if (fig3_axes) {
            const bool omega_first = axes[0].path == "species.omega_over_omega_c";
            omega_ratio = omega_first ? grids[0][i] : grids[1][j];
            eps_ratio = omega_first ? grids[1][j] : grids[0][i];
        }
        results[idx] = evaluate_point(sc, fig3_axes, omega_ratio, eps_ratio);
    });

    std::vector<std::string> header;
    for (const auto& ax : axes) header.push_back(ax.path);
    header.insert(header.end(),
                  {"PhiS2_numeric_rad2", "PhiS2_catalog_rad2", "regime_mean_only_rad2",
                   "regime_diff_only_rad2", "regime_bragg_zero_g_rad2", "dominant_pair"});
    if (fig3_axes) header.push_back("ratio_deltaeps0_over_full");
    CsvWriter csv(header);
    for (int idx = 0; idx < n; ++idx) {
        const int i = idx / n2, j = idx % n2;
        const PointResult& r = results[idx];
        std::vector<std::string> row;
        row.push_back(CsvWriter::num(grids[0][i]));
        if (axes.size() == 2) row.push_back(CsvWriter::num(grids[1][j]));
        row.push_back(CsvWriter::num(r.phis2_numeric));
        row.push_back(CsvWriter::num(r.phis2_catalog));
        row.push_back(r.regime_mean);
        row.push_back(r.regime_diff);
        row.push_back(r.regime_bragg);
        row.push_back(r.dominant);
        if (fig3_axes) row.push_back(r.fig3);
        csv.add_row(row);
    }
    return csv.str();
}

}  // namespace dmgrad
