#include <doctest.h>

#include <cmath>
#include <sstream>
#include <vector>

#include "dmgrad/scan.hpp"

using namespace dmgrad;

namespace {

Scenario base_scenario() {
    Scenario sc;
    sc.species = strontium88(1e-4, 1.00000000002e-4);  // delta_eps/eps_bar = 2e-7-ish
    sc.dilaton.omega_rho = 2.0;
    sc.dilaton.rho_0 = 1e-15;
    sc.dilaton.eps_S = 1e-4;
    sc.grad.geom.k = 1.1e7;
    sc.grad.geom.T = 1.0;
    sc.grad.geom.g0 = 9.81;
    sc.grad.L = 50.0;
    sc.phi_rho_averaged = true;
    sc.numerics.phi_rho_nodes = 64;
    return sc;
}

std::vector<std::vector<std::string>> parse_csv(const std::string& text) {
    std::vector<std::vector<std::string>> rows;
    std::istringstream in(text);
    std::string line;
    while (std::getline(in, line)) {
        if (!line.empty() && line.back() == '\r') line.pop_back();
        if (line.empty()) continue;
        std::vector<std::string> fields;
        std::string cur;
        for (char c : line) {
            if (c == ',') {
                fields.push_back(cur);
                cur.clear();
            } else
                cur += c;
        }
        fields.push_back(cur);
        rows.push_back(fields);
    }
    return rows;
}

}  // namespace

TEST_CASE("axis spec parsing") {
    const ScanAxis ax = parse_scan_axis("dilaton.omega_rho:1e-4:1e2:200:log");
    CHECK(ax.path == "dilaton.omega_rho");
    CHECK(ax.points == 200);
    CHECK(ax.spacing == ScanSpacing::Log);
    CHECK_THROWS_AS(parse_scan_axis("a:b"), ConfigError);
    CHECK_THROWS_AS(parse_scan_axis("p:1:2:3:cubic"), ConfigError);
    CHECK_THROWS_AS(parse_scan_axis("p:-1:2:3:log"), ConfigError);
}

TEST_CASE("unknown parameter path lists the valid ones") {
    Scenario sc = base_scenario();
    try {
        apply_scan_value(sc, "dilaton.bogus", 1.0);
        FAIL_CHECK("expected ConfigError");
    } catch (const ConfigError& e) {
        const std::string msg = e.what();
        CHECK(msg.find("dilaton.omega_rho") != std::string::npos);
        CHECK(msg.find("species.omega_over_omega_c") != std::string::npos);
    }
}

TEST_CASE("grid values and spacing") {
    ScanAxis ax{"geometry.T", 1.0, 100.0, 3, ScanSpacing::Log};
    const auto v = axis_values(ax);
    CHECK(v.size() == 3);
    CHECK(v[1] == doctest::Approx(10.0).epsilon(1e-12));
    ax.spacing = ScanSpacing::Linear;
    CHECK(axis_values(ax)[1] == doctest::Approx(50.5).epsilon(1e-12));
}

TEST_CASE("scan output is thread-count independent") {
    const Scenario sc = base_scenario();
    const std::vector<ScanAxis> axes = {
        {"dilaton.omega_rho", 0.5, 50.0, 12, ScanSpacing::Log}};
    const std::string a = run_scan(sc, axes, 1);
    const std::string b = run_scan(sc, axes, 4);
    CHECK(a == b);
}

TEST_CASE("signal nodes appear at full-period interrogation") {
    Scenario sc = base_scenario();
    sc.species = strontium88(1e-4, 1e-4);  // clock-dominated: delta_eps = 0
    sc.grad.p1 = sc.grad.geom.p0;
    const std::vector<ScanAxis> axes = {
        {"dilaton.omega_rho", 2.0 * M_PI, 2.0 * M_PI, 1, ScanSpacing::Linear}};
    const auto rows = parse_csv(run_scan(sc, axes, 1));
    REQUIRE(rows.size() == 2);
    const double phis2 = std::stod(rows[1][1]);
    CHECK(std::abs(phis2) < 1e-40);
}

TEST_CASE("omega scan with a density-specified amplitude keeps the 1/omega^4 envelope") {
    Scenario sc;
    sc.species = strontium88(2e-4, 2e-4);  // clock-dominated, delta_eps = 0
    sc.rho_dm = 0.4 * units::gev_per_cm3;
    sc.dilaton.omega_rho = 1.0;
    sc.dilaton.rho_0 = dilaton_amplitude(1.0, *sc.rho_dm);
    sc.dilaton.eps_S = 0.0;
    sc.grad.geom.k = 1.1e7;
    sc.grad.geom.T = 1.0;
    sc.grad.geom.g0 = 0.0;
    sc.grad.L = 3e6;
    sc.phi_rho_averaged = true;
    sc.numerics.phi_rho_nodes = 32;
    const std::vector<ScanAxis> axes = {
        {"dilaton.omega_rho", 1e-4, 1e2, 200, ScanSpacing::Log}};
    const auto rows = parse_csv(run_scan(sc, axes, 4));
    REQUIRE(rows.size() == 201);
    double ref = 0.0;
    for (size_t r = 1; r < rows.size(); ++r) {
        const double w = std::stod(rows[r][0]);
        const double phis2 = std::stod(rows[r][1]);
        const double SL = std::sin(0.5 * w * sc.grad.L / codata().c);
        const double ST = std::sin(0.5 * w * sc.grad.geom.T);
        const double intf = SL * SL * std::pow(ST, 4);
        if (intf < 1e-6) continue;  // interferometric zeros
        const double envelope = phis2 * std::pow(w, 4) / intf;
        if (ref == 0.0) ref = envelope;
        CHECK(envelope == doctest::Approx(ref).epsilon(1e-8));
    }
}

TEST_CASE("fig3 ratio column on the ratio-axes pair") {
    const Scenario sc = base_scenario();
    const std::vector<ScanAxis> axes = {
        {"species.omega_over_omega_c", 1e-17, 1e-9, 3, ScanSpacing::Log},
        {"species.delta_eps_over_eps_bar", 1e-18, 1e-8, 3, ScanSpacing::Log}};
    const auto rows = parse_csv(run_scan(sc, axes, 2));
    REQUIRE(rows.size() == 10);
    CHECK(rows[0].back() == "ratio_deltaeps0_over_full");
    // smallest coupling ratio with largest frequency ratio: ratio near 1
    // (grid order: axis2 fastest)
    const double near_one = std::stod(rows[7].back());
    CHECK(near_one > 0.99);
    const double near_zero = std::stod(rows[3].back());
    CHECK(near_zero < 1e-3);
}
