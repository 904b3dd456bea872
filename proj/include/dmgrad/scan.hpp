#pragma once

#include <string>
#include <vector>

#include "dmgrad/config.hpp"

namespace dmgrad {

enum class ScanSpacing { Linear, Log };

struct ScanAxis {
    std::string path;  // e.g. dilaton.omega_rho, species.omega_over_omega_c
    double lo = 0.0;
    double hi = 0.0;
    int points = 0;
    ScanSpacing spacing = ScanSpacing::Log;
};

// "path:lo:hi:points:spacing"
ScanAxis parse_scan_axis(const std::string& spec);

const std::vector<std::string>& scan_parameter_paths();

// Grid values along one axis.
std::vector<double> axis_values(const ScanAxis& axis);

// Applies one scanned parameter to a scenario copy. Throws ConfigError for
// unknown paths (the message lists the valid ones).
void apply_scan_value(Scenario& sc, const std::string& path, double value);

// Runs a 1- or 2-axis scan; rows come out in grid order (axis2 fastest)
// independent of the thread count. Returns a CSV document.
std::string run_scan(const Scenario& base, const std::vector<ScanAxis>& axes,
                     int threads);

}  // namespace dmgrad
