#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "dmgrad/config.hpp"

namespace dmgrad {

// Deterministic uniform generator: mt19937_64 bits mapped to [0,1) without
// going through distribution objects, so draws are identical across
// platforms and standard libraries.
class Rng {
  public:
    explicit Rng(uint64_t seed) : state_(seed ? seed : 0x9e3779b97f4a7c15ull) {}
    double uniform();                       // [0, 1)
    double uniform(double lo, double hi);   // [lo, hi)
    double log_uniform(double lo, double hi);
    bool coin() { return uniform() < 0.5; }

  private:
    uint64_t next();
    uint64_t state_;
};

// Random gradiometer scenario in the acceptance-gate ranges:
// |couplings| <= 1e-3, delta_mu0 <= 1e-10, omega_rho*T in [0.01, 100],
// omega_rho*tau_L in [1e-3, 3], single-photon or Bragg.
Scenario random_scenario(Rng& rng);

struct ResidualRow {
    std::string item;       // label, pair, or timescale name
    double worst = 0.0;     // worst normalized residual over all trials
    double tolerance = 0.0;
    bool pass = true;
};

struct GateReport {
    std::string name;
    std::vector<ResidualRow> rows;
    int trials = 0;
    int quadrature_failures = 0;
    bool pass = true;

    std::string to_string() const;
};

// Catalog vs trajectory oracle, per perturbation row (labels grouped by the
// potential term that produces them). Residuals are
// |catalog - oracle| / max(|catalog|, 1e-12) for labeled rows, clipped by the
// absolute floor 1e-18 and the quadrature rounding floor 5e-13 * scale;
// the two identically-vanishing rest-mass rows are gated at 1e-12 * scale.
GateReport oracle_gate(int trials, uint64_t seed, double rel_tol);

// Closed-form timescales vs quadrature over random draws including the
// series regime omega_rho*T in [1e-8, 1e-4].
GateReport timescale_gate(int draws, uint64_t seed, double rel_tol);

// Analytic correlation catalog vs numeric phi_rho cross-averages, per pair.
GateReport signal_gate(int trials, uint64_t seed, double rel_tol);

}  // namespace dmgrad
