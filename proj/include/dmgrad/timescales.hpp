#pragma once

#include <string>

namespace dmgrad {

// The five oscillatory time scales of the MZI perturbation phases. Values
// carry the full power of time: Tau1 in s, Tau2Sq/TauSSq/TauEPSq in s^2,
// Tau3Cu in s^3.
enum class TimescaleKind { Tau1, Tau2Sq, Tau3Cu, TauSSq, TauEPSq };

const char* timescale_name(TimescaleKind kind);

// Closed-form evaluation. All kinds are built from window moments of
// cos(omega_rho t + phi_rho) over [t0, t0+T] and [t0+T, t0+2T]; phi_S shifts
// the phase for TauSSq only. Below omega_rho*T = 1e-4 a truncated series in
// omega_rho*T takes over (the tau3 closed form loses ~omega_rho*T relative
// accuracy to cancellation otherwise). Throws std::domain_error for T <= 0
// or omega_rho < 0.
double timescale(TimescaleKind kind, double t0, double T, double omega_rho,
                 double phi_rho, double phi_S = 0.0);

// Brute-force oracle: composite Gauss-Legendre quadrature of the defining
// window integrals. Converges to ~1e-12 relative for omega_rho*T <= 1e4;
// throws QuadratureError if the panel budget is exhausted.
double timescale_quadrature(TimescaleKind kind, double t0, double T,
                            double omega_rho, double phi_rho, double phi_S = 0.0);

// Crossover between series and closed form, in units of omega_rho*T.
inline constexpr double kTimescaleSeriesCrossover = 1e-4;

}  // namespace dmgrad
