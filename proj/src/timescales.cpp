#include "dmgrad/timescales.hpp"

#include <cmath>
#include <complex>
#include <stdexcept>

#include "dmgrad/quadrature.hpp"

namespace dmgrad {

namespace {

// sin(x) - x without cancellation for small |x|.
double sin_minus_x(double x) {
    if (std::abs(x) >= 1.0) return std::sin(x) - x;
    double term = -x * x * x / 6.0;
    double sum = term;
    for (int j = 1; j < 16; ++j) {
        term *= -x * x / ((2.0 * j + 2.0) * (2.0 * j + 3.0));
        sum += term;
        if (std::abs(term) <= 1e-18 * std::abs(sum)) break;
    }
    return sum;
}

// Window moments int_0^r u^n cos(x u) du and the sin counterpart, as series
// in x through x^6 (x^7 for the odd part). Valid for |x| << 1.
double series_P(int n, double r, double x) {
    double sum = 0.0;
    double fact = 1.0;  // (2m)!
    double xp = 1.0;    // x^(2m)
    double sign = 1.0;
    for (int m = 0; m <= 3; ++m) {
        if (m > 0) {
            fact *= (2.0 * m - 1.0) * (2.0 * m);
            xp *= x * x;
            sign = -sign;
        }
        sum += sign * xp * std::pow(r, n + 2 * m + 1) / (fact * (n + 2 * m + 1));
    }
    return sum;
}

double series_Q(int n, double r, double x) {
    double sum = 0.0;
    double fact = 1.0;  // (2m+1)!
    double xp = x;      // x^(2m+1)
    double sign = 1.0;
    for (int m = 0; m <= 3; ++m) {
        if (m > 0) {
            fact *= (2.0 * m) * (2.0 * m + 1.0);
            xp *= x * x;
            sign = -sign;
        }
        sum += sign * xp * std::pow(r, n + 2 * m + 2) / (fact * (n + 2 * m + 2));
    }
    return sum;
}

// First window minus second window of the n-th moment, series branch.
double series_mzi_diff(int n, double x, double w0, double tpow) {
    const double a = 2.0 * series_P(n, 1.0, x) - series_P(n, 2.0, x);
    const double b = 2.0 * series_Q(n, 1.0, x) - series_Q(n, 2.0, x);
    return tpow * (std::cos(w0) * a - std::sin(w0) * b);
}

// Triangle weight (t - t0) then (2T - (t - t0)), both windows added.
double series_mzi_triangle(double x, double w0, double tpow) {
    const double a = series_P(1, 1.0, x) + 2.0 * (series_P(0, 2.0, x) - series_P(0, 1.0, x)) -
                     (series_P(1, 2.0, x) - series_P(1, 1.0, x));
    const double b = series_Q(1, 1.0, x) + 2.0 * (series_Q(0, 2.0, x) - series_Q(0, 1.0, x)) -
                     (series_Q(1, 2.0, x) - series_Q(1, 1.0, x));
    return tpow * (std::cos(w0) * a - std::sin(w0) * b);
}

// tau3^3 closed form, arranged so the three-order cancellation at small
// omega*T is done analytically: with D = e^{ix} - 1 and eps = D - ix,
// B = eps^2 - x^2 D (3 + 2D) - 2 i x D^2 and
// tau3^3 = (2 / omega^3) [Im(B) cos(w0) + Re(B) sin(w0)].
double tau3_closed(double t0, double T, double w, double phi) {
    const double x = w * T;
    const double w0 = w * t0 + phi;
    const double cm1 = -2.0 * std::sin(0.5 * x) * std::sin(0.5 * x);  // cos x - 1
    const std::complex<double> D(cm1, std::sin(x));
    const std::complex<double> eps(cm1, sin_minus_x(x));
    const std::complex<double> B =
        eps * eps - x * x * D * (3.0 + 2.0 * D) -
        std::complex<double>(0.0, 2.0 * x) * D * D;
    return 2.0 / (w * w * w) * (B.imag() * std::cos(w0) + B.real() * std::sin(w0));
}

}  // namespace

const char* timescale_name(TimescaleKind kind) {
    switch (kind) {
        case TimescaleKind::Tau1: return "tau1";
        case TimescaleKind::Tau2Sq: return "tau2^2";
        case TimescaleKind::Tau3Cu: return "tau3^3";
        case TimescaleKind::TauSSq: return "tauS^2";
        case TimescaleKind::TauEPSq: return "tauEP^2";
    }
    return "?";
}

double timescale(TimescaleKind kind, double t0, double T, double omega_rho,
                 double phi_rho, double phi_S) {
    if (!(T > 0.0)) throw std::domain_error("timescale: T must be > 0");
    if (omega_rho < 0.0) throw std::domain_error("timescale: omega_rho must be >= 0");
    const double x = omega_rho * T;
    const double w0 = omega_rho * t0 + phi_rho;

    if (x < kTimescaleSeriesCrossover) {
        switch (kind) {
            case TimescaleKind::Tau1: return series_mzi_diff(0, x, w0, T);
            case TimescaleKind::Tau2Sq: return series_mzi_diff(1, x, w0, T * T);
            case TimescaleKind::Tau3Cu: return series_mzi_diff(2, x, w0, T * T * T);
            case TimescaleKind::TauSSq: return series_mzi_triangle(x, w0 + phi_S, T * T);
            case TimescaleKind::TauEPSq: return series_mzi_triangle(x, w0, T * T);
        }
    }

    const double w = omega_rho;
    const double W = w0 + x;  // phase at the mirror pulse
    const double st = std::sin(0.5 * x);
    switch (kind) {
        case TimescaleKind::Tau1:
            return 4.0 / w * st * st * std::sin(W);
        case TimescaleKind::Tau2Sq:
            return 4.0 / (w * w) * st * st * std::cos(W) -
                   4.0 * T / w * st * std::cos(W + 0.5 * x);
        case TimescaleKind::Tau3Cu:
            return tau3_closed(t0, T, w, phi_rho);
        case TimescaleKind::TauSSq:
            return 4.0 / (w * w) * st * st * std::cos(W + phi_S);
        case TimescaleKind::TauEPSq:
            return 4.0 / (w * w) * st * st * std::cos(W);
    }
    throw std::domain_error("timescale: unknown kind");
}

double timescale_quadrature(TimescaleKind kind, double t0, double T, double omega_rho,
                            double phi_rho, double phi_S) {
    if (!(T > 0.0)) throw std::domain_error("timescale_quadrature: T must be > 0");
    if (omega_rho < 0.0)
        throw std::domain_error("timescale_quadrature: omega_rho must be >= 0");
    const double shift = (kind == TimescaleKind::TauSSq) ? phi_S : 0.0;
    auto theta = [&](double t) { return std::cos(omega_rho * t + phi_rho + shift); };

    std::function<double(double)> f1, f2;
    double sign2 = -1.0;  // MZI difference by default
    switch (kind) {
        case TimescaleKind::Tau1:
            f1 = theta;
            f2 = theta;
            break;
        case TimescaleKind::Tau2Sq:
            f1 = [&](double t) { return (t - t0) * theta(t); };
            f2 = f1;
            break;
        case TimescaleKind::Tau3Cu:
            f1 = [&](double t) { return (t - t0) * (t - t0) * theta(t); };
            f2 = f1;
            break;
        case TimescaleKind::TauSSq:
        case TimescaleKind::TauEPSq:
            f1 = [&](double t) { return (t - t0) * theta(t); };
            f2 = [&](double t) { return (2.0 * T - (t - t0)) * theta(t); };
            sign2 = 1.0;
            break;
    }
    constexpr double tol = 1e-13;
    const QuadResult a = integrate_oscillatory(f1, t0, t0 + T, omega_rho, tol);
    const QuadResult b = integrate_oscillatory(f2, t0 + T, t0 + 2.0 * T, omega_rho, tol);
    return a.value + sign2 * b.value;
}

}  // namespace dmgrad
