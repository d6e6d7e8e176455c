#pragma once

#include <complex>
#include <functional>
#include <utility>

#include "oscilkit/oscillator.hpp"

namespace oscilkit::al {

/// Parameters of the Abraham-Lorentz equation
///   x''(t) - tau x'''(t) + omega0^2 x(t) = f(t)/m.
struct ALParams {
    double mass;
    double tau;      // radiation-reaction time [time]
    double omega0;   // bare resonance frequency [rad/time]

    ALParams(double mass, double tau, double omega0);
};

/// Roots of the characteristic cubic zeta^2 - tau zeta^3 + omega0^2 = 0:
/// a complex-conjugate pair zeta1/zeta3 = u +- iv and the positive run-away
/// root zeta2 = 1/tau - 2u.
struct ALRoots {
    double w;   // cube-root bracket value, in (0, 1]
    double u;   // Re[zeta1] <= 0
    double v;   // Im[zeta1] >= 0
    std::complex<double> zeta1;
    double zeta2;
    std::complex<double> zeta3;
    double max_rel_residual;  // worst |p(zeta)| / (|zeta|^2 + |tau zeta^3| + omega0^2)
};

struct ALInitialState {
    double x0;  // elongation
    double v0;  // velocity
    double b0;  // acceleration

    ALInitialState(double x0, double v0, double b0);
};

/// Forced-oscillation parameters equivalent to the homogeneous AL dynamics:
/// Gamma = -2u, Omega = sqrt(u^2 + v^2), Omega~ = v.
struct EffectiveOscillator {
    oscillator::OscillatorParams params;
    double omega_tilde;   // = v exactly
    double delta_omega2;  // Omega^2 - omega0^2, evaluated cancellation-free
    double delta_gamma;   // Gamma - tau*omega0^2, evaluated cancellation-free
};

struct BoundedCondition {
    double residual;      // b0 + Gamma v0 + Omega^2 x0
    bool is_on_manifold;
};

struct ErrorRatios {
    double re_ratio;          // Re X(omega) / chi'(omega)
    double im_ratio;          // Im X(omega) / chi''(omega)
    bool in_validity_range;   // 1 >> |1 - omega^2/omega0^2| >> (tau*omega0)^2
    bool re_pole;             // chi'(omega) == 0, re_ratio reported as +-inf
    bool im_pole;             // chi''(omega) == 0
};

/// Characteristic roots. Three evaluation branches keyed on tau*omega0:
/// a series below 1e-4 (the closed form loses ~8 digits to the (w-1)^2
/// cancellation), the closed form refined by one Newton step on the
/// equivalent cubic 8 tau^2 u^3 - 8 tau u^2 + 2u + tau omega0^2 = 0 in
/// [1e-4, 1e-2], and the closed form with the same polish above.
/// Throws NumericError when the residual bound cannot be met.
ALRoots char_roots(const ALParams& al);

EffectiveOscillator effective_oscillator(const ALParams& al);

/// Truncated expansions Gamma = tau omega0^2 [1 - 2(tau omega0)^2] and
/// Omega = omega0 [1 - (tau omega0)^2/2], for comparison with the exact values.
std::pair<double, double> effective_series(const ALParams& al);

/// Unique AL solution x(t; t0) for given initial data and driving force,
/// evaluated from the closed homogeneous part plus the particular integral
/// (adaptive quadrature). Preconditions: t >= t0 and zeta2*(t - t0) <= 700
/// (std::range_error beyond; longer horizons need the ODE integrator).
double unique_solution(const ALParams& al, const ALInitialState& init,
                       const std::function<double(double)>& force, double t, double t0);

/// Homogeneous special case (f == 0).
double unique_solution(const ALParams& al, const ALInitialState& init, double t,
                       double t0);

/// Sinusoidal-force path: the particular integral reduces to three elementary
/// integrals, evaluated in closed form.
double unique_solution(const ALParams& al, const ALInitialState& init,
                       const oscillator::DriveField& drive, double t, double t0);

/// Residual of the bounded-solution condition b0 + Gamma v0 + Omega^2 x0 = 0;
/// on the manifold the run-away component of the unique solution vanishes.
BoundedCondition bounded_condition(const ALParams& al, const ALInitialState& state,
                                   double tol = 1e-12);

/// The oscillatory particular solution x_osc(t) of the driven AL equation.
/// It solves the equation but is not a steady state (none exists).
double oscillatory_particular(const ALParams& al, const oscillator::DriveField& drive,
                              double t);

/// The textbook "susceptibility" X(omega) = omega0^2 X0 / (omega0^2 - omega^2
/// - i tau omega^3), X0 = 1/(m omega0^2). Provided for error analysis; it is
/// not a valid susceptibility (violates the dispersion relations).
std::complex<double> faulty_susceptibility(const ALParams& al, double omega);

/// chi'(omega), chi''(omega) of the effective oscillator with the detuning
/// Omega^2 - omega^2 assembled as (omega0^2 - omega^2) + delta_omega2 so that
/// tau*omega0 ~ 1e-8 stays fully resolved near resonance.
std::pair<double, double> lorentz_susceptibility(const ALParams& al, double omega);

/// Ratios of the faulty X(omega) to the exact susceptibility. "Much greater"
/// in the validity range is interpreted as the given margin factor (>= 10).
ErrorRatios susceptibility_error_ratios(const ALParams& al, double omega,
                                        double margin = 10.0);

namespace detail {
/// Individual evaluation paths, exposed for crossover testing.
std::pair<double, double> roots_series(const ALParams& al);       // (u, v)
std::pair<double, double> roots_closed(const ALParams& al, bool newton_polish);
} // namespace detail

} // namespace oscilkit::al
