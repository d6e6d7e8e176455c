#pragma once

#include <complex>
#include <utility>

namespace oscilkit::oscillator {

/// Parameters of the forced-oscillation equation
///   x''(t) + Gamma x'(t) + Omega^2 x(t) = f(t)/m.
/// All formulas carry the mass explicitly so SI and dimensionless runs share
/// one code path.
struct OscillatorParams {
    double mass;
    double omega;   // resonance frequency Omega [rad/time]
    double gamma;   // damping constant Gamma [1/time]

    OscillatorParams(double mass, double omega, double gamma);
};

/// Frequencies derived from (Omega, Gamma): the damped frequency Omega-tilde,
/// the phase angle, the characteristic roots, and the resonance/amplitude-peak
/// frequencies of the driven response.
struct DerivedFreqs {
    std::complex<double> omega_tilde;  // imaginary branch when Gamma >= 2 Omega
    double theta;                      // arctan(Gamma / (2 Re[omega_tilde]))
    std::complex<double> zeta1;        // -Gamma/2 + sqrt((Gamma/2)^2 - Omega^2)
    std::complex<double> zeta2;        // -Gamma/2 - sqrt((Gamma/2)^2 - Omega^2)
    double omega_r;                    // power-resonance frequency (= Omega)
    double omega_m;                    // amplitude-maximum frequency; 0 when undefined
    bool omega_m_defined;              // false when Gamma^2 > 2 Omega^2
};

/// Sinusoidal drive f(t) = f0 cos(omega t). Any sign of omega is allowed.
struct DriveField {
    double f0;
    double omega;

    DriveField(double f0, double omega);
};

/// Steady-state elongation xi(t) = A cos(|omega| t - phi) for |f0|.
struct SteadyStateForm {
    double amplitude;   // A >= 0
    double phase_lag;   // phi in [0, pi]
    double chi_re;      // chi'(omega)
    double chi_im;      // chi''(omega)
};

struct ResponseRelaxation {
    std::complex<double> chi;  // purely imaginary response function chi(t)
    double phi;                // relaxation function phi(t)
};

/// Real response kernel C(t) = i m chi(t) = e^{-Gamma|t|/2} sin(Omega~ t)/Omega~.
/// Odd in t; the hot path stays in real arithmetic.
double response_kernel(const OscillatorParams& p, double t);

/// Relaxation function phi(t) = e^{-Gamma|t|/2} cos(Omega~|t| - theta)/cos(theta).
/// Even in t; phi(0) = 1, phi'(0) = 0.
double relaxation(const OscillatorParams& p, double t);

/// chi(t) (purely imaginary) and phi(t) together. Throws std::domain_error for
/// non-finite t.
ResponseRelaxation response_relaxation(const OscillatorParams& p, double t);

/// Static susceptibility chi0 = 1/(m Omega^2).
double static_susceptibility(const OscillatorParams& p);

/// Dynamical susceptibility at omega + i0: returns (chi'(omega), chi''(omega)).
std::pair<double, double> susceptibility(const OscillatorParams& p, double omega);

/// Generalized susceptibility chi~(z) = (1/m) / (Omega^2 - z(z + i s Gamma)),
/// s = sign Im[z]. Throws std::domain_error when z is exactly real (use the
/// real-omega entry point for boundary values).
std::complex<double> susceptibility(const OscillatorParams& p, std::complex<double> z);

/// FLT of the relaxation function, phi~(z) = (z + i s Gamma)/(Omega^2 - z(z + i s Gamma)).
std::complex<double> relaxation_flt(const OscillatorParams& p, std::complex<double> z);

/// Boundary values of phi~: returns (phi'(omega), phi''(omega)).
std::pair<double, double> relaxation_spectrum(const OscillatorParams& p, double omega);

/// Steady-state elongation xi(t) = [chi' cos(omega t) + chi'' sin(omega t)] f0.
double steady_state(const OscillatorParams& p, const DriveField& drive, double t);

/// Amplitude/phase form of the steady state.
SteadyStateForm steady_state_form(const OscillatorParams& p, const DriveField& drive);

/// Average absorbed power P(omega) = (1/2) omega chi''(omega) f0^2 >= 0.
double absorbed_power(const OscillatorParams& p, const DriveField& drive);

DerivedFreqs characteristic_freqs(const OscillatorParams& p);

} // namespace oscilkit::oscillator
