#include "oscilkit/oscillator.hpp"

#include <cmath>
#include <stdexcept>

namespace oscilkit::oscillator {

namespace {

void require(bool ok, const char* msg) {
    if (!ok) throw std::invalid_argument(msg);
}

// sin(sqrt(w2) t)/sqrt(w2) continued through w2 <= 0:
// sinh(sqrt(-w2) t)/sqrt(-w2) for w2 < 0 and the confluent limit t for w2 -> 0.
// The series branch keeps the near-critically-damped case (w2 t^2 small) away
// from 0/0; three terms leave a relative error below (w2 t^2)^3/5040.
double sin_like(double w2, double t) {
    const double q = w2 * t * t;
    if (std::abs(q) < 1e-6) {
        return t * (1.0 - q / 6.0 + q * q / 120.0);
    }
    if (w2 > 0.0) {
        const double w = std::sqrt(w2);
        return std::sin(w * t) / w;
    }
    const double w = std::sqrt(-w2);
    return std::sinh(w * t) / w;
}

// cos(sqrt(w2) t) continued the same way.
double cos_like(double w2, double t) {
    const double q = w2 * t * t;
    if (std::abs(q) < 1e-6) {
        return 1.0 - q / 2.0 + q * q / 24.0;
    }
    if (w2 > 0.0) return std::cos(std::sqrt(w2) * t);
    return std::cosh(std::sqrt(-w2) * t);
}

} // namespace

OscillatorParams::OscillatorParams(double mass_, double omega_, double gamma_)
    : mass(mass_), omega(omega_), gamma(gamma_) {
    require(std::isfinite(mass) && mass > 0.0, "OscillatorParams: mass must be > 0");
    require(std::isfinite(omega) && omega > 0.0, "OscillatorParams: omega must be > 0");
    require(std::isfinite(gamma) && gamma >= 0.0, "OscillatorParams: gamma must be >= 0");
}

DriveField::DriveField(double f0_, double omega_) : f0(f0_), omega(omega_) {
    require(std::isfinite(f0), "DriveField: f0 must be finite");
    require(std::isfinite(omega), "DriveField: omega must be finite");
}

double response_kernel(const OscillatorParams& p, double t) {
    if (!std::isfinite(t)) throw std::domain_error("response_kernel: t must be finite");
    const double w2 = p.omega * p.omega - 0.25 * p.gamma * p.gamma;  // Omega~^2
    return std::exp(-0.5 * p.gamma * std::abs(t)) * sin_like(w2, t);
}

double relaxation(const OscillatorParams& p, double t) {
    if (!std::isfinite(t)) throw std::domain_error("relaxation: t must be finite");
    const double at = std::abs(t);
    const double w2 = p.omega * p.omega - 0.25 * p.gamma * p.gamma;
    return std::exp(-0.5 * p.gamma * at) *
           (cos_like(w2, at) + 0.5 * p.gamma * sin_like(w2, at));
}

ResponseRelaxation response_relaxation(const OscillatorParams& p, double t) {
    // chi(t) = C(t)/(i m) = -i C(t)/m with the real kernel C(t) = i m chi(t).
    const double c = response_kernel(p, t);
    return {std::complex<double>(0.0, -c / p.mass), relaxation(p, t)};
}

double static_susceptibility(const OscillatorParams& p) {
    return 1.0 / (p.mass * p.omega * p.omega);
}

std::pair<double, double> susceptibility(const OscillatorParams& p, double omega) {
    const double om2 = p.omega * p.omega;
    const double det = om2 - omega * omega;
    const double og = omega * p.gamma;
    const double denom = det * det + og * og;
    return {det / (p.mass * denom), og / (p.mass * denom)};
}

std::complex<double> susceptibility(const OscillatorParams& p, std::complex<double> z) {
    if (z.imag() == 0.0)
        throw std::domain_error(
            "susceptibility(z): z must lie off the real axis; use the real-omega overload");
    const double s = z.imag() > 0.0 ? 1.0 : -1.0;
    const std::complex<double> shifted = z + std::complex<double>(0.0, s * p.gamma);
    return (1.0 / p.mass) / (p.omega * p.omega - z * shifted);
}

std::complex<double> relaxation_flt(const OscillatorParams& p, std::complex<double> z) {
    if (z.imag() == 0.0)
        throw std::domain_error("relaxation_flt: z must lie off the real axis");
    const double s = z.imag() > 0.0 ? 1.0 : -1.0;
    const std::complex<double> shifted = z + std::complex<double>(0.0, s * p.gamma);
    return shifted / (p.omega * p.omega - z * shifted);
}

std::pair<double, double> relaxation_spectrum(const OscillatorParams& p, double omega) {
    const double om2 = p.omega * p.omega;
    const double det = om2 - omega * omega;
    const double denom = det * det + omega * omega * p.gamma * p.gamma;
    const double re = omega * (det - p.gamma * p.gamma) / denom;
    const double im = p.gamma * om2 / denom;
    return {re, im};
}

double steady_state(const OscillatorParams& p, const DriveField& drive, double t) {
    const auto [re, im] = susceptibility(p, drive.omega);
    return (re * std::cos(drive.omega * t) + im * std::sin(drive.omega * t)) * drive.f0;
}

SteadyStateForm steady_state_form(const OscillatorParams& p, const DriveField& drive) {
    const auto [re, im] = susceptibility(p, drive.omega);
    const double om2 = p.omega * p.omega;
    const double det = om2 - drive.omega * drive.omega;
    const double og = std::abs(drive.omega) * p.gamma;
    const double amp =
        om2 * static_susceptibility(p) * std::abs(drive.f0) / std::hypot(det, og);
    // atan2 keeps phi continuous through resonance: phi(Omega) = pi/2, phi in [0, pi].
    const double phase = std::atan2(og, det);
    return {amp, phase, re, im};
}

double absorbed_power(const OscillatorParams& p, const DriveField& drive) {
    const auto [re, im] = susceptibility(p, drive.omega);
    (void)re;
    return 0.5 * drive.omega * im * drive.f0 * drive.f0;
}

DerivedFreqs characteristic_freqs(const OscillatorParams& p) {
    DerivedFreqs d{};
    const double half_gamma = 0.5 * p.gamma;
    const double w2 = p.omega * p.omega - half_gamma * half_gamma;
    std::complex<double> root;  // sqrt((Gamma/2)^2 - Omega^2)
    if (w2 >= 0.0) {
        d.omega_tilde = std::sqrt(w2);
        root = std::complex<double>(0.0, std::sqrt(w2));
    } else {
        d.omega_tilde = std::complex<double>(0.0, std::sqrt(-w2));
        root = std::sqrt(-w2);
    }
    d.theta = std::atan2(half_gamma, d.omega_tilde.real());
    d.zeta1 = -half_gamma + root;
    d.zeta2 = -half_gamma - root;
    d.omega_r = p.omega;
    const double radicand = 1.0 - p.gamma * p.gamma / (2.0 * p.omega * p.omega);
    d.omega_m_defined = radicand >= 0.0;
    d.omega_m = d.omega_m_defined ? p.omega * std::sqrt(radicand) : 0.0;
    return d;
}

} // namespace oscilkit::oscillator
