#pragma once

#include "oscilkit/dispersion.hpp"
#include "oscilkit/oscillator.hpp"

namespace oscilkit::xsec {

/// Physical constants, injected rather than global so the dimensionless test
/// mode (e = m = c = eps0 = hbar = 1) and SI runs share one code path.
struct PhysicalConstants {
    double e;         // elementary charge [C]
    double m_e;       // electron mass [kg]
    double c;         // speed of light [m/s]
    double eps0;      // vacuum permittivity [F/m]
    double hbar;      // reduced Planck constant [J s]
    double alpha_fs;  // fine-structure constant
    double tau;       // e^2 / (6 pi eps0 m c^3) [s]
    double R;         // classical radius e^2 / (4 pi eps0 m c^2) [m]

    /// CODATA-2018 values (c and e exact by definition).
    static PhysicalConstants si_electron();
    /// e = m = c = eps0 = hbar = 1; tau and R follow from their definitions.
    static PhysicalConstants dimensionless();

    double lambdabar(double omega0) const { return c / omega0; }
};

/// Radiative + non-radiative damping; gamma_total is frequency-independent.
struct DampingSplit {
    double gamma_rad;    // Gamma = tau * omega0^2
    double gamma_prime;  // Gamma'
    double gamma_total;  // Gamma_t = Gamma + Gamma'

    static DampingSplit from_tau(double tau, double omega0, double gamma_prime);
    static DampingSplit from_rates(double gamma_rad, double gamma_prime);
};

/// Absorption cross section
/// sigma_abs = 6 pi lb0^2 Gamma Gamma_t omega^2 / [(omega0^2-omega^2)^2 + (omega Gamma_t)^2].
double sigma_abs(double omega, double omega0, const DampingSplit& split, double lambdabar0);

/// Same quantity assembled from the absorbed power of the oscillator with
/// f0 = e E0: sigma = P(omega) / (eps0 c E0^2 / 2). Consistency route for tests.
double sigma_abs_from_power(double omega, double omega0, const DampingSplit& split,
                            const PhysicalConstants& consts);

/// Diagnostic variant with the omega-dependent total damping
/// Gamma_t(omega) = Gamma' + (omega/omega0)^2 Gamma, which breaks the sum rule.
double sigma_abs_jackson(double omega, double omega0, const DampingSplit& split,
                         double lambdabar0);

struct FSumResult {
    double numeric;   // truncated integral plus analytic tail
    double analytic;  // pi e^2 / (2 eps0 c m)
    double rel_err;
};

/// Verifies the dipole sum rule int_0^inf sigma_abs = pi e^2/(2 eps0 c m).
/// Truncation Lambda = 1e4 max(omega0, Gamma_t) with the 6 pi lb0^2 Gamma Gamma_t / Lambda
/// tail folded in. jackson_variant = true integrates the diagnostic cross section.
FSumResult f_sum_check(double omega0, const DampingSplit& split,
                       const PhysicalConstants& consts,
                       const dispersion::QuadratureConfig& cfg,
                       bool jackson_variant = false);

/// Photon-absorption rate Gamma_abs = chi''(omega) e^2 E0^2/(2 hbar) Theta(omega).
double gamma_abs(double omega, double E0, double chi_im, const PhysicalConstants& consts);

enum class ScatterRegime { Rayleigh, Resonant, Thomson, Unlabeled };

struct SigmaScatter {
    double value;
    ScatterRegime regime;
};

const char* to_string(ScatterRegime regime);

/// Scattering cross section (oscillator parameters Omega = omega0, Gamma = tau omega0^2)
/// sigma_sc = (8 pi/3) R^2 omega^4 / [(omega0^2-omega^2)^2 + (omega Gamma_t)^2],
/// labelled Rayleigh (omega < 0.1 omega0), Resonant (|omega-omega0| < 10 Gamma_t)
/// or Thomson (omega > 10 omega0).
SigmaScatter sigma_sc(double omega, double omega0, const DampingSplit& split,
                      const PhysicalConstants& consts);

/// Resonant Lorentz forms sharing the denominator (omega-omega0)^2 + (Gamma_t/2)^2
/// with numerators Gamma Gamma_t (absorption), Gamma^2 (scattering), Gamma Gamma'
/// (reaction): sigma_abs_l = sigma_sc_l + sigma_r_l identically.
struct ResonantDecomposition {
    double sigma_abs_l;
    double sigma_sc_l;
    double sigma_r_l;
    bool in_resonant_range;  // |omega - omega0| < omega0/10
};

ResonantDecomposition resonant_decomposition(double omega, double omega0,
                                             const DampingSplit& split,
                                             const PhysicalConstants& consts);

/// Optical dipole potential U_dip = -chi'(omega) e^2 E0^2/4 and the
/// rate-to-potential ratio hbar Gamma_abs / U_dip = 2 omega Gamma/(omega^2 - Omega^2),
/// with its QUEST (omega << Omega) and FORT (small detuning) limits.
struct DipoleRatio {
    double u_dip;
    double ratio;
    double ratio_low_freq;   // -2 omega Gamma / Omega^2
    double ratio_detuned;    // Gamma / (omega - Omega)
    bool at_pole;            // omega == Omega
};

DipoleRatio dipole_potential_and_ratio(double omega, double E0,
                                       const oscillator::OscillatorParams& p,
                                       const PhysicalConstants& consts);

} // namespace oscilkit::xsec
