#include "oscilkit/cross_sections.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <stdexcept>
#include <vector>

#include "oscilkit/errors.hpp"
#include "oscilkit/quadrature.hpp"

namespace oscilkit::xsec {

namespace {

void require(bool ok, const char* msg) {
    if (!ok) throw std::invalid_argument(msg);
}

double lorentz_denominator(double omega, double omega0, double gamma_t) {
    const double det = (omega0 - omega) * (omega0 + omega);
    return det * det + omega * omega * gamma_t * gamma_t;
}

} // namespace

PhysicalConstants PhysicalConstants::si_electron() {
    PhysicalConstants k{};
    k.e = 1.602176634e-19;        // exact
    k.m_e = 9.1093837015e-31;
    k.c = 299792458.0;            // exact
    k.eps0 = 8.8541878128e-12;
    k.hbar = 1.054571817e-34;
    k.alpha_fs = 7.2973525693e-3;
    k.R = k.e * k.e / (4.0 * M_PI * k.eps0 * k.m_e * k.c * k.c);
    k.tau = k.e * k.e / (6.0 * M_PI * k.eps0 * k.m_e * k.c * k.c * k.c);
    return k;
}

PhysicalConstants PhysicalConstants::dimensionless() {
    PhysicalConstants k{};
    k.e = 1.0;
    k.m_e = 1.0;
    k.c = 1.0;
    k.eps0 = 1.0;
    k.hbar = 1.0;
    k.alpha_fs = 1.0 / (4.0 * M_PI);  // e^2/(4 pi eps0 hbar c) with unit inputs
    k.R = 1.0 / (4.0 * M_PI);
    k.tau = 1.0 / (6.0 * M_PI);
    return k;
}

DampingSplit DampingSplit::from_tau(double tau, double omega0, double gamma_prime) {
    require(tau > 0.0 && omega0 > 0.0, "DampingSplit: tau and omega0 must be > 0");
    return from_rates(tau * omega0 * omega0, gamma_prime);
}

DampingSplit DampingSplit::from_rates(double gamma_rad, double gamma_prime) {
    require(gamma_rad >= 0.0 && gamma_prime >= 0.0,
            "DampingSplit: damping rates must be >= 0");
    return {gamma_rad, gamma_prime, gamma_rad + gamma_prime};
}

double sigma_abs(double omega, double omega0, const DampingSplit& split,
                 double lambdabar0) {
    require(omega0 > 0.0, "sigma_abs: omega0 must be > 0");
    const double num = 6.0 * M_PI * lambdabar0 * lambdabar0 * split.gamma_rad *
                       split.gamma_total * omega * omega;
    return num / lorentz_denominator(omega, omega0, split.gamma_total);
}

double sigma_abs_from_power(double omega, double omega0, const DampingSplit& split,
                            const PhysicalConstants& consts) {
    // P(omega) with f0 = e E0 and chi'' of the (m, omega0, Gamma_t) oscillator;
    // the E0^2 factor cancels against the incident flux eps0 c E0^2 / 2.
    const oscillator::OscillatorParams p(consts.m_e, omega0, split.gamma_total);
    const auto [re, im] = oscillator::susceptibility(p, omega);
    (void)re;
    const double power_over_e0sq = 0.5 * omega * im * consts.e * consts.e;
    return power_over_e0sq / (consts.eps0 * consts.c / 2.0);
}

double sigma_abs_jackson(double omega, double omega0, const DampingSplit& split,
                         double lambdabar0) {
    const double gt = split.gamma_prime +
                      (omega / omega0) * (omega / omega0) * split.gamma_rad;
    const double num =
        6.0 * M_PI * lambdabar0 * lambdabar0 * split.gamma_rad * gt * omega * omega;
    return num / lorentz_denominator(omega, omega0, gt);
}

FSumResult f_sum_check(double omega0, const DampingSplit& split,
                       const PhysicalConstants& consts,
                       const dispersion::QuadratureConfig& cfg, bool jackson_variant) {
    cfg.validate();
    const double lb0 = consts.lambdabar(omega0);
    const double gt = split.gamma_total;
    const double lambda = 1e4 * std::max(omega0, gt);

    auto sigma = [&](double w) {
        return jackson_variant ? sigma_abs_jackson(w, omega0, split, lb0)
                               : sigma_abs(w, omega0, split, lb0);
    };

    // Segment at the resonance so the adaptive rule cannot step over a narrow line.
    std::vector<double> cuts = {0.0,          0.5 * omega0,  omega0 - 30.0 * gt,
                                omega0,       omega0 + 30.0 * gt, 2.0 * omega0,
                                10.0 * omega0, lambda};
    for (double& c : cuts) c = std::clamp(c, 0.0, lambda);
    std::sort(cuts.begin(), cuts.end());
    double total = 0.0;
    for (std::size_t i = 0; i + 1 < cuts.size(); ++i) {
        if (cuts[i + 1] <= cuts[i]) continue;
        auto res = quad::adaptive<double>(sigma, cuts[i], cuts[i + 1], cfg.rel_tol, 0.0,
                                          cfg.max_subdivisions);
        if (!res.converged)
            throw NumericError("f_sum_check: quadrature did not converge; error estimate " +
                               std::to_string(res.error));
        total += res.value;
    }
    // sigma_abs -> 6 pi lb0^2 Gamma Gamma_t / w^2 for w >> omega0, Gamma_t.
    const double tail = 6.0 * M_PI * lb0 * lb0 * split.gamma_rad * gt / lambda;
    total += tail;

    const double analytic =
        M_PI * consts.e * consts.e / (2.0 * consts.eps0 * consts.c * consts.m_e);
    return {total, analytic, std::abs(total - analytic) / analytic};
}

double gamma_abs(double omega, double E0, double chi_im, const PhysicalConstants& consts) {
    if (omega <= 0.0) return 0.0;
    return chi_im * consts.e * consts.e * E0 * E0 / (2.0 * consts.hbar);
}

const char* to_string(ScatterRegime regime) {
    switch (regime) {
        case ScatterRegime::Rayleigh: return "rayleigh";
        case ScatterRegime::Resonant: return "resonant";
        case ScatterRegime::Thomson: return "thomson";
        default: return "unlabeled";
    }
}

SigmaScatter sigma_sc(double omega, double omega0, const DampingSplit& split,
                      const PhysicalConstants& consts) {
    require(omega0 > 0.0, "sigma_sc: omega0 must be > 0");
    const double w2 = omega * omega;
    const double value = (8.0 * M_PI / 3.0) * consts.R * consts.R * w2 * w2 /
                         lorentz_denominator(omega, omega0, split.gamma_total);
    ScatterRegime regime = ScatterRegime::Unlabeled;
    const double aw = std::abs(omega);
    if (aw < 0.1 * omega0)
        regime = ScatterRegime::Rayleigh;
    else if (std::abs(aw - omega0) < 10.0 * split.gamma_total)
        regime = ScatterRegime::Resonant;
    else if (aw > 10.0 * omega0)
        regime = ScatterRegime::Thomson;
    return {value, regime};
}

ResonantDecomposition resonant_decomposition(double omega, double omega0,
                                             const DampingSplit& split,
                                             const PhysicalConstants& consts) {
    const double lb0 = consts.lambdabar(omega0);
    const double d = omega - omega0;
    const double denom = d * d + 0.25 * split.gamma_total * split.gamma_total;
    const double pref = 6.0 * M_PI * lb0 * lb0 / 4.0 / denom;
    const double g = split.gamma_rad;
    ResonantDecomposition out{};
    out.sigma_sc_l = pref * g * g;
    out.sigma_r_l = pref * g * split.gamma_prime;
    out.sigma_abs_l = pref * g * split.gamma_total;
    out.in_resonant_range = std::abs(d) < 0.1 * omega0;
    return out;
}

DipoleRatio dipole_potential_and_ratio(double omega, double E0,
                                       const oscillator::OscillatorParams& p,
                                       const PhysicalConstants& consts) {
    require(omega >= 0.0, "dipole_potential_and_ratio: omega must be >= 0");
    const auto [re, im] = oscillator::susceptibility(p, omega);
    (void)im;
    DipoleRatio out{};
    out.u_dip = -re * consts.e * consts.e * E0 * E0 / 4.0;
    out.at_pole = omega == p.omega;
    const double det = (omega - p.omega) * (omega + p.omega);
    out.ratio = out.at_pole ? std::numeric_limits<double>::infinity()
                            : 2.0 * omega * p.gamma / det;
    out.ratio_low_freq = -2.0 * omega * p.gamma / (p.omega * p.omega);
    out.ratio_detuned = out.at_pole ? std::numeric_limits<double>::infinity()
                                    : p.gamma / (omega - p.omega);
    return out;
}

} // namespace oscilkit::xsec
