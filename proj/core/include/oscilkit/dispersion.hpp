#pragma once

#include <complex>
#include <functional>
#include <vector>

namespace oscilkit::dispersion {

/// Controls for the principal-value and Fourier-Laplace quadratures.
/// Zero-valued excision_halfwidth/truncation select scale-aware defaults
/// (delta = 0.5*max(1,|omega|), Lambda = 100*max(1,|omega|)).
struct QuadratureConfig {
    double excision_halfwidth = 0.0;  // PV window half-width delta
    double truncation = 0.0;          // grid cutoff Lambda
    double rel_tol = 1e-8;
    int max_subdivisions = 4000;

    void validate() const;  // throws std::invalid_argument
};

/// Spectral data on a strictly increasing frequency grid.
struct SampledSpectrum {
    std::vector<double> grid;
    std::vector<std::complex<double>> values;

    void validate() const;
};

struct KKReport {
    double max_abs_dev = 0.0;
    double max_rel_dev = 0.0;   // normalized by max_i |re_part(omega_i)|
    double worst_omega = 0.0;
    bool passed = false;
};

/// (1/pi) PV int spectral(w)/(w - omega) dw over [-Lambda, Lambda], by
/// singularity subtraction on [omega - delta, omega + delta] (smooth integrand
/// plus the exact log term) and adaptive panels outside. The analytic O(1/Lambda)
/// tail bound is folded into the convergence check. Throws NumericError when
/// the error estimate cannot be brought under tolerance.
double kk_transform(const std::function<double(double)>& spectral, double omega,
                    const QuadratureConfig& cfg);

/// Transform of sampled data: a monotone local cubic (Steffen) interpolant is
/// transformed; the interpolation-error estimate is reported separately.
struct SampledTransformResult {
    std::complex<double> value;
    double interp_error_estimate;
};
SampledTransformResult kk_transform(const SampledSpectrum& spectral, double omega,
                                    const QuadratureConfig& cfg);

/// Checks the dispersion relation re_part(omega) = (1/pi) PV int im_part/(w-omega)
/// over the given grid. passed <=> max_rel_dev <= threshold.
KKReport kk_check(const std::function<double(double)>& re_part,
                  const std::function<double(double)>& im_part,
                  const std::vector<double>& grid, const QuadratureConfig& cfg,
                  double threshold);

/// Fourier-Laplace transform f~(z) = i s int_0^{s inf} e^{itz} f(t) dt,
/// s = sign Im[z]. Integration marches in panels until the exponential-decay
/// remainder bound falls under tolerance. Throws std::domain_error for real z
/// and NumericError when the bound cannot be met.
std::complex<double> numeric_flt(const std::function<std::complex<double>(double)>& f,
                                 std::complex<double> z, const QuadratureConfig& cfg);
std::complex<double> numeric_flt(const std::function<double(double)>& f,
                                 std::complex<double> z, const QuadratureConfig& cfg);

/// Boundary value f~(omega + i s 0) via numeric_flt at eta, eta/2, eta/4 and
/// third-order Richardson extrapolation in the offset.
std::complex<double> flt_boundary(const std::function<std::complex<double>(double)>& f,
                                  double omega, int s, const QuadratureConfig& cfg,
                                  double eta = 1e-2);

/// Monotone local cubic interpolant (Steffen). Local, C^1, overshoot-free.
class SteffenInterpolant {
public:
    SteffenInterpolant(std::vector<double> x, std::vector<double> y);

    double operator()(double x) const;  // clamps to the boundary values outside
    double min_x() const { return x_.front(); }
    double max_x() const { return x_.back(); }

private:
    std::vector<double> x_, y_, slopes_;
};

} // namespace oscilkit::dispersion
