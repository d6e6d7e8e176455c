#include "oscilkit/dispersion.hpp"

#include <algorithm>
#include <cmath>
#include <sstream>
#include <stdexcept>

#include "oscilkit/errors.hpp"
#include "oscilkit/quadrature.hpp"

namespace oscilkit::dispersion {

namespace {

void require(bool ok, const char* msg) {
    if (!ok) throw std::invalid_argument(msg);
}

struct PvWindow {
    double lambda;
    double delta;
};

PvWindow resolve_window(double omega, const QuadratureConfig& cfg) {
    const double scale = std::max(1.0, std::abs(omega));
    double lambda = cfg.truncation > 0.0 ? cfg.truncation : 100.0 * scale;
    if (lambda <= std::abs(omega))
        throw std::invalid_argument("kk_transform: truncation must exceed |omega|");
    double delta = cfg.excision_halfwidth > 0.0 ? cfg.excision_halfwidth : 0.5 * scale;
    delta = std::min(delta, 0.45 * (lambda - std::abs(omega)));
    return {lambda, delta};
}

} // namespace

void QuadratureConfig::validate() const {
    require(rel_tol > 0.0 && rel_tol <= 1e-2, "QuadratureConfig: rel_tol must be in (0, 1e-2]");
    require(max_subdivisions > 0, "QuadratureConfig: max_subdivisions must be positive");
    require(excision_halfwidth >= 0.0, "QuadratureConfig: excision_halfwidth must be >= 0");
    require(truncation >= 0.0, "QuadratureConfig: truncation must be >= 0");
}

void SampledSpectrum::validate() const {
    require(!grid.empty(), "SampledSpectrum: grid must be non-empty");
    require(grid.size() == values.size(), "SampledSpectrum: grid/values size mismatch");
    for (std::size_t i = 0; i + 1 < grid.size(); ++i)
        require(grid[i] < grid[i + 1], "SampledSpectrum: grid must be strictly increasing");
    for (double g : grid) require(std::isfinite(g), "SampledSpectrum: grid must be finite");
    for (const auto& v : values)
        require(std::isfinite(v.real()) && std::isfinite(v.imag()),
                "SampledSpectrum: values must be finite");
}

double kk_transform(const std::function<double(double)>& spectral, double omega,
                    const QuadratureConfig& cfg) {
    cfg.validate();
    const auto [lambda, delta] = resolve_window(omega, cfg);
    const double g_at = spectral(omega);
    const int budget = cfg.max_subdivisions;

    // Inner window: subtract the singular part; what remains is smooth with
    // value g'(omega) at the singular point. The PV of the subtracted term
    // over the symmetric window vanishes exactly (zero log term).
    auto inner_f = [&](double w) {
        const double d = w - omega;
        if (d == 0.0) return 0.0;  // removable point; the rule never lands exactly anyway
        return (spectral(w) - g_at) / d;
    };
    auto inner = quad::adaptive<double>(inner_f, omega - delta, omega + delta,
                                        cfg.rel_tol, 0.0, budget);

    auto outer_f = [&](double w) { return spectral(w) / (w - omega); };
    auto left = quad::adaptive<double>(outer_f, -lambda, omega - delta, cfg.rel_tol, 0.0, budget);
    auto right = quad::adaptive<double>(outer_f, omega + delta, lambda, cfg.rel_tol, 0.0, budget);

    const double value = (inner.value + left.value + right.value) / M_PI;
    if (!(inner.converged && left.converged && right.converged)) {
        // |g| = O(1/w) beyond Lambda: analytic tail bound ~ Lambda |g(L)| / (L - |omega|).
        const double tail = lambda *
                            (std::abs(spectral(lambda)) + std::abs(spectral(-lambda))) /
                            std::max(lambda - std::abs(omega), 0.5 * lambda);
        const double err = (inner.error + left.error + right.error + tail) / M_PI;
        std::ostringstream msg;
        msg << "kk_transform: quadrature did not converge at omega = " << omega
            << "; achieved error estimate " << err;
        throw NumericError(msg.str());
    }
    return value;
}

SampledTransformResult kk_transform(const SampledSpectrum& spectral, double omega,
                                    const QuadratureConfig& cfg) {
    spectral.validate();
    std::vector<double> re(spectral.values.size());
    std::vector<double> im(spectral.values.size());
    for (std::size_t i = 0; i < spectral.values.size(); ++i) {
        re[i] = spectral.values[i].real();
        im[i] = spectral.values[i].imag();
    }
    SteffenInterpolant fre(spectral.grid, re);
    SteffenInterpolant fim(spectral.grid, im);

    QuadratureConfig local = cfg;
    if (local.truncation <= 0.0)
        local.truncation = std::max({std::abs(spectral.grid.front()),
                                     std::abs(spectral.grid.back()),
                                     100.0 * std::max(1.0, std::abs(omega))});

    // Outside the sampled range the interpolant clamps; treat the data as zero
    // there instead, so the transform sees only the sampled support.
    auto masked = [&](const SteffenInterpolant& f) {
        return [&f, &spectral](double w) {
            if (w < spectral.grid.front() || w > spectral.grid.back()) return 0.0;
            return f(w);
        };
    };

    const double vre = kk_transform(masked(fre), omega, local);
    const double vim = kk_transform(masked(fim), omega, local);

    // Interpolation-error estimate |f''| h^2 / 8; the second difference of the
    // samples is itself ~ f'' h^2.
    double est = 0.0;
    for (std::size_t i = 1; i + 1 < spectral.grid.size(); ++i) {
        const double d2 = std::abs(spectral.values[i + 1] - 2.0 * spectral.values[i] +
                                   spectral.values[i - 1]);
        est = std::max(est, 0.125 * d2);
    }
    return {{vre, vim}, est};
}

KKReport kk_check(const std::function<double(double)>& re_part,
                  const std::function<double(double)>& im_part,
                  const std::vector<double>& grid, const QuadratureConfig& cfg,
                  double threshold) {
    require(!grid.empty(), "kk_check: grid must be non-empty");
    KKReport report;
    double scale = 0.0;
    for (double w : grid) scale = std::max(scale, std::abs(re_part(w)));
    if (scale == 0.0) scale = 1.0;

    for (double w : grid) {
        const double dev = std::abs(re_part(w) - kk_transform(im_part, w, cfg));
        if (dev > report.max_abs_dev) {
            report.max_abs_dev = dev;
            report.worst_omega = w;
        }
    }
    report.max_rel_dev = report.max_abs_dev / scale;
    report.passed = report.max_rel_dev <= threshold;
    return report;
}

std::complex<double> numeric_flt(const std::function<std::complex<double>(double)>& f,
                                 std::complex<double> z, const QuadratureConfig& cfg) {
    cfg.validate();
    if (z.imag() == 0.0)
        throw std::domain_error("numeric_flt: Im[z] must be nonzero");
    const double s = z.imag() > 0.0 ? 1.0 : -1.0;
    const double decay = std::abs(z.imag());

    // f~(z) = i s int_0^inf e^{i s t' z} f(s t') dt' after substituting t = s t'.
    auto integrand = [&](double tp) -> std::complex<double> {
        const std::complex<double> phase = std::exp(std::complex<double>(0.0, 1.0) * (s * tp) * z);
        return phase * f(s * tp);
    };

    const double panel = 2.0 * M_PI / std::max(1.0, std::abs(z.real())) ;
    std::complex<double> acc{};
    double err = 0.0;
    double t0 = 0.0;
    int used = 0;
    double recent_max = 0.0;
    bool bounded = false;
    while (used < cfg.max_subdivisions) {
        const double t1 = t0 + panel;
        auto res = quad::adaptive<std::complex<double>>(integrand, t0, t1, cfg.rel_tol,
                                                        0.0, 64);
        acc += res.value;
        err += res.error;
        used += res.panels;
        // Envelope of |f| over the finished panel, for the remainder bound
        // |int_T^inf| <= M e^{-decay T}/decay (f keeps |f| <= M beyond T).
        recent_max = 0.0;
        for (int k = 0; k <= 8; ++k)
            recent_max = std::max(recent_max, std::abs(f(s * (t0 + panel * k / 8.0))));
        t0 = t1;
        const double remainder = recent_max * std::exp(-decay * t0) / decay;
        const double floor_ = std::max(std::abs(acc), 1e-30);
        if (remainder <= cfg.rel_tol * floor_ && err <= 10.0 * cfg.rel_tol * floor_) {
            bounded = true;
            break;
        }
    }
    if (!bounded) {
        std::ostringstream msg;
        msg << "numeric_flt: truncation bound not met by t = " << t0
            << " (remainder envelope " << recent_max * std::exp(-decay * t0) / decay
            << ", panel budget " << cfg.max_subdivisions << ")";
        throw NumericError(msg.str());
    }
    return std::complex<double>(0.0, s) * acc;
}

std::complex<double> numeric_flt(const std::function<double(double)>& f,
                                 std::complex<double> z, const QuadratureConfig& cfg) {
    return numeric_flt(
        std::function<std::complex<double>(double)>(
            [&f](double t) { return std::complex<double>(f(t), 0.0); }),
        z, cfg);
}

std::complex<double> flt_boundary(const std::function<std::complex<double>(double)>& f,
                                  double omega, int s, const QuadratureConfig& cfg,
                                  double eta) {
    require(s == 1 || s == -1, "flt_boundary: s must be +-1");
    require(eta > 0.0, "flt_boundary: eta must be > 0");
    const std::complex<double> i_eta(0.0, s * eta);
    const auto f1 = numeric_flt(f, std::complex<double>(omega, 0.0) + i_eta, cfg);
    const auto f2 = numeric_flt(f, std::complex<double>(omega, 0.0) + 0.5 * i_eta, cfg);
    const auto f4 = numeric_flt(f, std::complex<double>(omega, 0.0) + 0.25 * i_eta, cfg);
    return (8.0 * f4 - 6.0 * f2 + f1) / 3.0;  // kills the O(eta) and O(eta^2) terms
}

SteffenInterpolant::SteffenInterpolant(std::vector<double> x, std::vector<double> y)
    : x_(std::move(x)), y_(std::move(y)) {
    require(x_.size() >= 2, "SteffenInterpolant: need at least two points");
    require(x_.size() == y_.size(), "SteffenInterpolant: size mismatch");
    const std::size_t n = x_.size();
    slopes_.assign(n, 0.0);
    std::vector<double> h(n - 1), s(n - 1);
    for (std::size_t i = 0; i + 1 < n; ++i) {
        h[i] = x_[i + 1] - x_[i];
        require(h[i] > 0.0, "SteffenInterpolant: x must be strictly increasing");
        s[i] = (y_[i + 1] - y_[i]) / h[i];
    }
    slopes_[0] = s[0];
    slopes_[n - 1] = s[n - 2];
    for (std::size_t i = 1; i + 1 < n; ++i) {
        const double p = (s[i - 1] * h[i] + s[i] * h[i - 1]) / (h[i - 1] + h[i]);
        if (s[i - 1] * s[i] <= 0.0) {
            slopes_[i] = 0.0;
        } else {
            const double bound = 2.0 * std::min(std::abs(s[i - 1]), std::abs(s[i]));
            slopes_[i] = (std::abs(p) > bound) ? std::copysign(bound, s[i - 1]) : p;
        }
    }
}

double SteffenInterpolant::operator()(double x) const {
    if (x <= x_.front()) return y_.front();
    if (x >= x_.back()) return y_.back();
    const auto it = std::upper_bound(x_.begin(), x_.end(), x);
    const std::size_t i = static_cast<std::size_t>(it - x_.begin()) - 1;
    const double h = x_[i + 1] - x_[i];
    const double t = (x - x_[i]) / h;
    // Hermite basis on [x_i, x_{i+1}] with the limited slopes.
    const double t2 = t * t;
    const double t3 = t2 * t;
    const double h00 = 2.0 * t3 - 3.0 * t2 + 1.0;
    const double h10 = t3 - 2.0 * t2 + t;
    const double h01 = -2.0 * t3 + 3.0 * t2;
    const double h11 = t3 - t2;
    return h00 * y_[i] + h10 * h * slopes_[i] + h01 * y_[i + 1] + h11 * h * slopes_[i + 1];
}

} // namespace oscilkit::dispersion
