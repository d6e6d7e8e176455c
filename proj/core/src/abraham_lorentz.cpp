#include "oscilkit/abraham_lorentz.hpp"

#include <cmath>
#include <limits>
#include <sstream>
#include <stdexcept>

#include "oscilkit/errors.hpp"
#include "oscilkit/quadrature.hpp"

namespace oscilkit::al {

namespace {

void require(bool ok, const char* msg) {
    if (!ok) throw std::invalid_argument(msg);
}

constexpr double kSeriesSwitch = 1e-4;   // below: series; closed form loses (w-1)^2 digits
constexpr double kNewtonSwitch = 1e-2;   // below: polish the closed form
constexpr double kGrowthGuard = 700.0;   // exp() overflow guard on zeta2*(t-t0)

// The cubic in u equivalent to p(1/tau - 2u) = 0; free of the 1/tau - zeta2
// cancellation, so Newton on it is well conditioned down to u -> 0-.
double cubic_in_u(double u, double tau, double omega0) {
    return ((8.0 * tau * tau * u - 8.0 * tau) * u + 2.0) * u + tau * omega0 * omega0;
}

double cubic_in_u_deriv(double u, double tau) {
    return (24.0 * tau * tau * u - 16.0 * tau) * u + 2.0;
}

double rel_residual(std::complex<double> zeta, double tau, double omega0) {
    const std::complex<double> z2 = zeta * zeta;
    const std::complex<double> tz3 = tau * z2 * zeta;
    const double num = std::abs(z2 - tz3 + omega0 * omega0);
    const double scale = std::abs(z2) + std::abs(tz3) + omega0 * omega0;
    return num / scale;
}

} // namespace

ALParams::ALParams(double mass_, double tau_, double omega0_)
    : mass(mass_), tau(tau_), omega0(omega0_) {
    require(std::isfinite(mass) && mass > 0.0, "ALParams: mass must be > 0");
    require(std::isfinite(tau) && tau > 0.0, "ALParams: tau must be > 0");
    require(std::isfinite(omega0) && omega0 > 0.0, "ALParams: omega0 must be > 0");
    require(std::isfinite(tau * omega0), "ALParams: tau*omega0 must be finite");
}

ALInitialState::ALInitialState(double x0_, double v0_, double b0_)
    : x0(x0_), v0(v0_), b0(b0_) {
    require(std::isfinite(x0) && std::isfinite(v0) && std::isfinite(b0),
            "ALInitialState: values must be finite");
}

namespace detail {

std::pair<double, double> roots_series(const ALParams& al) {
    const double eps = al.tau * al.omega0;
    const double e2 = eps * eps;
    // u/omega0 = -eps/2 [1 - 2 eps^2 + 7 eps^4 - O(eps^6)]; the eps^4 term
    // extends the leading asymptote by one order.
    const double u = -0.5 * al.tau * al.omega0 * al.omega0 * (1.0 - 2.0 * e2 + 7.0 * e2 * e2);
    // v from the exact Vieta consequence v^2 = 3u^2 - 2u/tau (both terms positive).
    const double v = std::sqrt(3.0 * u * u - 2.0 * u / al.tau);
    return {u, v};
}

std::pair<double, double> roots_closed(const ALParams& al, bool newton_polish) {
    const double eps = al.tau * al.omega0;
    // Rationalized bracket of the cube root: with S = sqrt(12 + 81 eps^2),
    //   1 + (3/2) eps (9 eps - S) = 12 / (9 eps + S)^2,
    // exact and positive for all eps, so no clamping is ever needed.
    const double s = std::sqrt(12.0 + 81.0 * eps * eps);
    const double bracket = 12.0 / ((9.0 * eps + s) * (9.0 * eps + s));
    const double w = std::cbrt(bracket);
    double u = -(w - 1.0) * (w - 1.0) / (6.0 * al.tau * w);
    if (newton_polish) {
        const double g = cubic_in_u(u, al.tau, al.omega0);
        const double gp = cubic_in_u_deriv(u, al.tau);
        if (gp != 0.0) u -= g / gp;
        if (u > 0.0) u = 0.0;
    }
    const double v = std::sqrt(3.0 * u * u - 2.0 * u / al.tau);
    return {u, v};
}

} // namespace detail

ALRoots char_roots(const ALParams& al) {
    const double eps = al.tau * al.omega0;
    double u = 0.0;
    double v = 0.0;
    double w = 0.0;
    if (eps < kSeriesSwitch) {
        std::tie(u, v) = detail::roots_series(al);
        // w consistent with u: the (0,1] root of w^2 - (2 - 6 tau u) w + 1 = 0.
        const double h = 1.0 - 3.0 * al.tau * u;
        w = h - std::sqrt(h * h - 1.0);
    } else {
        std::tie(u, v) = detail::roots_closed(al, /*newton_polish=*/eps <= kNewtonSwitch);
        const double ssq = std::sqrt(12.0 + 81.0 * eps * eps);
        w = std::cbrt(12.0 / ((9.0 * eps + ssq) * (9.0 * eps + ssq)));
    }

    ALRoots roots;
    roots.w = w;
    roots.u = u;
    roots.v = v;
    roots.zeta1 = {u, v};
    roots.zeta2 = 1.0 / al.tau - 2.0 * u;
    roots.zeta3 = {u, -v};

    double worst = rel_residual(roots.zeta1, al.tau, al.omega0);
    worst = std::max(worst, rel_residual(roots.zeta2, al.tau, al.omega0));
    worst = std::max(worst, rel_residual(roots.zeta3, al.tau, al.omega0));
    roots.max_rel_residual = worst;

    if (!std::isfinite(worst) || worst > 1e-10 || !std::isfinite(roots.zeta2)) {
        std::ostringstream msg;
        msg << "char_roots: cubic residual " << worst << " out of bounds at tau*omega0 = "
            << eps << " (u = " << u << ", v = " << v << ", zeta2 = " << roots.zeta2 << ")";
        throw NumericError(msg.str());
    }
    return roots;
}

EffectiveOscillator effective_oscillator(const ALParams& al) {
    const ALRoots roots = char_roots(al);
    const double gamma = -2.0 * roots.u;
    const double omega = std::hypot(roots.u, roots.v);
    const double eps = al.tau * al.omega0;
    double dgamma = 0.0;
    double domega2 = 0.0;
    if (eps < kSeriesSwitch) {
        const double e2 = eps * eps;
        dgamma = -al.tau * al.omega0 * al.omega0 * e2 * (2.0 - 7.0 * e2);
        domega2 = -al.omega0 * al.omega0 * e2 * (1.0 - 3.0 * e2);
    } else {
        dgamma = gamma - al.tau * al.omega0 * al.omega0;
        domega2 = gamma * gamma + dgamma / al.tau;  // Omega^2 - omega0^2 via Vieta
    }
    return {oscillator::OscillatorParams(al.mass, omega, gamma), roots.v, domega2, dgamma};
}

std::pair<double, double> effective_series(const ALParams& al) {
    const double e2 = al.tau * al.omega0 * al.tau * al.omega0;
    const double gamma_series = al.tau * al.omega0 * al.omega0 * (1.0 - 2.0 * e2);
    const double omega_series = al.omega0 * (1.0 - 0.5 * e2);
    return {gamma_series, omega_series};
}

namespace {

struct HomogeneousParts {
    oscillator::OscillatorParams osc;
    double zeta2;
    double coeff;   // tau^2 / (1 + 4 Omega~^2 tau^2)
};

HomogeneousParts homogeneous_parts(const ALParams& al) {
    const EffectiveOscillator eff = effective_oscillator(al);
    const double zeta2 = eff.params.gamma + 1.0 / al.tau;
    const double vt = eff.omega_tilde * al.tau;
    return {eff.params, zeta2, al.tau * al.tau / (1.0 + 4.0 * vt * vt)};
}

// Bracket of Eqs. (A2)/(A3): -e^{zeta2 t} + phi(t) + zeta2 * C(t).
double runaway_bracket(const HomogeneousParts& hp, double t) {
    return -std::exp(hp.zeta2 * t) + oscillator::relaxation(hp.osc, t) +
           hp.zeta2 * oscillator::response_kernel(hp.osc, t);
}

void check_growth_guard(double zeta2, double dt) {
    if (zeta2 * dt > kGrowthGuard) {
        std::ostringstream msg;
        msg << "unique_solution: zeta2*(t-t0) = " << zeta2 * dt
            << " exceeds the overflow guard " << kGrowthGuard
            << "; use the ODE integrator for longer horizons";
        throw std::range_error(msg.str());
    }
}

double homogeneous_solution(const HomogeneousParts& hp, const ALInitialState& init,
                            double dt) {
    const double manifold = init.b0 + hp.osc.gamma * init.v0 +
                            hp.osc.omega * hp.osc.omega * init.x0;
    return oscillator::relaxation(hp.osc, dt) * init.x0 +
           oscillator::response_kernel(hp.osc, dt) * init.v0 -
           manifold * hp.coeff * runaway_bracket(hp, dt);
}

} // namespace

double unique_solution(const ALParams& al, const ALInitialState& init,
                       const std::function<double(double)>& force, double t, double t0) {
    require(t >= t0, "unique_solution: t must be >= t0");
    const HomogeneousParts hp = homogeneous_parts(al);
    const double dt = t - t0;
    check_growth_guard(hp.zeta2, dt);

    const double xh = homogeneous_solution(hp, init, dt);
    if (!force) return xh;

    // x_p = int_0^dt bracket(t') * tau f(t - t') / ((1 + 4 v^2 tau^2) m) dt'
    // and coeff = tau^2/(1 + 4 v^2 tau^2), so the prefactor is coeff/(tau m).
    const double prefactor = hp.coeff / (al.tau * al.mass);
    auto integrand = [&](double tp) { return runaway_bracket(hp, tp) * prefactor * force(t - tp); };
    auto res = quad::adaptive<double>(integrand, 0.0, dt, 1e-10, 1e-13, 4000);
    if (!res.converged) {
        std::ostringstream msg;
        msg << "unique_solution: particular-integral quadrature did not converge"
            << " (error estimate " << res.error << ")";
        throw NumericError(msg.str());
    }
    return xh + res.value;
}

double unique_solution(const ALParams& al, const ALInitialState& init, double t,
                       double t0) {
    return unique_solution(al, init, std::function<double(double)>(), t, t0);
}

double unique_solution(const ALParams& al, const ALInitialState& init,
                       const oscillator::DriveField& drive, double t, double t0) {
    require(t >= t0, "unique_solution: t must be >= t0");
    const HomogeneousParts hp = homogeneous_parts(al);
    const double dt = t - t0;
    check_growth_guard(hp.zeta2, dt);

    // The particular integral against f(t - t') = f0 cos(omega (t - t')) is a
    // sum of three elementary integrals of e^{a t'} cos(omega(t - t')); each is
    // Re[ e^{-i omega t} (e^{(a + i omega) dt} - 1)/(a + i omega) ].
    using cplx = std::complex<double>;
    const double gamma = hp.osc.gamma;
    // Omega~^2 = Omega^2 - Gamma^2/4 = Gamma/tau + 3 Gamma^2/4 > 0 for the AL
    // effective oscillator, so the conjugate-pair decomposition never degenerates.
    const double omt = std::sqrt(hp.osc.omega * hp.osc.omega - 0.25 * gamma * gamma);
    const cplx iw(0.0, drive.omega);

    auto exp_cos_integral = [&](cplx a) -> cplx {
        const cplx q = a + iw;
        if (std::abs(q) < 1e-300) return cplx(dt, 0.0);
        return (std::exp(q * dt) - 1.0) / q;
    };

    // phi(t') + zeta2 C(t') decomposes into e^{(-Gamma/2 +- i Omega~) t'} with
    // coefficients (1 -+ i (Gamma/2 + zeta2)/Omega~)/2.
    const cplx lam_p(-0.5 * gamma, omt);
    const cplx lam_m(-0.5 * gamma, -omt);
    const cplx cp = 0.5 * cplx(1.0, -(0.5 * gamma + hp.zeta2) / omt);
    const cplx cm = 0.5 * cplx(1.0, (0.5 * gamma + hp.zeta2) / omt);

    const cplx total = -exp_cos_integral(cplx(hp.zeta2, 0.0)) + cp * exp_cos_integral(lam_p) +
                       cm * exp_cos_integral(lam_m);
    const double prefactor = hp.coeff / (al.tau * al.mass) * drive.f0;
    const double xp = prefactor * std::real(std::exp(-iw * t) * total);
    return homogeneous_solution(hp, init, dt) + xp;
}

BoundedCondition bounded_condition(const ALParams& al, const ALInitialState& state,
                                   double tol) {
    const EffectiveOscillator eff = effective_oscillator(al);
    const double gamma = eff.params.gamma;
    const double om2 = eff.params.omega * eff.params.omega;
    const double residual = state.b0 + gamma * state.v0 + om2 * state.x0;
    const double scale = std::abs(state.b0) + gamma * std::abs(state.v0) +
                         om2 * std::abs(state.x0) + 1e-300;
    return {residual, std::abs(residual) <= tol * scale};
}

double oscillatory_particular(const ALParams& al, const oscillator::DriveField& drive,
                              double t) {
    const double om = drive.omega;
    const double det = al.omega0 * al.omega0 - om * om;
    const double tw3 = al.tau * om * om * om;
    const double denom = det * det + tw3 * tw3;
    return (det * std::cos(om * t) + tw3 * std::sin(om * t)) / denom * drive.f0 / al.mass;
}

std::complex<double> faulty_susceptibility(const ALParams& al, double omega) {
    const double om02 = al.omega0 * al.omega0;
    const double x0 = 1.0 / (al.mass * om02);
    const std::complex<double> denom(om02 - omega * omega, -al.tau * omega * omega * omega);
    return om02 * x0 / denom;
}

std::pair<double, double> lorentz_susceptibility(const ALParams& al, double omega) {
    const EffectiveOscillator eff = effective_oscillator(al);
    // Omega^2 - omega^2 = (omega0 - omega)(omega0 + omega) + delta_omega2:
    // the small shift delta_omega2 ~ -(tau omega0)^2 omega0^2 survives even
    // when omega0^2 - omega^2 underflows against it.
    const double det = (al.omega0 - omega) * (al.omega0 + omega) + eff.delta_omega2;
    const double og = omega * eff.params.gamma;
    const double denom = det * det + og * og;
    return {det / (al.mass * denom), og / (al.mass * denom)};
}

ErrorRatios susceptibility_error_ratios(const ALParams& al, double omega, double margin) {
    const EffectiveOscillator eff = effective_oscillator(al);
    const double a = (al.omega0 - omega) * (al.omega0 + omega);  // omega0^2 - omega^2
    const double det_chi = a + eff.delta_omega2;                 // Omega^2 - omega^2
    const double gamma = eff.params.gamma;
    const double tw3 = al.tau * omega * omega * omega;
    const double d_chi = det_chi * det_chi + omega * omega * gamma * gamma;
    const double d_x = a * a + tw3 * tw3;

    ErrorRatios out{};
    out.re_pole = det_chi == 0.0;
    // chi'' vanishes only at omega = 0, where Im X vanishes as well; the
    // rearranged ratio (tau omega^2/Gamma)(d_chi/d_x) carries the analytic
    // cancellation, so no 0/0 arises (Gamma > 0 for every valid ALParams).
    out.im_pole = false;
    out.re_ratio = out.re_pole ? std::numeric_limits<double>::infinity()
                               : a * d_chi / (det_chi * d_x);
    out.im_ratio = (al.tau * omega * omega / gamma) * (d_chi / d_x);

    const double eps2 = al.tau * al.omega0 * al.tau * al.omega0;
    const double detuning = std::abs(1.0 - omega * omega / (al.omega0 * al.omega0));
    out.in_validity_range = detuning * margin <= 1.0 && detuning >= margin * eps2;
    return out;
}

} // namespace oscilkit::al
