#pragma once

#include <array>
#include <functional>
#include <optional>
#include <ostream>
#include <utility>
#include <vector>

#include "oscilkit/abraham_lorentz.hpp"
#include "oscilkit/oscillator.hpp"

namespace oscilkit::ode {

struct IntegratorConfig {
    double rel_tol = 1e-9;
    double abs_tol = 1e-12;
    double max_step = 1e30;
    long max_steps = 2'000'000;

    void validate() const;  // rel_tol, abs_tol in (0, 1e-2]
};

/// Accepted-step record of an adaptive integration. states[i] holds
/// (x, v[, b]); dim is 2 for the forced oscillator, 3 for the AL equation.
struct Trajectory {
    std::vector<double> times;
    std::vector<std::array<double, 3>> states;
    int dim = 2;
    std::optional<double> diverged_at;
    bool step_budget_exhausted = false;

    /// CSV export: header t,x,v[,b], one row per step, 17 significant digits.
    void write_csv(std::ostream& os) const;
};

/// Dormand-Prince 5(4) embedded pair for x'' + Gamma x' + Omega^2 x = f/m.
Trajectory integrate_forced(const oscillator::OscillatorParams& p,
                            const std::function<double(double)>& force,
                            std::array<double, 2> init, std::pair<double, double> span,
                            const IntegratorConfig& cfg);

/// Same integrator for the AL system (x, v, b) with b' = (b + omega0^2 x - f/m)/tau,
/// stepped in scaled time s = t/tau (the run-away rate zeta2 ~ 1/tau sets the
/// step scale) and capped at tau/10. A divergence cutoff |x| > 1e9 (|x0|+1)
/// ends the run with diverged_at set; that is a reported outcome, not an error.
Trajectory integrate_al(const al::ALParams& params,
                        const std::function<double(double)>& force,
                        const al::ALInitialState& init, std::pair<double, double> span,
                        const IntegratorConfig& cfg);

/// Fixed-step classical RK4 on the AL system, no error control. Exists to
/// demonstrate that explicit stepping with h > tau is unstable.
Trajectory rk4_fixed_al(const al::ALParams& params,
                        const std::function<double(double)>& force,
                        const al::ALInitialState& init, std::pair<double, double> span,
                        double step);

struct Deviation {
    double max_abs = 0.0;
    double max_rel = 0.0;  // |dev| / max(|analytic(t_i)|, 1e-12 * sup|analytic|)
};

/// Pointwise deviation of the trajectory elongation from an analytic solution.
Deviation compare(const Trajectory& trajectory,
                  const std::function<double(double)>& analytic);

/// Least-squares slope of log|x(t)| over the window [t_lo, t_hi]; the fitted
/// growth rate of a run-away segment.
double fitted_growth_rate(const Trajectory& trajectory, double t_lo, double t_hi);

} // namespace oscilkit::ode
