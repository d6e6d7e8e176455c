#include "oscilkit/ode.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <stdexcept>

namespace oscilkit::ode {

namespace {

void require(bool ok, const char* msg) {
    if (!ok) throw std::invalid_argument(msg);
}

// Dormand-Prince 5(4) tableau.
constexpr double kC[7] = {0.0, 1.0 / 5, 3.0 / 10, 4.0 / 5, 8.0 / 9, 1.0, 1.0};
constexpr double kA[7][6] = {
    {},
    {1.0 / 5},
    {3.0 / 40, 9.0 / 40},
    {44.0 / 45, -56.0 / 15, 32.0 / 9},
    {19372.0 / 6561, -25360.0 / 2187, 64448.0 / 6561, -212.0 / 729},
    {9017.0 / 3168, -355.0 / 33, 46732.0 / 5247, 49.0 / 176, -5103.0 / 18656},
    {35.0 / 384, 0.0, 500.0 / 1113, 125.0 / 192, -2187.0 / 6784, 11.0 / 84},
};
constexpr double kB5[7] = {35.0 / 384,      0.0,  500.0 / 1113, 125.0 / 192,
                           -2187.0 / 6784, 11.0 / 84, 0.0};
constexpr double kB4[7] = {5179.0 / 57600,  0.0,        7571.0 / 16695, 393.0 / 640,
                           -92097.0 / 339200, 187.0 / 2100, 1.0 / 40};

template <int N>
using State = std::array<double, N>;

template <int N>
struct StepResult {
    State<N> y;
    double err_norm;
};

template <int N, typename Rhs>
StepResult<N> dopri5_step(const Rhs& rhs, double t, const State<N>& y, double h,
                          double rel_tol, double abs_tol) {
    State<N> k[7];
    State<N> work;
    k[0] = rhs(t, y);
    for (int stage = 1; stage < 7; ++stage) {
        for (int i = 0; i < N; ++i) {
            double acc = 0.0;
            for (int m = 0; m < stage; ++m) acc += kA[stage][m] * k[m][i];
            work[i] = y[i] + h * acc;
        }
        k[stage] = rhs(t + kC[stage] * h, work);
    }
    State<N> y5;
    double err = 0.0;
    for (int i = 0; i < N; ++i) {
        double acc5 = 0.0;
        double acc4 = 0.0;
        for (int m = 0; m < 7; ++m) {
            acc5 += kB5[m] * k[m][i];
            acc4 += kB4[m] * k[m][i];
        }
        y5[i] = y[i] + h * acc5;
        const double scale = abs_tol + rel_tol * std::max(std::abs(y[i]), std::abs(y5[i]));
        const double e = h * (acc5 - acc4) / scale;
        err += e * e;
    }
    return {y5, std::sqrt(err / N)};
}

template <int N, typename Rhs, typename Record, typename Stop>
void dopri5_drive(const Rhs& rhs, State<N> y, double t0, double t1,
                  const IntegratorConfig& cfg, double max_step, const Record& record,
                  const Stop& stop, bool* exhausted) {
    const double dir = t1 >= t0 ? 1.0 : -1.0;
    double t = t0;
    double h = dir * std::min(max_step, std::abs(t1 - t0) / 16.0 + 1e-300);
    record(t, y);
    long steps = 0;
    while (dir * (t1 - t) > 0.0) {
        if (steps++ >= cfg.max_steps) {
            if (exhausted) *exhausted = true;
            return;
        }
        if (dir * (t + h - t1) > 0.0) h = t1 - t;
        const auto trial = dopri5_step<N>(rhs, t, y, h, cfg.rel_tol, cfg.abs_tol);
        if (trial.err_norm <= 1.0) {
            t += h;
            y = trial.y;
            record(t, y);
            if (stop(t, y)) return;
        }
        const double factor =
            trial.err_norm > 0.0
                ? std::clamp(0.9 * std::pow(trial.err_norm, -0.2), 0.2, 5.0)
                : 5.0;
        h *= factor;
        if (std::abs(h) > max_step) h = dir * max_step;
        if (t + h == t) {  // step underflow
            if (exhausted) *exhausted = true;
            return;
        }
    }
}

} // namespace

void IntegratorConfig::validate() const {
    require(rel_tol > 0.0 && rel_tol <= 1e-2, "IntegratorConfig: rel_tol in (0, 1e-2]");
    require(abs_tol > 0.0 && abs_tol <= 1e-2, "IntegratorConfig: abs_tol in (0, 1e-2]");
    require(max_step > 0.0, "IntegratorConfig: max_step must be > 0");
    require(max_steps > 0, "IntegratorConfig: max_steps must be > 0");
}

void Trajectory::write_csv(std::ostream& os) const {
    os << (dim == 3 ? "t,x,v,b\n" : "t,x,v\n");
    char buf[128];
    for (std::size_t i = 0; i < times.size(); ++i) {
        if (dim == 3) {
            std::snprintf(buf, sizeof buf, "%.17g,%.17g,%.17g,%.17g\n", times[i],
                          states[i][0], states[i][1], states[i][2]);
        } else {
            std::snprintf(buf, sizeof buf, "%.17g,%.17g,%.17g\n", times[i], states[i][0],
                          states[i][1]);
        }
        os << buf;
    }
}

Trajectory integrate_forced(const oscillator::OscillatorParams& p,
                            const std::function<double(double)>& force,
                            std::array<double, 2> init, std::pair<double, double> span,
                            const IntegratorConfig& cfg) {
    cfg.validate();
    Trajectory traj;
    traj.dim = 2;
    auto rhs = [&](double t, const State<2>& y) -> State<2> {
        const double f = force ? force(t) : 0.0;
        return {y[1], f / p.mass - p.gamma * y[1] - p.omega * p.omega * y[0]};
    };
    auto record = [&](double t, const State<2>& y) {
        traj.times.push_back(t);
        traj.states.push_back({y[0], y[1], 0.0});
    };
    auto stop = [](double, const State<2>&) { return false; };
    dopri5_drive<2>(rhs, {init[0], init[1]}, span.first, span.second, cfg, cfg.max_step,
                    record, stop, &traj.step_budget_exhausted);
    return traj;
}

Trajectory integrate_al(const al::ALParams& params,
                        const std::function<double(double)>& force,
                        const al::ALInitialState& init, std::pair<double, double> span,
                        const IntegratorConfig& cfg) {
    cfg.validate();
    Trajectory traj;
    traj.dim = 3;
    const double tau = params.tau;
    const double cutoff = 1e9 * (std::abs(init.x0) + 1.0);

    // Scaled time s = t/tau: ds steps of order one track the run-away mode.
    auto rhs = [&](double s, const State<3>& y) -> State<3> {
        const double t = s * tau;
        const double f = force ? force(t) : 0.0;
        return {tau * y[1], tau * y[2],
                y[2] + params.omega0 * params.omega0 * y[0] - f / params.mass};
    };
    auto record = [&](double s, const State<3>& y) {
        traj.times.push_back(s * tau);
        traj.states.push_back({y[0], y[1], y[2]});
    };
    auto stop = [&](double s, const State<3>& y) {
        if (std::abs(y[0]) > cutoff) {
            traj.diverged_at = s * tau;
            return true;
        }
        return false;
    };
    const double s0 = span.first / tau;
    const double s1 = span.second / tau;
    const double max_step_s = std::min(cfg.max_step / tau, 0.1);  // h <= tau/10
    dopri5_drive<3>(rhs, {init.x0, init.v0, init.b0}, s0, s1, cfg, max_step_s, record,
                    stop, &traj.step_budget_exhausted);
    return traj;
}

Trajectory rk4_fixed_al(const al::ALParams& params,
                        const std::function<double(double)>& force,
                        const al::ALInitialState& init, std::pair<double, double> span,
                        double step) {
    require(step > 0.0, "rk4_fixed_al: step must be > 0");
    Trajectory traj;
    traj.dim = 3;
    const double cutoff = 1e9 * (std::abs(init.x0) + 1.0);
    auto rhs = [&](double t, const State<3>& y) -> State<3> {
        const double f = force ? force(t) : 0.0;
        return {y[1], y[2],
                (y[2] + params.omega0 * params.omega0 * y[0] - f / params.mass) /
                    params.tau};
    };
    State<3> y = {init.x0, init.v0, init.b0};
    double t = span.first;
    traj.times.push_back(t);
    traj.states.push_back(y);
    while (t < span.second && !traj.diverged_at) {
        const double h = std::min(step, span.second - t);
        const auto k1 = rhs(t, y);
        State<3> tmp;
        for (int i = 0; i < 3; ++i) tmp[i] = y[i] + 0.5 * h * k1[i];
        const auto k2 = rhs(t + 0.5 * h, tmp);
        for (int i = 0; i < 3; ++i) tmp[i] = y[i] + 0.5 * h * k2[i];
        const auto k3 = rhs(t + 0.5 * h, tmp);
        for (int i = 0; i < 3; ++i) tmp[i] = y[i] + h * k3[i];
        const auto k4 = rhs(t + h, tmp);
        for (int i = 0; i < 3; ++i)
            y[i] += h / 6.0 * (k1[i] + 2.0 * k2[i] + 2.0 * k3[i] + k4[i]);
        t += h;
        traj.times.push_back(t);
        traj.states.push_back(y);
        if (!std::isfinite(y[0]) || std::abs(y[0]) > cutoff) traj.diverged_at = t;
    }
    return traj;
}

Deviation compare(const Trajectory& trajectory,
                  const std::function<double(double)>& analytic) {
    Deviation dev;
    double sup = 0.0;
    for (double t : trajectory.times) sup = std::max(sup, std::abs(analytic(t)));
    const double floor_ = std::max(1e-12 * sup, 1e-300);
    for (std::size_t i = 0; i < trajectory.times.size(); ++i) {
        const double ref = analytic(trajectory.times[i]);
        const double d = std::abs(trajectory.states[i][0] - ref);
        dev.max_abs = std::max(dev.max_abs, d);
        dev.max_rel = std::max(dev.max_rel, d / std::max(std::abs(ref), floor_));
    }
    return dev;
}

double fitted_growth_rate(const Trajectory& trajectory, double t_lo, double t_hi) {
    double sx = 0.0, sy = 0.0, sxx = 0.0, sxy = 0.0;
    long n = 0;
    for (std::size_t i = 0; i < trajectory.times.size(); ++i) {
        const double t = trajectory.times[i];
        const double x = std::abs(trajectory.states[i][0]);
        if (t < t_lo || t > t_hi || x <= 0.0) continue;
        const double ly = std::log(x);
        sx += t;
        sy += ly;
        sxx += t * t;
        sxy += t * ly;
        ++n;
    }
    require(n >= 2, "fitted_growth_rate: window contains fewer than two samples");
    const double denom = n * sxx - sx * sx;
    require(denom != 0.0, "fitted_growth_rate: degenerate window");
    return (n * sxy - sx * sy) / denom;
}

} // namespace oscilkit::ode
