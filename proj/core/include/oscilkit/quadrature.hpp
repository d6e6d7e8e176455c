#pragma once

#include <algorithm>
#include <cmath>
#include <complex>
#include <cstddef>
#include <string>
#include <vector>

#include "oscilkit/errors.hpp"

namespace oscilkit::quad {

// Gauss-Kronrod 7-15 nodes/weights on [-1,1] (QUADPACK values).
// kNodes[0..6] are the positive Kronrod abscissae, kNodes[7] = 0 is the centre.
// The embedded Gauss-7 rule uses the odd-index abscissae plus the centre.
inline constexpr double kNodes[8] = {
    0.991455371120813, 0.949107912342759, 0.864864423359769, 0.741531185599394,
    0.586087235467691, 0.405845151377397, 0.207784955007898, 0.0};
inline constexpr double kWeightsK15[8] = {
    0.022935322010529, 0.063092092629979, 0.104790010322250, 0.140653259715525,
    0.169004726639267, 0.190350578064785, 0.204432940075298, 0.209482141084728};
inline constexpr double kWeightsG7[4] = {
    0.129484966168870, 0.279705391489277, 0.381830050505119, 0.417959183673469};

template <typename Value>
struct Panel {
    double a = 0.0;
    double b = 0.0;
    Value value{};
    double error = 0.0;
};

template <typename Value, typename F>
Panel<Value> evaluate_panel(const F& f, double a, double b) {
    const double mid = 0.5 * (a + b);
    const double half = 0.5 * (b - a);
    Value k15{};
    Value g7{};
    for (int i = 0; i < 7; ++i) {
        const double dx = half * kNodes[i];
        const Value fsum = f(mid - dx) + f(mid + dx);
        k15 += kWeightsK15[i] * fsum;
        if (i % 2 == 1) g7 += kWeightsG7[i / 2] * fsum;
    }
    const Value fc = f(mid);
    k15 += kWeightsK15[7] * fc;
    g7 += kWeightsG7[3] * fc;
    k15 *= half;
    g7 *= half;
    return {a, b, k15, std::abs(k15 - g7)};
}

template <typename Value>
struct AdaptiveResult {
    Value value{};
    double error = 0.0;
    int panels = 0;
    bool converged = true;
};

/// Globally adaptive G7/K15 on [a,b]: repeatedly bisects the worst panel until
/// the summed error estimate meets max(abs_tol, rel_tol*|I|) or the panel
/// budget is exhausted. Deterministic: worst-panel ties resolved leftmost and
/// the final sum is taken in ascending interval order.
template <typename Value, typename F>
AdaptiveResult<Value> adaptive(const F& f, double a, double b, double rel_tol,
                               double abs_tol, int max_panels) {
    AdaptiveResult<Value> out;
    if (a == b) return out;

    std::vector<Panel<Value>> panels;
    panels.reserve(64);
    panels.push_back(evaluate_panel<Value>(f, a, b));

    auto total = [&panels] {
        Value v{};
        double e = 0.0;
        for (const auto& p : panels) {
            v += p.value;
            e += p.error;
        }
        return std::pair<Value, double>(v, e);
    };

    while (true) {
        auto [value, error] = total();
        const double target = std::max(abs_tol, rel_tol * std::abs(value));
        if (error <= target) break;
        if (static_cast<int>(panels.size()) >= max_panels) {
            out.converged = false;
            break;
        }
        std::size_t worst = 0;
        for (std::size_t i = 1; i < panels.size(); ++i)
            if (panels[i].error > panels[worst].error) worst = i;
        const Panel<Value> p = panels[worst];
        const double mid = 0.5 * (p.a + p.b);
        if (mid <= p.a || mid >= p.b) {  // interval below double resolution
            out.converged = false;
            break;
        }
        panels[worst] = evaluate_panel<Value>(f, p.a, mid);
        panels.push_back(evaluate_panel<Value>(f, mid, p.b));
    }

    std::sort(panels.begin(), panels.end(),
              [](const auto& x, const auto& y) { return x.a < y.a; });
    Value v{};
    double e = 0.0;
    for (const auto& p : panels) {
        v += p.value;
        e += p.error;
    }
    out.value = v;
    out.error = e;
    out.panels = static_cast<int>(panels.size());
    return out;
}

template <typename F>
AdaptiveResult<double> integrate(const F& f, double a, double b, double rel_tol,
                                 double abs_tol, int max_panels) {
    return adaptive<double>(f, a, b, rel_tol, abs_tol, max_panels);
}

template <typename F>
AdaptiveResult<std::complex<double>> integrate_complex(const F& f, double a, double b,
                                                       double rel_tol, double abs_tol,
                                                       int max_panels) {
    return adaptive<std::complex<double>>(f, a, b, rel_tol, abs_tol, max_panels);
}

template <typename F>
AdaptiveResult<double> integrate_or_throw(const F& f, double a, double b, double rel_tol,
                                          double abs_tol, int max_panels,
                                          const std::string& context) {
    auto res = adaptive<double>(f, a, b, rel_tol, abs_tol, max_panels);
    if (!res.converged) {
        throw NumericError(context + ": quadrature did not converge on [" +
                           std::to_string(a) + ", " + std::to_string(b) +
                           "]; achieved error estimate " + std::to_string(res.error) +
                           " with " + std::to_string(res.panels) + " panels");
    }
    return res;
}

} // namespace oscilkit::quad
