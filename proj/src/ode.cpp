#include "hwmc/ode.hpp"

#include <algorithm>
#include <limits>

namespace hwmc {

namespace {

// Dormand-Prince RK5(4)7M coefficients
constexpr double c2 = 1.0 / 5, c3 = 3.0 / 10, c4 = 4.0 / 5, c5 = 8.0 / 9;
constexpr double a21 = 1.0 / 5;
constexpr double a31 = 3.0 / 40, a32 = 9.0 / 40;
constexpr double a41 = 44.0 / 45, a42 = -56.0 / 15, a43 = 32.0 / 9;
constexpr double a51 = 19372.0 / 6561, a52 = -25360.0 / 2187, a53 = 64448.0 / 6561,
                 a54 = -212.0 / 729;
constexpr double a61 = 9017.0 / 3168, a62 = -355.0 / 33, a63 = 46732.0 / 5247,
                 a64 = 49.0 / 176, a65 = -5103.0 / 18656;
constexpr double b1 = 35.0 / 384, b3 = 500.0 / 1113, b4 = 125.0 / 192, b5 = -2187.0 / 6784,
                 b6 = 11.0 / 84;
constexpr double e1 = 71.0 / 57600, e3 = -71.0 / 16695, e4 = 71.0 / 1920, e5 = -17253.0 / 339200,
                 e6 = 22.0 / 525, e7 = -1.0 / 40;

}  // namespace

OdeSolution integrate_ode(const OdeRhs& f, double t0, double t1, const Vec& y0,
                          const OdeOptions& opts) {
    const double dir = t1 >= t0 ? 1.0 : -1.0;
    const double span = std::abs(t1 - t0);
    if (!(span > 0.0)) throw std::invalid_argument("integrate_ode: empty time span");

    OdeSolution out;
    double t = t0;
    Vec y = y0;
    Vec k1(y.size()), k2(y.size()), k3(y.size()), k4(y.size()), k5(y.size()), k6(y.size()),
        k7(y.size());
    f(t, y, k1);

    double h = opts.initial_step > 0.0 ? opts.initial_step : span * 1e-6;
    if (opts.max_step > 0.0) h = std::min(h, opts.max_step);

    out.t.push_back(t);
    out.y.push_back(y);

    auto error_norm = [&](const Vec& yerr, const Vec& ya, const Vec& yb) {
        double acc = 0.0;
        for (int i = 0; i < yerr.size(); ++i) {
            const double scale =
                opts.abs_tol + opts.rel_tol * std::max(std::abs(ya(i)), std::abs(yb(i)));
            const double r = std::abs(yerr(i)) / scale;
            acc = std::max(acc, r);
        }
        return acc;
    };

    Vec ytmp(y.size()), y5(y.size()), yerr(y.size());
    long steps = 0;
    const double t_eps = 8.0 * std::numeric_limits<double>::epsilon() *
                         std::max({std::abs(t0), std::abs(t1), span});
    while (dir * (t1 - t) > t_eps) {
        if (++steps > opts.max_steps) throw std::runtime_error("integrate_ode: step budget exhausted");
        const double remaining = std::abs(t1 - t);
        const bool endpoint_clamp = h >= remaining;
        h = std::min(h, remaining);
        if (opts.max_step > 0.0) h = std::min(h, opts.max_step);
        if (!endpoint_clamp && h < 1e-14 * std::max(1.0, std::abs(t)))
            throw std::runtime_error("integrate_ode: step size underflow at t = " + std::to_string(t));
        const double hs = dir * h;

        ytmp = y + hs * (a21 * k1);
        f(t + c2 * hs, ytmp, k2);
        ytmp = y + hs * (a31 * k1 + a32 * k2);
        f(t + c3 * hs, ytmp, k3);
        ytmp = y + hs * (a41 * k1 + a42 * k2 + a43 * k3);
        f(t + c4 * hs, ytmp, k4);
        ytmp = y + hs * (a51 * k1 + a52 * k2 + a53 * k3 + a54 * k4);
        f(t + c5 * hs, ytmp, k5);
        ytmp = y + hs * (a61 * k1 + a62 * k2 + a63 * k3 + a64 * k4 + a65 * k5);
        f(t + hs, ytmp, k6);
        y5 = y + hs * (b1 * k1 + b3 * k3 + b4 * k4 + b5 * k5 + b6 * k6);
        f(t + hs, y5, k7);
        yerr = hs * (e1 * k1 + e3 * k3 + e4 * k4 + e5 * k5 + e6 * k6 + e7 * k7);

        const double err = error_norm(yerr, y, y5);
        if (err <= 1.0) {
            t += hs;
            y.swap(y5);
            k1.swap(k7);  // FSAL
            ++out.stats.accepted;
            out.t.push_back(t);
            out.y.push_back(y);
        } else {
            ++out.stats.rejected;
        }
        const double factor =
            err > 0.0 ? std::clamp(0.9 * std::pow(err, -0.2), 0.2, 5.0) : 5.0;
        h *= factor;
    }
    return out;
}

}  // namespace hwmc
