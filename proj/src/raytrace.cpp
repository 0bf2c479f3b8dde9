#include "hwmc/raytrace.hpp"

#include <cmath>

namespace hwmc {

double DispersionFunction::dt(double t, double w) const {
    if (d_dt) return d_dt(t, w);
    const double h = 1e-6 * std::max(1.0, std::abs(t));
    return (value(t + h, w) - value(t - h, w)) / (2.0 * h);
}

double DispersionFunction::domega(double t, double w) const {
    if (d_domega) return d_domega(t, w);
    const double h = 1e-6 * std::max(1.0, std::abs(w));
    return (value(t, w + h) - value(t, w - h)) / (2.0 * h);
}

Ray ray_trace(const DispersionFunction& d, double t0, double omega0, double sigma_end,
              const OdeOptions& opts, double seed_tol) {
    const double scale = std::max({1.0, std::abs(d.value(t0, omega0 * 1.1)),
                                   std::abs(d.value(t0, omega0 * 0.9))});
    const double d0 = d.value(t0, omega0);
    if (std::abs(d0) > seed_tol * scale)
        throw std::invalid_argument("ray_trace: seed is not on the dispersion surface (|D| = " +
                                    std::to_string(std::abs(d0)) + ")");

    OdeRhs rhs = [&d](double, const Vec& y, Vec& dy) {
        const double t = y(0).real(), w = y(1).real();
        dy(0) = d.domega(t, w);
        dy(1) = -d.dt(t, w);
    };
    Vec y0(2);
    y0 << cxd(t0, 0.0), cxd(omega0, 0.0);
    const OdeSolution sol = integrate_ode(rhs, 0.0, sigma_end, y0, opts);

    Ray ray;
    ray.sigma = sol.t;
    ray.t.reserve(sol.t.size());
    ray.omega.reserve(sol.t.size());
    ray.residual.reserve(sol.t.size());
    for (const auto& y : sol.y) {
        ray.t.push_back(y(0).real());
        ray.omega.push_back(y(1).real());
        ray.residual.push_back(d.value(y(0).real(), y(1).real()) - d0);
    }
    return ray;
}

}  // namespace hwmc
