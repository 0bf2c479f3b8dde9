#ifndef HWMC_RAYTRACE_HPP
#define HWMC_RAYTRACE_HPP

#include <functional>
#include <vector>

#include "hwmc/ode.hpp"

namespace hwmc {

// Dispersion function D(t, omega) with partial derivatives; derivatives fall
// back to central differences when not supplied.
struct DispersionFunction {
    std::function<double(double, double)> value;
    std::function<double(double, double)> d_dt;      // optional
    std::function<double(double, double)> d_domega;  // optional

    double dt(double t, double w) const;
    double domega(double t, double w) const;
};

// Hamilton's equations for the ray: dt/dsigma = dD/domega,
// domega/dsigma = -dD/dt.  D is conserved along the ray.
struct Ray {
    std::vector<double> sigma;
    std::vector<double> t;
    std::vector<double> omega;
    std::vector<double> residual;  // D(t,omega) - D(t0,omega0)
};

// Seed must satisfy |D(t0,omega0)| <= seed_tol * scale.
Ray ray_trace(const DispersionFunction& d, double t0, double omega0, double sigma_end,
              const OdeOptions& opts = {.rel_tol = 1e-10, .abs_tol = 1e-12},
              double seed_tol = 1e-6);

}  // namespace hwmc

#endif
