#ifndef HWMC_ODE_HPP
#define HWMC_ODE_HPP

#include <cmath>
#include <functional>
#include <stdexcept>
#include <vector>

#include <Eigen/Dense>

#include "hwmc/repr.hpp"

namespace hwmc {

// Adaptive Dormand-Prince 5(4) on complex state vectors.

struct OdeOptions {
    double rel_tol = 1e-9;
    double abs_tol = 1e-12;
    double max_step = 0.0;  // 0 = unbounded
    double initial_step = 0.0;
    long max_steps = 50'000'000;
};

struct OdeStats {
    long accepted = 0;
    long rejected = 0;
};

using OdeRhs = std::function<void(double, const Vec&, Vec&)>;

struct OdeSolution {
    std::vector<double> t;
    std::vector<Vec> y;
    OdeStats stats;
};

// Integrates y' = f(t,y) from t0 to t1 (t1 may be < t0), recording the state
// at every accepted step.
OdeSolution integrate_ode(const OdeRhs& f, double t0, double t1, const Vec& y0,
                          const OdeOptions& opts = {});

}  // namespace hwmc

#endif
