#ifndef HWMC_OSCILLATOR_HPP
#define HWMC_OSCILLATOR_HPP

#include <functional>
#include <utility>
#include <vector>

#include "hwmc/ode.hpp"

namespace hwmc {

// Natural-frequency profile omega(t) = base + delta * tanh(t/T), or a sampled
// table with linear interpolation.
struct FrequencyProfile {
    enum class Kind { Tanh, Table } kind = Kind::Tanh;
    double base = 20.0;
    double delta = -5.0;
    double T = 5.0;
    std::vector<double> table_t, table_w;  // strictly increasing t

    static FrequencyProfile tanh_profile(double base, double delta, double T);
    static FrequencyProfile table_profile(std::vector<double> t, std::vector<double> w);

    double value(double t) const;
    double derivative(double t) const;
};

enum class CouplingForm { Direct, Difference };

// x1'' + w1(t)^2 x1 + eta x2            = 0   (Direct)
// x1'' + w1(t)^2 x1 + eta (x2 - x1)     = 0   (Difference), and symmetrically
// for x2.  States are complex; positive-frequency runs use
// xdot(t0) = -i w(t0) x(t0).
struct OscillatorConfig {
    FrequencyProfile omega1 = FrequencyProfile::tanh_profile(20.0, -5.0, 5.0);
    FrequencyProfile omega2 = FrequencyProfile::tanh_profile(20.0, +5.0, 5.0);
    double eta = 0.0;
    CouplingForm coupling = CouplingForm::Direct;
    cxd x1_0 = 1.0, x2_0 = 0.0, v1_0 = 0.0, v2_0 = 0.0;

    // effective squared frequencies entering the dispersion matrix diagonal
    double omega1_sq_eff(double t) const;
    double omega2_sq_eff(double t) const;
};

// Positive-frequency initial data for channel 1: x1 = amplitude,
// v1 = -i w1(t0) x1, channel 2 quiet.
void set_positive_frequency_start(OscillatorConfig& cfg, double t0, cxd amplitude = 1.0);

// Eigenfrequencies of the instantaneous dispersion matrix:
// w_pm^2 = (w1^2 + w2^2)/2 +- sqrt((w1^2 - w2^2)^2 + 4 eta^2)/2.
std::pair<double, double> eigenfrequencies(const OscillatorConfig& cfg, double t);

struct Trajectory {
    std::vector<double> t;
    std::vector<cxd> x1, x2, v1, v2;
    OdeStats stats;
    double rel_tol = 0.0, abs_tol = 0.0;

    size_t size() const { return t.size(); }
};

// Integrates the coupled system over [t0, t1]; when sample_dt > 0 the
// integrator is driven segment by segment so the stated sample times appear
// exactly as nodes.
Trajectory integrate(const OscillatorConfig& cfg, double t0, double t1,
                     const OdeOptions& opts = {.rel_tol = 1e-9, .abs_tol = 1e-12},
                     double sample_dt = 0.0);

// Uniformly sampled slice of a trajectory integrated with sample_dt: picks the
// nodes nearest each requested time (exact when sample_dt divides the span).
struct SampledTrajectory {
    double t0 = 0.0, dt = 0.0;
    std::vector<cxd> x1, x2;
};
SampledTrajectory sample_uniform(const Trajectory& traj, double t0, double dt, int count);

}  // namespace hwmc

#endif
