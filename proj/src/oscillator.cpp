#include "hwmc/oscillator.hpp"

#include <algorithm>
#include <cmath>

namespace hwmc {

FrequencyProfile FrequencyProfile::tanh_profile(double base, double delta, double T) {
    FrequencyProfile p;
    p.kind = Kind::Tanh;
    p.base = base;
    p.delta = delta;
    p.T = T;
    return p;
}

FrequencyProfile FrequencyProfile::table_profile(std::vector<double> t, std::vector<double> w) {
    if (t.size() != w.size() || t.size() < 2)
        throw std::invalid_argument("table_profile: need matching t/w samples, at least two");
    for (size_t i = 1; i < t.size(); ++i)
        if (!(t[i] > t[i - 1])) throw std::invalid_argument("table_profile: t must increase");
    FrequencyProfile p;
    p.kind = Kind::Table;
    p.table_t = std::move(t);
    p.table_w = std::move(w);
    return p;
}

double FrequencyProfile::value(double t) const {
    if (kind == Kind::Tanh) return base + delta * std::tanh(t / T);
    if (t <= table_t.front()) return table_w.front();
    if (t >= table_t.back()) return table_w.back();
    const auto it = std::upper_bound(table_t.begin(), table_t.end(), t);
    const size_t i = static_cast<size_t>(it - table_t.begin());
    const double f = (t - table_t[i - 1]) / (table_t[i] - table_t[i - 1]);
    return table_w[i - 1] + f * (table_w[i] - table_w[i - 1]);
}

double FrequencyProfile::derivative(double t) const {
    if (kind == Kind::Tanh) {
        const double c = std::cosh(t / T);
        return delta / (T * c * c);
    }
    if (t <= table_t.front() || t >= table_t.back()) return 0.0;
    const auto it = std::upper_bound(table_t.begin(), table_t.end(), t);
    const size_t i = static_cast<size_t>(it - table_t.begin());
    return (table_w[i] - table_w[i - 1]) / (table_t[i] - table_t[i - 1]);
}

double OscillatorConfig::omega1_sq_eff(double t) const {
    const double w = omega1.value(t);
    return coupling == CouplingForm::Direct ? w * w : w * w - eta;
}

double OscillatorConfig::omega2_sq_eff(double t) const {
    const double w = omega2.value(t);
    return coupling == CouplingForm::Direct ? w * w : w * w - eta;
}

void set_positive_frequency_start(OscillatorConfig& cfg, double t0, cxd amplitude) {
    cfg.x1_0 = amplitude;
    cfg.v1_0 = cxd(0.0, -cfg.omega1.value(t0)) * amplitude;
    cfg.x2_0 = 0.0;
    cfg.v2_0 = 0.0;
}

std::pair<double, double> eigenfrequencies(const OscillatorConfig& cfg, double t) {
    const double a = cfg.omega1_sq_eff(t);
    const double b = cfg.omega2_sq_eff(t);
    const double mean = 0.5 * (a + b);
    const double split = 0.5 * std::sqrt((a - b) * (a - b) + 4.0 * cfg.eta * cfg.eta);
    const double plus_sq = mean + split, minus_sq = mean - split;
    if (!(plus_sq > 0.0) || !(minus_sq > 0.0))
        throw std::runtime_error("eigenfrequencies: non-real eigenfrequency");
    return {std::sqrt(plus_sq), std::sqrt(minus_sq)};
}

Trajectory integrate(const OscillatorConfig& cfg, double t0, double t1, const OdeOptions& opts,
                     double sample_dt) {
    OdeRhs rhs = [&cfg](double t, const Vec& y, Vec& dy) {
        // y = (x1, x2, v1, v2)
        dy(0) = y(2);
        dy(1) = y(3);
        dy(2) = -cfg.omega1_sq_eff(t) * y(0) - cfg.eta * y(1);
        dy(3) = -cfg.omega2_sq_eff(t) * y(1) - cfg.eta * y(0);
    };
    Vec y0(4);
    y0 << cfg.x1_0, cfg.x2_0, cfg.v1_0, cfg.v2_0;

    // keep phase advance per step below pi/4
    OdeOptions local = opts;
    const double wmax = std::max({cfg.omega1.value(t0), cfg.omega1.value(t1),
                                  cfg.omega2.value(t0), cfg.omega2.value(t1),
                                  cfg.omega1.value(0.5 * (t0 + t1)),
                                  cfg.omega2.value(0.5 * (t0 + t1))});
    const double phase_cap = M_PI / (4.0 * std::max(wmax, 1e-12));
    local.max_step = opts.max_step > 0.0 ? std::min(opts.max_step, phase_cap) : phase_cap;

    Trajectory traj;
    traj.rel_tol = local.rel_tol;
    traj.abs_tol = local.abs_tol;

    auto append = [&](const OdeSolution& sol, bool skip_first) {
        for (size_t i = skip_first ? 1 : 0; i < sol.t.size(); ++i) {
            traj.t.push_back(sol.t[i]);
            traj.x1.push_back(sol.y[i](0));
            traj.x2.push_back(sol.y[i](1));
            traj.v1.push_back(sol.y[i](2));
            traj.v2.push_back(sol.y[i](3));
        }
        traj.stats.accepted += sol.stats.accepted;
        traj.stats.rejected += sol.stats.rejected;
    };

    if (sample_dt <= 0.0) {
        append(integrate_ode(rhs, t0, t1, y0, local), false);
        return traj;
    }
    const double dir = t1 >= t0 ? 1.0 : -1.0;
    double t = t0;
    Vec y = y0;
    bool first = true;
    while (dir * (t1 - t) > 1e-12) {
        double tn = t + dir * sample_dt;
        if (dir * (tn - t1) > 0.0) tn = t1;
        const OdeSolution sol = integrate_ode(rhs, t, tn, y, local);
        append(sol, !first);
        first = false;
        t = sol.t.back();
        y = sol.y.back();
    }
    return traj;
}

SampledTrajectory sample_uniform(const Trajectory& traj, double t0, double dt, int count) {
    SampledTrajectory s;
    s.t0 = t0;
    s.dt = dt;
    s.x1.resize(count);
    s.x2.resize(count);
    size_t j = 0;
    for (int i = 0; i < count; ++i) {
        const double target = t0 + i * dt;
        while (j + 1 < traj.t.size() &&
               std::abs(traj.t[j + 1] - target) <= std::abs(traj.t[j] - target))
            ++j;
        if (std::abs(traj.t[j] - target) > 0.25 * dt)
            throw std::runtime_error("sample_uniform: trajectory lacks a node near requested time");
        s.x1[i] = traj.x1[j];
        s.x2[i] = traj.x2[j];
    }
    return s;
}

}  // namespace hwmc
