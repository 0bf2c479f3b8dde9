#include "hwmc/scattering.hpp"

#include <algorithm>
#include <cmath>

#include "hwmc/gammafn.hpp"

namespace hwmc {

namespace {

// root of f on [lo, hi] by bisection; f(lo), f(hi) must differ in sign
double bisect(const std::function<double(double)>& f, double lo, double hi) {
    double flo = f(lo), fhi = f(hi);
    if (flo == 0.0) return lo;
    if (fhi == 0.0) return hi;
    if (flo * fhi > 0.0) throw std::invalid_argument("bisect: no sign change in bracket");
    for (int i = 0; i < 200; ++i) {
        const double mid = 0.5 * (lo + hi);
        const double fm = f(mid);
        if (fm == 0.0) return mid;
        if (flo * fm < 0.0) {
            hi = mid;
        } else {
            lo = mid;
            flo = fm;
        }
    }
    return 0.5 * (lo + hi);
}

double adaptive_simpson(const std::function<double(double)>& f, double a, double b, double fa,
                        double fm, double fb, double whole, double tol, int depth) {
    const double m = 0.5 * (a + b);
    const double lm = 0.5 * (a + m), rm = 0.5 * (m + b);
    const double flm = f(lm), frm = f(rm);
    const double left = (m - a) / 6.0 * (fa + 4.0 * flm + fm);
    const double right = (b - m) / 6.0 * (fm + 4.0 * frm + fb);
    if (depth <= 0 || std::abs(left + right - whole) < 15.0 * tol)
        return left + right + (left + right - whole) / 15.0;
    return adaptive_simpson(f, a, m, fa, flm, fm, left, 0.5 * tol, depth - 1) +
           adaptive_simpson(f, m, b, fm, frm, fb, right, 0.5 * tol, depth - 1);
}

double integrate_1d(const std::function<double(double)>& f, double a, double b,
                    double tol = 1e-11) {
    if (a == b) return 0.0;
    const double m = 0.5 * (a + b);
    const double fa = f(a), fm = f(m), fb = f(b);
    const double whole = (b - a) / 6.0 * (fa + 4.0 * fm + fb);
    return adaptive_simpson(f, a, b, fa, fm, fb, whole, tol * std::max(1.0, std::abs(whole)), 40);
}

}  // namespace

NormalForm normal_form(const OscillatorConfig& cfg, double t_lo, double t_hi) {
    auto diff = [&cfg](double t) { return cfg.omega1.value(t) - cfg.omega2.value(t); };
    const double t0 = bisect(diff, t_lo, t_hi);
    const double w1dot = cfg.omega1.derivative(t0);
    const double w2dot = cfg.omega2.derivative(t0);
    const double bracket = w2dot - w1dot;
    if (std::abs(bracket) < 1e-12)
        throw std::invalid_argument("normal_form: non-transverse crossing (B = w2' - w1' = 0)");
    if (bracket < 0.0)
        throw std::invalid_argument("normal_form: profiles ordered so that B = w2' - w1' > 0 is required");
    NormalForm nf;
    nf.t0 = t0;
    nf.omega0 = cfg.omega1.value(t0);
    nf.bracket = bracket;
    nf.eta_tilde = cfg.eta / (2.0 * nf.omega0 * std::sqrt(bracket));
    const double s = 1.0 / std::sqrt(bracket);
    nf.transform = {{{s * w2dot, -s}, {-s * w1dot, s}}};
    nf.gen_qq = 0.5;
    nf.gen_tq = -std::sqrt(bracket);
    nf.gen_tt = 0.5 * w2dot;
    return nf;
}

ScatteringData conversion_coefficients(const NormalForm& nf) {
    ScatteringData s;
    s.omega0 = nf.omega0;
    s.t0 = nf.t0;
    s.bracket = nf.bracket;
    s.eta_tilde = nf.eta_tilde;
    const double mu = nf.eta_tilde * nf.eta_tilde;
    s.tau = std::exp(-M_PI * mu);
    if (nf.eta_tilde == 0.0) {
        s.beta = 0.0;
    } else {
        s.beta = std::sqrt(2.0 * M_PI * s.tau) / (nf.eta_tilde * gamma_complex(cxd(0.0, -mu)));
    }
    return s;
}

ScatteringData conversion_coefficients(const OscillatorConfig& cfg) {
    return conversion_coefficients(normal_form(cfg));
}

double WkbSolution::amplitude(double t) const { return a_in * std::sqrt(w_in / freq(t)); }

double WkbSolution::phase(double t) const {
    return -integrate_1d(freq, t_ref, t);
}

cxd WkbSolution::value(double t) const {
    if (inside_conversion_window(t))
        throw std::domain_error("wkb_solution: evaluation inside the conversion window");
    const double th = phase(t);
    return amplitude(t) * cxd(std::cos(th), std::sin(th));
}

bool WkbSolution::inside_conversion_window(double t) const {
    return t > window_lo && t < window_hi;
}

WkbSolution wkb_solution(const OscillatorConfig& cfg, WkbMode mode, double t_ref, double a_in,
                         double guard_scale) {
    WkbSolution w;
    w.t_ref = t_ref;
    w.a_in = a_in;
    switch (mode) {
        case WkbMode::Channel1:
            w.freq = [cfg](double t) { return cfg.omega1.value(t); };
            break;
        case WkbMode::Channel2:
            w.freq = [cfg](double t) { return cfg.omega2.value(t); };
            break;
        case WkbMode::Plus:
            w.freq = [cfg](double t) { return eigenfrequencies(cfg, t).first; };
            break;
        case WkbMode::Minus:
            w.freq = [cfg](double t) { return eigenfrequencies(cfg, t).second; };
            break;
    }
    w.w_in = w.freq(t_ref);
    if (cfg.eta != 0.0) {
        const NormalForm nf = normal_form(cfg);
        const double half = guard_scale * 3.0 * std::max(1.0, 1.0 / std::sqrt(nf.bracket));
        w.window_lo = nf.t0 - half;
        w.window_hi = nf.t0 + half;
    } else {
        w.window_lo = w.window_hi = t_ref;  // empty window
    }
    return w;
}

MeasuredTransmission measure_transmission(const Trajectory& traj, const OscillatorConfig& cfg,
                                          const ScatteringData& scat, double near_offset,
                                          double far_offset) {
    if (!(far_offset > near_offset))
        throw std::invalid_argument("measure_transmission: need far_offset > near_offset");
    const double half_window = 3.0 * std::max(1.0, 1.0 / std::sqrt(scat.bracket));
    if (near_offset < half_window)
        throw std::invalid_argument("measure_transmission: window overlaps the conversion region");
    if (traj.t.front() > scat.t0 - far_offset || traj.t.back() < scat.t0 + far_offset)
        throw std::invalid_argument("measure_transmission: trajectory does not span the windows");

    // Window-averaged action w_i |x_i|^2 per channel: time averaging removes
    // the off-resonant driven beat, which oscillates around the WKB envelope.
    auto window_action = [&](bool after, bool channel2) {
        double acc = 0.0, span = 0.0;
        bool seen = false;
        double prev_t = 0.0, prev_v = 0.0;
        for (size_t i = 0; i < traj.t.size(); ++i) {
            const double dt = traj.t[i] - scat.t0;
            const double off = after ? dt : -dt;
            if (off < near_offset || off > far_offset) continue;
            const double w = channel2 ? cfg.omega2.value(traj.t[i]) : cfg.omega1.value(traj.t[i]);
            const cxd x = channel2 ? traj.x2[i] : traj.x1[i];
            const double v = std::norm(x) * w;
            if (seen) {
                const double h = std::abs(traj.t[i] - prev_t);
                acc += 0.5 * (v + prev_v) * h;
                span += h;
            }
            prev_t = traj.t[i];
            prev_v = v;
            seen = true;
        }
        if (span == 0.0)
            throw std::invalid_argument("measure_transmission: empty matching window");
        return acc / span;
    };

    const double in1 = window_action(false, false);
    const double out1 = window_action(true, false);
    const double out2 = window_action(true, true);
    MeasuredTransmission m;
    m.tau_hat = std::sqrt(out1 / in1);
    m.beta_hat_mag = std::sqrt(out2 / in1);
    return m;
}

}  // namespace hwmc
