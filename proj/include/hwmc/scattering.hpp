#ifndef HWMC_SCATTERING_HPP
#define HWMC_SCATTERING_HPP

#include <array>

#include "hwmc/oscillator.hpp"

namespace hwmc {

// Normal-form data at the crossing of the two natural-frequency profiles:
// crossing point (t0, omega0), bracket B = w2' - w1' > 0, normalized coupling
// eta_tilde = eta / (2 omega0 sqrt(B)), the unit-determinant canonical map
// (q,p) = (1/sqrt(B)) [[w2', -1], [-w1', 1]] (t, nu), and the generating
// function F1(t,q) = q^2/2 - sqrt(B) t q + (w2'/2) t^2.
struct NormalForm {
    double t0 = 0.0;
    double omega0 = 0.0;
    double bracket = 0.0;
    double eta_tilde = 0.0;
    std::array<std::array<double, 2>, 2> transform{};
    double gen_qq = 0.5, gen_tq = 0.0, gen_tt = 0.0;
};

NormalForm normal_form(const OscillatorConfig& cfg, double t_lo = -100.0, double t_hi = 100.0);

// tau = exp(-pi eta_tilde^2), |beta|^2 = 1 - tau^2, and
// beta = sqrt(2 pi tau) / (eta_tilde Gamma(-i eta_tilde^2)) with the branch
// -1 = e^{-i pi}.
struct ScatteringData {
    double omega0 = 0.0;
    double t0 = 0.0;
    double bracket = 0.0;
    double eta_tilde = 0.0;
    double tau = 1.0;
    cxd beta = 0.0;
};

ScatteringData conversion_coefficients(const OscillatorConfig& cfg);
ScatteringData conversion_coefficients(const NormalForm& nf);

// WKB mode for one channel: amplitude A(t) = A_in sqrt(w_in / w(t)), phase
// theta(t) = -int_{t_ref}^t w dt'.  Channel1/Channel2 follow the natural
// frequencies; Plus/Minus follow the coupled eigenfrequencies.
enum class WkbMode { Channel1, Channel2, Plus, Minus };

struct WkbSolution {
    double t_ref = 0.0;
    double a_in = 1.0;
    double w_in = 1.0;

    double amplitude(double t) const;
    double phase(double t) const;  // integrated by adaptive Simpson
    cxd value(double t) const;
    bool inside_conversion_window(double t) const;

    // internals
    std::function<double(double)> freq;
    double window_lo = 0.0, window_hi = 0.0;
};

// guard_scale multiplies the default conversion window half-width
// 3 * max(1, 1/sqrt(B)).
WkbSolution wkb_solution(const OscillatorConfig& cfg, WkbMode mode, double t_ref,
                         double a_in = 1.0, double guard_scale = 1.0);

// Action-normalized transmission estimate from a trajectory: windows
// [t0-far, t0-near] and [t0+near, t0+far] must clear the conversion window.
struct MeasuredTransmission {
    double tau_hat = 0.0;
    double beta_hat_mag = 0.0;
};
MeasuredTransmission measure_transmission(const Trajectory& traj, const OscillatorConfig& cfg,
                                          const ScatteringData& scat, double near_offset,
                                          double far_offset);

}  // namespace hwmc

#endif
