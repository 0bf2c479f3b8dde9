#ifndef HWMC_WIGNER_HPP
#define HWMC_WIGNER_HPP

#include <vector>

#include "hwmc/repr.hpp"

namespace hwmc {

// Uniformly sampled complex signal, one or two channels; count must be even.
struct SampledSignal {
    double t0 = 0.0;
    double dt = 1.0;
    std::vector<cxd> ch1;
    std::vector<cxd> ch2;  // empty for single-channel signals

    int count() const { return static_cast<int>(ch1.size()); }
    int channels() const { return ch2.empty() ? 1 : 2; }
    double time(int i) const { return t0 + i * dt; }
};

// Discrete Wigner-Ville distribution on the integer-lag kernel
//   W_ab(t_i, w_k) = 2 dt sum_m x_a*(t_i + m dt) x_b(t_i - m dt) e^{-2 i w_k m dt},
// zero-padded outside the record.  The doubled phase makes the frequency axis
// periodic with period pi/dt; bins are w_k = k pi/(dt n_freq), k = 0..n_freq-1,
// and e^{-i w0 t} carriers concentrate on the +w0 ridge.
struct WignerGrid {
    double t0 = 0.0, dt = 1.0;
    int n_time = 0;
    double w0 = 0.0, dw = 0.0;
    int n_freq = 0;
    int channels = 1;
    // values[a][b] is an n_time x n_freq grid, row-major; a,b < channels
    std::vector<std::vector<std::vector<cxd>>> values;

    cxd at(int a, int b, int it, int iw) const { return values[a][b][it * n_freq + iw]; }
    cxd& at(int a, int b, int it, int iw) { return values[a][b][it * n_freq + iw]; }
    double omega(int iw) const { return w0 + iw * dw; }
    double time(int it) const { return t0 + it * dt; }
};

WignerGrid wigner_transform(const SampledSignal& sig, int n_freq = 0);

// Mixed-state average: Gauss-Hermite weighted sum of rigidly shifted copies
// (bilinear shift interpolation).  Shifts pushing more than 1% of the mass off
// the grid are rejected.
WignerGrid mixed_average(const WignerGrid& base, double sigma_t, double sigma_w,
                         int quadrature_order = 21);

// Gauss-Hermite nodes/weights for int e^{-x^2} f(x) dx (Golub-Welsch).
void gauss_hermite(int order, std::vector<double>& nodes, std::vector<double>& weights);

// Fraction of sum |W| lying within +-band (in omega units) of any of the
// curves, each given as omega(t) sampled on the grid's time axis.
double dispersion_mass_fraction(const WignerGrid& grid, int a, int b,
                                const std::vector<std::vector<double>>& curves, double band);

}  // namespace hwmc

#endif
