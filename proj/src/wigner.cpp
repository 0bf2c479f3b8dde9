#include "hwmc/wigner.hpp"

#include <cmath>

namespace hwmc {

WignerGrid wigner_transform(const SampledSignal& sig, int n_freq) {
    const int count = sig.count();
    if (count == 0 || count % 2 != 0)
        throw std::invalid_argument("wigner_transform: sample count must be even and nonzero");
    if (!(sig.dt > 0.0)) throw std::invalid_argument("wigner_transform: dt must be positive");
    if (!sig.ch2.empty() && sig.ch2.size() != sig.ch1.size())
        throw std::invalid_argument("wigner_transform: channel lengths differ");
    if (n_freq <= 0) n_freq = count;

    WignerGrid grid;
    grid.t0 = sig.t0;
    grid.dt = sig.dt;
    grid.n_time = count;
    grid.n_freq = n_freq;
    grid.w0 = 0.0;
    grid.dw = M_PI / (sig.dt * n_freq);
    grid.channels = sig.channels();
    grid.values.assign(grid.channels,
                       std::vector<std::vector<cxd>>(
                           grid.channels, std::vector<cxd>(static_cast<size_t>(count) * n_freq)));

    auto channel = [&](int a) -> const std::vector<cxd>& { return a == 0 ? sig.ch1 : sig.ch2; };

    // 2 w_k m dt = 2 pi k m / n_freq, so the lag transform runs on a fixed
    // root-of-unity table; the negative sign places e^{-i w0 t} carriers on
    // the +w0 ridge
    std::vector<cxd> roots(n_freq);
    for (int j = 0; j < n_freq; ++j) {
        const double ph = -2.0 * M_PI * j / n_freq;
        roots[j] = cxd(std::cos(ph), std::sin(ph));
    }

    std::vector<cxd> acc(n_freq);
    for (int a = 0; a < grid.channels; ++a)
        for (int b = 0; b < grid.channels; ++b) {
            const auto& xa = channel(a);
            const auto& xb = channel(b);
            for (int i = 0; i < count; ++i) {
                const int max_lag = std::min(i, count - 1 - i);
                std::fill(acc.begin(), acc.end(), cxd(0.0, 0.0));
                for (int m = -max_lag; m <= max_lag; ++m) {
                    const cxd kern = std::conj(xa[i + m]) * xb[i - m];
                    if (kern == cxd(0.0, 0.0)) continue;
                    const int stride = ((m % n_freq) + n_freq) % n_freq;
                    int idx = 0;
                    for (int k = 0; k < n_freq; ++k) {
                        acc[k] += kern * roots[idx];
                        idx += stride;
                        if (idx >= n_freq) idx -= n_freq;
                    }
                }
                for (int k = 0; k < n_freq; ++k) grid.at(a, b, i, k) = 2.0 * sig.dt * acc[k];
            }
        }
    return grid;
}

void gauss_hermite(int order, std::vector<double>& nodes, std::vector<double>& weights) {
    if (order < 1) throw std::invalid_argument("gauss_hermite: order must be >= 1");
    // Golub-Welsch on the Hermite Jacobi matrix
    Eigen::MatrixXd j = Eigen::MatrixXd::Zero(order, order);
    for (int i = 1; i < order; ++i) {
        const double off = std::sqrt(i / 2.0);
        j(i, i - 1) = off;
        j(i - 1, i) = off;
    }
    Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> es(j);
    nodes.resize(order);
    weights.resize(order);
    const double mu0 = std::sqrt(M_PI);
    for (int i = 0; i < order; ++i) {
        nodes[i] = es.eigenvalues()(i);
        const double v = es.eigenvectors()(0, i);
        weights[i] = mu0 * v * v;
    }
}

namespace {

// bilinear sample with zero outside the grid; also reports whether the sample
// fell off-grid
cxd sample_shifted(const WignerGrid& g, int a, int b, double it, double iw, bool& off) {
    const int i0 = static_cast<int>(std::floor(it));
    const int k0 = static_cast<int>(std::floor(iw));
    const double fi = it - i0, fk = iw - k0;
    cxd acc(0.0, 0.0);
    for (int di = 0; di <= 1; ++di)
        for (int dk = 0; dk <= 1; ++dk) {
            const int i = i0 + di, k = k0 + dk;
            const double w = (di ? fi : 1.0 - fi) * (dk ? fk : 1.0 - fk);
            if (w == 0.0) continue;
            if (i < 0 || i >= g.n_time || k < 0 || k >= g.n_freq) {
                off = true;
                continue;
            }
            acc += w * g.at(a, b, i, k);
        }
    return acc;
}

}  // namespace

WignerGrid mixed_average(const WignerGrid& base, double sigma_t, double sigma_w,
                         int quadrature_order) {
    if (quadrature_order < 3) throw std::invalid_argument("mixed_average: quadrature order >= 3");
    if (sigma_t == 0.0 && sigma_w == 0.0) return base;

    std::vector<double> nodes, weights;
    gauss_hermite(quadrature_order, nodes, weights);
    const double wnorm = std::sqrt(M_PI);

    WignerGrid out = base;
    for (auto& ab : out.values)
        for (auto& grid : ab) std::fill(grid.begin(), grid.end(), cxd(0.0, 0.0));

    // mass bookkeeping for the off-grid guard
    double mass_total = 0.0, mass_lost = 0.0;

    for (int a = 0; a < base.channels; ++a)
        for (int b = 0; b < base.channels; ++b) {
            for (int qi = 0; qi < quadrature_order; ++qi)
                for (int qk = 0; qk < quadrature_order; ++qk) {
                    const double st = std::sqrt(2.0) * sigma_t * nodes[qi];
                    const double sw = std::sqrt(2.0) * sigma_w * nodes[qk];
                    const double weight = weights[qi] * weights[qk] / (wnorm * wnorm);
                    const double shift_i = st / base.dt;
                    const double shift_k = base.dw > 0.0 ? sw / base.dw : 0.0;
                    bool off = false;
                    for (int i = 0; i < base.n_time; ++i)
                        for (int k = 0; k < base.n_freq; ++k)
                            out.at(a, b, i, k) +=
                                weight * sample_shifted(base, a, b, i - shift_i, k - shift_k, off);
                    if (off && a == b) {
                        // estimate the clipped mass for this shift
                        double lost = 0.0, total = 0.0;
                        for (int i = 0; i < base.n_time; ++i)
                            for (int k = 0; k < base.n_freq; ++k) {
                                const double v = std::abs(base.at(a, b, i, k));
                                total += v;
                                const double si = i + shift_i, sk = k + shift_k;
                                if (si < 0 || si >= base.n_time - 1 || sk < 0 ||
                                    sk >= base.n_freq - 1)
                                    lost += v;
                            }
                        mass_total += weight * total;
                        mass_lost += weight * lost;
                    } else if (a == b) {
                        double total = 0.0;
                        for (const auto& v : base.values[a][b]) total += std::abs(v);
                        mass_total += weight * total;
                    }
                }
        }
    if (mass_total > 0.0 && mass_lost > 0.01 * mass_total)
        throw std::invalid_argument("mixed_average: shifts push more than 1% of the mass off-grid");
    return out;
}

double dispersion_mass_fraction(const WignerGrid& grid, int a, int b,
                                const std::vector<std::vector<double>>& curves, double band) {
    if (band <= 0.0) throw std::invalid_argument("dispersion_mass_fraction: empty band");
    for (const auto& c : curves)
        if (static_cast<int>(c.size()) != grid.n_time)
            throw std::invalid_argument("dispersion_mass_fraction: curve length mismatch");
    double total = 0.0, inside = 0.0;
    for (int i = 0; i < grid.n_time; ++i)
        for (int k = 0; k < grid.n_freq; ++k) {
            const double v = std::abs(grid.at(a, b, i, k));
            total += v;
            const double w = grid.omega(k);
            for (const auto& c : curves) {
                if (std::abs(w - c[i]) <= band) {
                    inside += v;
                    break;
                }
            }
        }
    return total > 0.0 ? inside / total : 0.0;
}

}  // namespace hwmc
