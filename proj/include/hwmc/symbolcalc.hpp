#ifndef HWMC_SYMBOLCALC_HPP
#define HWMC_SYMBOLCALC_HPP

#include <vector>

#include "hwmc/repr.hpp"

namespace hwmc {

// Zobin double transform for H_n: sections of the dual bundle are carried to
// functions on the group (as a set) by the inverse noncommutative Fourier
// transform, then to functions on the dual lattice by the commutative
// transform on Z_n^3.  Dual lattice points (u,v,w) share the group's
// lexicographic rank (u fastest): rank = 1 + u + n v + n^2 w.

// Plancherel weight used by the inverse noncommutative transform.  Exact uses
// nu_rho = dim(rho)/n^3, which makes forward/inverse a strict round trip.
// InverseDim uses nu_rho = 1/dim(rho); outputs then differ fiberwise by
// n^3/dim^2 and the round trip is no longer exact.
enum class PlancherelWeight { Exact, InverseDim };

// One complex matrix per irrep label: 1x1 for the n^2 one-dim labels, n x n
// for the n-1 labels alpha = 1..n-1.  Label order matches all_irrep_labels.
struct DualSection {
    int n = 3;
    std::vector<Mat> fibers;

    static DualSection zero(int n);
    Mat& fiber(const IrrepLabel& label);
    const Mat& fiber(const IrrepLabel& label) const;
};

// Complex function on the group, length n^3, indexed by element rank.
struct GroupFunction {
    int n = 3;
    Vec values;
    static GroupFunction zero(int n);
};

// Complex function on the dual lattice (u,v,w), length n^3, same rank codec.
struct SymbolGrid {
    int n = 3;
    Vec values;
    static SymbolGrid zero(int n);
    cxd& at(int u, int v, int w);
    cxd at(int u, int v, int w) const;
};

int dual_rank(int u, int v, int w, int n);  // 0-based

// Delta embedding of an n x n matrix at the NDim(alpha) fiber.
DualSection embed_matrix(const Mat& m, int alpha, int n);

// f_hat(rho) = sum_g f(g) rho(g)
DualSection ncft_forward(const GroupFunction& f);

// a(g) = sum_rho nu_rho tr(rho(g)^dagger s(rho))
GroupFunction ncft_inverse(const DualSection& s,
                           PlancherelWeight weight = PlancherelWeight::Exact);

// A(tau) = sum_g f(g) tau(g) with tau_{u,v,w}(g) = exp(2 pi i (uq+vp+w lambda)/n)
SymbolGrid dft3(const GroupFunction& f);
// f(g) = (1/n^3) sum_tau conj(tau(g)) A(tau)
GroupFunction dft3_inverse(const SymbolGrid& a);

// symbol = dft3 o ncft_inverse o embed; supported on the w = alpha plane.
SymbolGrid symbol_of_matrix(const Mat& m, int alpha, int n,
                            PlancherelWeight weight = PlancherelWeight::Exact);
SymbolGrid symbol_of_section(const DualSection& s,
                             PlancherelWeight weight = PlancherelWeight::Exact);

// quantize = ncft_forward o dft3_inverse; exact inverse of symbol_of_section
// under the Exact weight.
DualSection quantize(const SymbolGrid& a);

// Star product kernel K(tau,tau1,tau2) = (1/n^3)^2 sum_{h1,h2}
// tau(h1<>h2) tau1(-h1) tau2(-h2).  The lambda sums force w1 = w2 = w; on that
// support
//   w = 0:  K = delta_{u1,u} delta_{v1,v} delta_{u2,u} delta_{v2,v}
//   w != 0: K = (1/n^2) exp(2 pi i w^{-1} [(u-u2)(v-v1) + (v-v2)(u1-u)]/n)
// with w^{-1} the inverse of w mod n.
struct StarKernel {
    int n = 3;
    // dense[t][t1*order + t2], only stored for n <= kDenseLimit
    std::vector<std::vector<cxd>> dense;
    static constexpr int kDenseLimit = 5;
};

cxd star_kernel_entry(int n, int t, int t1, int t2);  // 0-based dual ranks
StarKernel star_kernel(int n);  // dense; throws for n > kDenseLimit

// [A*B](tau) = sum K(tau,tau1,tau2) A(tau1) B(tau2).  Dense contraction for
// n <= kDenseLimit; group-convolution evaluation otherwise.
SymbolGrid star(const SymbolGrid& a, const SymbolGrid& b);
SymbolGrid star_convolution(const SymbolGrid& a, const SymbolGrid& b);

// 27x27 (order x order) slice K(tau, ., .) at fixed output tau, for golden
// comparisons and CSV export.
Mat star_kernel_slice(int n, int u, int v, int w);

}  // namespace hwmc

#endif
