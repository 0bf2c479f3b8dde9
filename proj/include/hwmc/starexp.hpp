#ifndef HWMC_STAREXP_HPP
#define HWMC_STAREXP_HPP

#include <cstdint>
#include <map>
#include <vector>

#include "hwmc/symbolcalc.hpp"

namespace hwmc {

// Transfer matrix M_A(tau1,tau2) = sum_{tau'} K(tau1,tau',tau2) A(tau'), so
// that M_A . B = A * B for every grid B.  When A is supported on a single
// w = alpha plane, rows and columns of M_A vanish off that plane and the
// action reduces to an n^2 x n^2 block.
struct TransferMatrix {
    int n = 3;
    int sector = -1;  // w-plane index when A is plane-supported, else -1
    Mat dense;        // n^3 x n^3

    // the n^2 x n^2 block on the support plane (requires sector >= 0)
    Mat sector_block() const;
};

TransferMatrix transfer_matrix(const SymbolGrid& a);
SymbolGrid apply_transfer(const TransferMatrix& m, const SymbolGrid& b);

// support plane of a grid: w index if the grid vanishes off exactly one
// w-plane, -1 otherwise
int support_plane(const SymbolGrid& a, double tol = 0.0);

// star-unit of the w = alpha sector: symbol of the identity section on that
// fiber (ones on the plane for alpha = 0).
SymbolGrid star_unit(int n, int alpha);

// A^{*N} = M_A^{N-1} . A, N >= 1
SymbolGrid star_power(const SymbolGrid& a, int N);

// (*-unit + (i t / N) A)^{*N}; converges to the symbol of exp(i t M) at rate
// O(1/N) when A is the symbol of M on the sector.
SymbolGrid star_exp(const SymbolGrid& a, double t, int N);

// --- brute-force oracles ----------------------------------------------------

inline constexpr long kPathBudget = 10'000'000;

// Exhaustive evaluation of A^{*N}(tau0) as the path sum
//   sum_{tau1..tau_{N-1}} M(tau0,tau1) ... M(tau_{N-2},tau_{N-1}) A(tau_{N-1}),
// either over the full dual lattice or over the support plane.  Throws when
// (#points)^(N-1) exceeds the budget.
SymbolGrid path_sum_oracle(const SymbolGrid& a, int N, bool reduced_plane = true,
                           long budget = kPathBudget);

// Discrete path over the phase-space plane plus its bookkeeping, for the
// regrouped evaluation below and for desk-scale demonstrations.
struct PathStats {
    std::vector<int> incidence;             // visits per plane point, sums to path length
    std::vector<std::vector<int>> pairs;    // adjacent-pair coincidence table
};
PathStats path_stats(const std::vector<int>& path, int points);

// Incidence/phase-regrouped evaluation of the star power of exp(i t H / N) on
// the plane carrying H.  All (dual path, symbol path) pairs are enumerated and
// grouped by (incidence vector of the N path points, symplectic phase class);
// the grouped classes are then resummed as
//   (1/n^2)^(N-1) sum_cls mult(cls) exp((i t/N) sum_l N_l H_l) w^m.
struct MeasureClassTable {
    // key: packed incidence counts (4 bits per plane point) and phase class
    std::map<std::pair<std::uint64_t, int>, double> classes;
    double total_multiplicity = 0.0;
};
struct MeasureGroupedSum {
    int n = 3;
    int alpha = 1;
    int N = 1;
    Vec reconstructed;                      // length n^2, plane rank order
    std::vector<MeasureClassTable> tables;  // one per plane output point
    double dual_paths_per_output = 0.0;     // (n^2)^(N-1)
    double symbol_paths_per_dual = 0.0;     // (n^2)^(N-1)
};
MeasureGroupedSum measure_regrouped_sum(const SymbolGrid& h, double t, int N,
                                        long budget = kPathBudget);

// Plane values of a grid supported on w = alpha (length n^2, u fastest).
Vec plane_values(const SymbolGrid& a, int alpha);
SymbolGrid grid_from_plane(const Vec& plane, int alpha, int n);

}  // namespace hwmc

#endif
