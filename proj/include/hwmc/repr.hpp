#ifndef HWMC_REPR_HPP
#define HWMC_REPR_HPP

#include <complex>
#include <functional>
#include <optional>
#include <variant>
#include <vector>

#include <Eigen/Dense>

#include "hwmc/group.hpp"

namespace hwmc {

using cxd = std::complex<double>;
using Mat = Eigen::MatrixXcd;
using Vec = Eigen::VectorXcd;

// exp(2*pi*i*k/n), angle computed fresh from k mod n
cxd unit_root(long long k, int n);

// Irreducible representation labels of H_n: n^2 one-dimensional labels (u,v)
// and n-1 n-dimensional labels alpha in {1..n-1}.  Sum of squared dimensions
// is n^2*1 + (n-1)*n^2 = n^3.
struct OneDimLabel {
    int u = 0, v = 0;
    bool operator==(const OneDimLabel& o) const { return u == o.u && v == o.v; }
};
struct NDimLabel {
    int alpha = 1;
    bool operator==(const NDimLabel& o) const { return alpha == o.alpha; }
};

struct IrrepLabel {
    std::variant<OneDimLabel, NDimLabel> v;
    static IrrepLabel one_dim(int u, int vv) { return {OneDimLabel{u, vv}}; }
    static IrrepLabel n_dim(int alpha) { return {NDimLabel{alpha}}; }
    bool is_one_dim() const { return std::holds_alternative<OneDimLabel>(v); }
    const OneDimLabel& as_one_dim() const { return std::get<OneDimLabel>(v); }
    const NDimLabel& as_n_dim() const { return std::get<NDimLabel>(v); }
    int dim(int n) const { return is_one_dim() ? 1 : n; }
    bool operator==(const IrrepLabel& o) const { return v == o.v; }
};

// All labels: the n^2 one-dim labels (u fastest), then alpha = 1..n-1.
std::vector<IrrepLabel> all_irrep_labels(int n);

// Shift matrix S (S e_k = e_{k-1}) and clock matrix T = diag(w^j); they obey
// S T = w T S with w = exp(2 pi i/n).
Mat shift_matrix(int n);
Mat clock_matrix(int n);

// One-dimensional irrep: rho_{u,v}(g) = exp(2 pi i (u q + v p)/n).
cxd irrep_1d(int u, int v, const GroupElement& g);

// n-dimensional irrep: rho_alpha(g) = exp(2 pi i alpha (lambda + q p)/n) T^{2 alpha p} S^q,
// alpha in {1..n-1} (alpha = 0 reduces to one-dimensional pieces and is rejected).
Mat irrep_nd(int alpha, const GroupElement& g);

// Representation matrix for any label (1x1 for one-dim labels).
Mat irrep_matrix(const IrrepLabel& label, const GroupElement& g);

// chi_rho(g) = Tr rho(g)
cxd character(const IrrepLabel& label, const GroupElement& g);

// Left regular representation rho_L(h) delta_k = delta_{h<>k}, stored as the
// permutation rank map; dense n^3 x n^3 matrix only on demand.
struct RegularRep {
    int n;
    std::vector<int> image_rank;  // 0-based: column k maps to row image_rank[k]
    Mat dense() const;
};
RegularRep regular_rep(const GroupElement& h);

// Primary projector P_i = (n_i/N_G) sum_g conj(chi_i(g)) rho_L(g) as a dense
// n^3 x n^3 matrix.
Mat primary_projector(const IrrepLabel& label, int n);

// Rank by singular values above tol.
int matrix_rank(const Mat& m, double tol = 1e-9);

enum class ReducedBasis { QAxis, PAxis };

// Reduction of the regular representation to an n-dim irrep on the phi_q or
// phi_p basis:
//   R_Q(h) = exp(2 pi i (h_l + h_p h_q)/n) T^{-2 h_p} S^{-h_q}
//   R_P(h) = exp(2 pi i (h_l - h_q h_p)/n) T^{+2 h_q} S^{-h_p}
// Both send (0,0,l) to exp(2 pi i l/n) * I.
Mat reduced_irrep(ReducedBasis basis, const GroupElement& h);

// Discrete Fourier matrix [W]_{jk} = exp(2 pi i j k/n); normalized scales by
// n^{-1/2} making W unitary.
Mat dft_matrix(int n, bool normalized = false);

// Schur-averaged intertwiner: U = (1/N_G) sum_g rep_a(g) X rep_b(g^{-1}) for a
// random X, so rep_a(h) U = U rep_b(h).  Returns nullopt when the average
// vanishes for several random X (inequivalent representations).
using RepFn = std::function<Mat(const GroupElement&)>;
std::optional<Mat> intertwiner(const RepFn& rep_a, const RepFn& rep_b, int n, int dim,
                               unsigned seed = 12345, int attempts = 4);

}  // namespace hwmc

#endif
