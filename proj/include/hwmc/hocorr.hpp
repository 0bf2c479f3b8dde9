#ifndef HWMC_HOCORR_HPP
#define HWMC_HOCORR_HPP

#include <array>
#include <vector>

#include "hwmc/ode.hpp"

namespace hwmc {

// Quadratic corrections to the avoided-crossing normal form
//   D(q,p) = [[-p + eps(a1 p^2 + b1 pq + c1 q^2), eta],
//             [conj(eta), q + eps(c2 p^2 + b2 pq + a2 q^2)]].
struct QuadraticDispersion {
    double a1 = 0.0, b1 = 0.0, c1 = 0.0;
    double a2 = 0.0, b2 = 0.0, c2 = 0.0;
    cxd eta = 1.0;
    double epsilon = 1.0;

    double mu() const { return std::norm(eta); }  // |eta|^2
};

// beta_n / beta_{n-1} = i (i |eta|^2 - n), with
// beta_n = -2 pi (-i)^{i|eta|^2 - n} / Gamma(i|eta|^2 - n).
cxd beta_ratio(int n, cxd eta);
cxd beta_n(int n, cxd eta);                 // via the complex gamma function
cxd beta_quotient(int num, int den, cxd eta);  // beta_num / beta_den by the recursion

// --- near-identity polarization change --------------------------------------

// Degree-bounded complex polynomial in (q,p); coefficient (i,j) multiplies
// q^i p^j.
struct PolyQP {
    static constexpr int kMaxDeg = 6;
    std::array<std::array<cxd, kMaxDeg + 1>, kMaxDeg + 1> c{};

    static PolyQP constant(cxd v);
    static PolyQP monomial(int dq, int dp, cxd v);
    PolyQP operator+(const PolyQP& o) const;
    PolyQP operator*(const PolyQP& o) const;
    PolyQP conjugated() const;  // conj of coefficients (q,p real variables)
    double max_abs_degree(int total_degree) const;
};

using PolyMat2 = std::array<std::array<PolyQP, 2>, 2>;

struct Polarization {
    Mat a;  // 2x2
    Mat b;  // 2x2
    cxd alpha;
};

// Matrices a, b of Q(z) = 1 + a p + b q removing the quadratic monomials from
// the off-diagonals of Q^dagger D Q at first order in the correction;
// alpha = -d2/2 + sqrt(d2^2 - 4 d1 d3)/2.
Polarization nf_polarization(cxd d1, cxd d2, cxd d3, cxd eta);

// Largest |coefficient| of the quadratic off-diagonal monomials of the
// first-order conjugation D2 + (a^H p + b^H q) D_NF + D_NF (a p + b q).
double offdiag_quadratic_residual(const Polarization& pol, cxd d1, cxd d2, cxd d3, cxd eta);

// Full product Q^H(z) D(z) Q(z) as a polynomial matrix (all orders).
PolyMat2 conjugated_dispersion(const Polarization& pol, cxd d1, cxd d2, cxd d3, cxd eta);

// Corrective canonical transform restoring (-p, q) diagonals; determinant 1.
Mat corrective_canonical_transform(const Polarization& pol, cxd d1, cxd d3, cxd eta);

// --- local series ------------------------------------------------------------

// psi1 = q^{-i mu}(1 + eps Theta1), psi2 = -conj(eta) q^{-i mu - 1}(1 + eps Theta2)
// with Theta_i supported on powers n in {-3,-1,1,3}.
struct LocalSeries {
    std::array<cxd, 4> s{};        // s_{-3}, s_{-1}, s_1, s_3
    std::array<cxd, 4> s_tilde{};  // same order
    std::array<cxd, 4> sigma{};    // sigma_{-3}, sigma_{-1}, sigma_1, sigma_3
    std::array<cxd, 4> sigma_tilde{};

    static int slot(int n);  // -3,-1,1,3 -> 0..3
    cxd s_at(int n) const;
    cxd s_tilde_at(int n) const;
};

LocalSeries local_coefficients(const QuadraticDispersion& qd);
// same coefficients from the per-power 2x2 linear systems
LocalSeries local_coefficients_by_solve(const QuadraticDispersion& qd);

// Largest |coefficient| of the O(eps) plug-back residual of the coupled system,
// expanded over the Laurent powers q^{-i mu + k}.
double local_series_residual(const LocalSeries& ls, const QuadraticDispersion& qd);

// --- corrected WKB -----------------------------------------------------------

// psi1(q) = exp(i eps c1 q^3/3)/sqrt(1 - eps b1 q),
// phi2(p) = exp(i eps c2 p^3/3)/sqrt(1 + eps b2 p)
cxd corrected_uncoupled_wkb(int channel, const QuadraticDispersion& qd, double arg);

// theta(q) = -mu ln q + eps (c1 q^3/3 + mu (a2 - b1) q); q != 0
cxd coupled_wkb_phase_correction(const QuadraticDispersion& qd, double q);

// --- channel matching --------------------------------------------------------

struct ChannelMatch {
    cxd upper;          // coefficient of the outgoing corrected uncoupled WKB, channel 1
    cxd lower;          // coefficient of the outgoing corrected uncoupled WKB, channel 2
    cxd upper_coupled;  // coefficient relative to the coupled WKB form (log phase kept)
};

// q_star < 0 < q_star_star, p_star > 0; unit incoming amplitude.
ChannelMatch match_channels(const QuadraticDispersion& qd, double q_star, double q_star_star,
                            double p_star);

// --- t-representation --------------------------------------------------------

// Closed forms from the metaplectic transform of the corrected uncoupled modes:
//   psi1(t) = sqrt(2 pi) e^{ i pi/4} e^{-i t^2/2} e^{i eps c1 (sqrt2 t)^3/3}
//             / sqrt(1 + eps(-b1 + 2 c1) sqrt2 t)
//   psi2(t) = sqrt(2 pi) e^{-i pi/4} e^{+i t^2/2} e^{i eps c2 (sqrt2 t)^3/3}
//             / sqrt(1 + eps( b2 - 2 c2) sqrt2 t)
cxd t_rep_closed_form(int channel, const QuadraticDispersion& qd, double t);
cxd t_rep_flat_form(int channel, double t);  // eps = 0 limit

// Direct integration of the single-channel t-representation equations obtained
// by substituting q = (t + i d/dt)/sqrt2, p = (t - i d/dt)/sqrt2 (Weyl
// symmetrized), keeping all terms.  Integrates outward from t = 0 seeded with
// the closed form and samples both channels on a uniform grid.
struct TRepComparison {
    std::vector<double> t;
    std::vector<cxd> ode1, ode2;
    double window_corrected = 0.0;  // largest half-width where the closed forms match
    double window_flat = 0.0;       // same for the eps = 0 forms
    double offset2 = 0.0;           // fitted channel-2 constant phase offset
};
TRepComparison t_rep_compare(const QuadraticDispersion& qd, double t_max, double dt,
                             double amp_tol, double phase_tol);

}  // namespace hwmc

#endif
