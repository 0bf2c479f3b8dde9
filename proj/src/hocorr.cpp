#include "hwmc/hocorr.hpp"

#include <cmath>

#include "hwmc/gammafn.hpp"

namespace hwmc {

namespace {
const cxd kI(0.0, 1.0);
}

cxd beta_ratio(int n, cxd eta) {
    const double mu = std::norm(eta);
    return kI * (cxd(0.0, mu) - static_cast<double>(n));
}

cxd beta_n(int n, cxd eta) {
    const double mu = std::norm(eta);
    const cxd w = cxd(0.0, mu) - static_cast<double>(n);
    // (-i)^w on the branch -i = e^{-i pi/2}
    const cxd pw = std::exp(w * cxd(0.0, -M_PI / 2.0));
    return -2.0 * M_PI * pw / gamma_complex(w);
}

cxd beta_quotient(int num, int den, cxd eta) {
    cxd q(1.0, 0.0);
    if (num >= den) {
        for (int k = den + 1; k <= num; ++k) q *= beta_ratio(k, eta);
    } else {
        for (int k = num + 1; k <= den; ++k) q /= beta_ratio(k, eta);
    }
    return q;
}

// --- polynomial helpers ------------------------------------------------------

PolyQP PolyQP::constant(cxd v) { return monomial(0, 0, v); }

PolyQP PolyQP::monomial(int dq, int dp, cxd v) {
    PolyQP p;
    p.c[dq][dp] = v;
    return p;
}

PolyQP PolyQP::operator+(const PolyQP& o) const {
    PolyQP r;
    for (int i = 0; i <= kMaxDeg; ++i)
        for (int j = 0; j <= kMaxDeg; ++j) r.c[i][j] = c[i][j] + o.c[i][j];
    return r;
}

PolyQP PolyQP::operator*(const PolyQP& o) const {
    PolyQP r;
    for (int i = 0; i <= kMaxDeg; ++i)
        for (int j = 0; j <= kMaxDeg; ++j) {
            if (c[i][j] == cxd(0.0, 0.0)) continue;
            for (int k = 0; i + k <= kMaxDeg; ++k)
                for (int l = 0; j + l <= kMaxDeg; ++l) r.c[i + k][j + l] += c[i][j] * o.c[k][l];
        }
    return r;
}

PolyQP PolyQP::conjugated() const {
    PolyQP r;
    for (int i = 0; i <= kMaxDeg; ++i)
        for (int j = 0; j <= kMaxDeg; ++j) r.c[i][j] = std::conj(c[i][j]);
    return r;
}

double PolyQP::max_abs_degree(int total_degree) const {
    double m = 0.0;
    for (int i = 0; i <= kMaxDeg; ++i)
        for (int j = 0; j <= kMaxDeg; ++j)
            if (i + j == total_degree) m = std::max(m, std::abs(c[i][j]));
    return m;
}

namespace {

PolyMat2 poly_zero() { return PolyMat2{}; }

PolyMat2 poly_add(const PolyMat2& x, const PolyMat2& y) {
    PolyMat2 r;
    for (int i = 0; i < 2; ++i)
        for (int j = 0; j < 2; ++j) r[i][j] = x[i][j] + y[i][j];
    return r;
}

PolyMat2 poly_mul(const PolyMat2& x, const PolyMat2& y) {
    PolyMat2 r;
    for (int i = 0; i < 2; ++i)
        for (int j = 0; j < 2; ++j)
            r[i][j] = x[i][0] * y[0][j] + x[i][1] * y[1][j];
    return r;
}

// constant 2x2 matrix times a scalar monomial
PolyMat2 poly_from_matrix(const Mat& m, int dq, int dp) {
    PolyMat2 r;
    for (int i = 0; i < 2; ++i)
        for (int j = 0; j < 2; ++j) r[i][j] = PolyQP::monomial(dq, dp, m(i, j));
    return r;
}

PolyMat2 dispersion_poly(cxd d1, cxd d2, cxd d3, cxd eta) {
    PolyMat2 d = poly_zero();
    d[0][0] = PolyQP::monomial(0, 1, cxd(-1.0, 0.0));
    d[1][1] = PolyQP::monomial(1, 0, cxd(1.0, 0.0));
    d[0][1] = PolyQP::constant(eta) + PolyQP::monomial(0, 2, d1) + PolyQP::monomial(1, 1, d2) +
              PolyQP::monomial(2, 0, d3);
    d[1][0] = PolyQP::constant(std::conj(eta)) + PolyQP::monomial(0, 2, std::conj(d1)) +
              PolyQP::monomial(1, 1, std::conj(d2)) + PolyQP::monomial(2, 0, std::conj(d3));
    return d;
}

}  // namespace

Polarization nf_polarization(cxd d1, cxd d2, cxd d3, cxd eta) {
    if (eta == cxd(0.0, 0.0))
        throw std::invalid_argument("nf_polarization: eta = 0 leaves the coupling phase undefined");
    const cxd phase = eta / std::abs(eta);  // e^{i phi}
    const cxd alpha = -0.5 * d2 + 0.5 * std::sqrt(d2 * d2 - 4.0 * d1 * d3);
    Polarization pol;
    pol.alpha = alpha;
    pol.a = Mat(2, 2);
    pol.a << phase * std::sqrt(alpha * std::conj(d1)), d1, alpha,
        -std::conj(phase) * std::sqrt(std::conj(alpha) * d1);
    pol.b = Mat(2, 2);
    pol.b << phase * std::sqrt(std::conj(d3) * (alpha + std::conj(d2))), d2 + std::conj(alpha),
        -std::conj(d3), -std::conj(phase) * std::sqrt(d3 * (std::conj(alpha) + d2));
    return pol;
}

double offdiag_quadratic_residual(const Polarization& pol, cxd d1, cxd d2, cxd d3, cxd eta) {
    const PolyMat2 d = dispersion_poly(d1, d2, d3, eta);
    const PolyMat2 left =
        poly_add(poly_from_matrix(pol.a.adjoint(), 0, 1), poly_from_matrix(pol.b.adjoint(), 1, 0));
    const PolyMat2 right = poly_add(poly_from_matrix(pol.a, 0, 1), poly_from_matrix(pol.b, 1, 0));
    const PolyMat2 first_order = poly_add(d, poly_add(poly_mul(left, d), poly_mul(d, right)));
    return std::max(first_order[0][1].max_abs_degree(2), first_order[1][0].max_abs_degree(2));
}

PolyMat2 conjugated_dispersion(const Polarization& pol, cxd d1, cxd d2, cxd d3, cxd eta) {
    const PolyMat2 d = dispersion_poly(d1, d2, d3, eta);
    const PolyMat2 identity = poly_from_matrix(Mat::Identity(2, 2), 0, 0);
    const PolyMat2 q = poly_add(
        identity, poly_add(poly_from_matrix(pol.a, 0, 1), poly_from_matrix(pol.b, 1, 0)));
    const PolyMat2 qh = poly_add(
        identity,
        poly_add(poly_from_matrix(pol.a.adjoint(), 0, 1), poly_from_matrix(pol.b.adjoint(), 1, 0)));
    return poly_mul(qh, poly_mul(d, q));
}

Mat corrective_canonical_transform(const Polarization& pol, cxd d1, cxd d3, cxd eta) {
    const double r = (pol.alpha * std::conj(eta)).real();
    const double r1 = (d1 * std::conj(eta)).real();
    const double r3 = (d3 * std::conj(eta)).real();
    const double bracket = 1.0 - 4.0 * r * r - 4.0 * r1 * r3;
    Mat m(2, 2);
    m << 1.0 - 2.0 * r, 2.0 * r1, 2.0 * r3, 1.0 + 2.0 * r;
    return m / std::sqrt(std::abs(bracket));
}

// --- local series ------------------------------------------------------------

int LocalSeries::slot(int n) {
    switch (n) {
        case -3: return 0;
        case -1: return 1;
        case 1: return 2;
        case 3: return 3;
    }
    throw std::out_of_range("LocalSeries: power must be in {-3,-1,1,3}");
}

cxd LocalSeries::s_at(int n) const {
    return (n == -3 || n == -1 || n == 1 || n == 3) ? s[slot(n)] : cxd(0.0, 0.0);
}
cxd LocalSeries::s_tilde_at(int n) const {
    return (n == -3 || n == -1 || n == 1 || n == 3) ? s_tilde[slot(n)] : cxd(0.0, 0.0);
}

namespace {

void fill_sigma(LocalSeries& ls, cxd eta) {
    for (int n : {-3, -1, 1, 3}) {
        ls.sigma[LocalSeries::slot(n)] = ls.s_at(-n) * beta_quotient(-n, 0, eta);
        ls.sigma_tilde[LocalSeries::slot(n)] = ls.s_tilde_at(-n) * beta_quotient(-n - 1, -1, eta);
    }
}

// inhomogeneous terms of the two O(eps) equations at Laurent offset k
cxd inhom1(const QuadraticDispersion& qd, int k) {
    switch (k) {
        case -1: return qd.a1 * beta_quotient(0, -2, qd.eta);
        case 1: return qd.b1 * (cxd(0.0, -0.5) + beta_quotient(0, -1, qd.eta));
        case 3: return cxd(qd.c1, 0.0);
    }
    return cxd(0.0, 0.0);
}

cxd inhom2(const QuadraticDispersion& qd, int k) {
    switch (k) {
        case -3: return -qd.c2 * beta_quotient(-1, -3, qd.eta);
        case -1: return -qd.b2 * (cxd(0.0, -0.5) + beta_quotient(-1, -2, qd.eta));
        case 1: return cxd(-qd.a2, 0.0);
    }
    return cxd(0.0, 0.0);
}

}  // namespace

LocalSeries local_coefficients(const QuadraticDispersion& qd) {
    if (qd.eta == cxd(0.0, 0.0))
        throw std::invalid_argument("local_coefficients: eta must be nonzero");
    const cxd eta = qd.eta;
    LocalSeries ls;
    const cxd i_c1_3 = kI * qd.c1 / 3.0;
    const cxd i_c2_3 = kI * qd.c2 / 3.0;
    ls.s[LocalSeries::slot(3)] = i_c1_3;
    ls.s_tilde[LocalSeries::slot(3)] = i_c1_3;
    ls.s[LocalSeries::slot(1)] =
        kI * (qd.b1 - qd.a2) * beta_quotient(0, -1, eta) + 0.5 * qd.b1;
    ls.s_tilde[LocalSeries::slot(1)] =
        kI * (qd.b1 - qd.a2) * beta_quotient(1, 0, eta) - 0.5 * qd.b1;
    ls.s[LocalSeries::slot(-1)] = kI * (qd.b2 - qd.a1) * beta_quotient(0, -2, eta) +
                                  0.5 * qd.b2 * beta_quotient(0, -1, eta);
    ls.s_tilde[LocalSeries::slot(-1)] = kI * (qd.b2 - qd.a1) * beta_quotient(0, -2, eta) -
                                        0.5 * qd.b2 * beta_quotient(-1, -2, eta);
    ls.s[LocalSeries::slot(-3)] = i_c2_3 * beta_quotient(0, -3, eta);
    ls.s_tilde[LocalSeries::slot(-3)] = i_c2_3 * beta_quotient(-1, -4, eta);
    fill_sigma(ls, eta);
    return ls;
}

LocalSeries local_coefficients_by_solve(const QuadraticDispersion& qd) {
    if (qd.eta == cxd(0.0, 0.0))
        throw std::invalid_argument("local_coefficients_by_solve: eta must be nonzero");
    const double mu = qd.mu();
    LocalSeries ls;
    for (int n : {-3, -1, 1, 3}) {
        // -r(n) s_n - mu st_n + I1(n) = 0,  s_n - st_n + I2(n) = 0
        const cxd r = beta_ratio(n, qd.eta);
        const cxd i1 = inhom1(qd, n), i2 = inhom2(qd, n);
        const cxd sn = (i1 - mu * i2) / (r + mu);
        ls.s[LocalSeries::slot(n)] = sn;
        ls.s_tilde[LocalSeries::slot(n)] = sn + i2;
    }
    fill_sigma(ls, qd.eta);
    return ls;
}

double local_series_residual(const LocalSeries& ls, const QuadraticDispersion& qd) {
    const double mu = qd.mu();
    double worst = 0.0;
    for (int k = -4; k <= 4; ++k) {
        const cxd e1 = -beta_ratio(k, qd.eta) * ls.s_at(k) - mu * ls.s_tilde_at(k) + inhom1(qd, k);
        const cxd e2 = ls.s_at(k) - ls.s_tilde_at(k) + inhom2(qd, k);
        worst = std::max({worst, std::abs(e1), std::abs(e2)});
    }
    return worst;
}

// --- corrected WKB -----------------------------------------------------------

cxd corrected_uncoupled_wkb(int channel, const QuadraticDispersion& qd, double arg) {
    const double eps = qd.epsilon;
    double denom, cphase;
    if (channel == 1) {
        denom = 1.0 - eps * qd.b1 * arg;
        cphase = eps * qd.c1 * arg * arg * arg / 3.0;
    } else if (channel == 2) {
        denom = 1.0 + eps * qd.b2 * arg;
        cphase = eps * qd.c2 * arg * arg * arg / 3.0;
    } else {
        throw std::invalid_argument("corrected_uncoupled_wkb: channel must be 1 or 2");
    }
    if (denom <= 0.0)
        throw std::domain_error("corrected_uncoupled_wkb: amplitude singularity (1 -+ eps b arg <= 0)");
    return std::exp(cxd(0.0, cphase)) / std::sqrt(denom);
}

cxd coupled_wkb_phase_correction(const QuadraticDispersion& qd, double q) {
    if (q == 0.0) throw std::domain_error("coupled_wkb_phase_correction: log singularity at q = 0");
    const double mu = qd.mu();
    return -mu * std::log(std::abs(q)) * cxd(1.0, 0.0) +
           qd.epsilon * (qd.c1 * q * q * q / 3.0 + mu * (qd.a2 - qd.b1) * q);
}

// --- channel matching --------------------------------------------------------

namespace {

// q^{-i mu} on the branch -1 = e^{+i pi} used by the channel matching; the
// jump across q = 0 is then the decreasing factor e^{-pi mu}
cxd local_power(double q, double mu) {
    const cxd logq = q >= 0.0 ? cxd(std::log(q), 0.0) : cxd(std::log(-q), M_PI);
    return std::exp(cxd(0.0, -mu) * logq);
}

void check_matching_guards(const QuadraticDispersion& qd, double point, const char* name) {
    const double mu = qd.mu();
    const double eps = qd.epsilon;
    const double coeff = std::max({std::abs(qd.a1), std::abs(qd.b1), std::abs(qd.c1),
                                   std::abs(qd.a2), std::abs(qd.b2), std::abs(qd.c2)});
    if (mu / (point * point) > 0.3)
        throw std::invalid_argument(std::string("match_channels: |eta|^2/") + name +
                                    "^2 guard violated");
    if (eps * coeff * std::abs(point) > 0.3)
        throw std::invalid_argument(std::string("match_channels: eps*coeff*") + name +
                                    " guard violated");
}

}  // namespace

ChannelMatch match_channels(const QuadraticDispersion& qd, double q_star, double q_star_star,
                            double p_star) {
    if (!(q_star < 0.0) || !(q_star_star > 0.0) || !(p_star > 0.0))
        throw std::invalid_argument("match_channels: need q_star < 0 < q_star_star, p_star > 0");
    check_matching_guards(qd, q_star, "q*");
    check_matching_guards(qd, q_star_star, "q**");
    check_matching_guards(qd, p_star, "p*");

    const double mu = qd.mu();
    const double eps = qd.epsilon;
    ChannelMatch m;
    m.upper = std::exp(-M_PI * mu) *
              std::exp(cxd(0.0, mu) * (std::log(std::abs(q_star)) - std::log(q_star_star))) *
              std::exp(cxd(0.0, mu * eps * (qd.b1 - qd.a2)) * (q_star - q_star_star));
    m.lower = -2.0 * M_PI * std::exp(-M_PI * mu / 2.0) /
              (qd.eta * gamma_complex(cxd(0.0, mu))) *
              std::exp(cxd(0.0, mu) * (std::log(std::abs(q_star)) + std::log(p_star))) *
              std::exp(cxd(0.0, mu * eps) *
                       ((qd.b1 - qd.a2) * q_star - (qd.b2 - qd.a1) * p_star));

    // jump relative to the coupled WKB form, which keeps the log phase: the
    // ratio local/coupled is point-independent inside the guards
    const LocalSeries ls = local_coefficients(qd);
    auto local1 = [&](double q) {
        cxd theta(0.0, 0.0);
        for (int k : {-3, -1, 1, 3}) theta += ls.s_at(k) * std::pow(q, k);
        return local_power(q, mu) * (1.0 + eps * theta);
    };
    auto coupled1 = [&](double q) {
        const double amp = 1.0 / std::sqrt(std::abs(-1.0 + eps * qd.b1 * q + mu / (q * q)));
        const double phase = -mu * std::log(std::abs(q)) +
                             eps * (qd.c1 * q * q * q / 3.0 + mu * (qd.a2 - qd.b1) * q);
        return amp * std::exp(cxd(0.0, phase));
    };
    m.upper_coupled = (local1(q_star_star) / coupled1(q_star_star)) /
                      (local1(q_star) / coupled1(q_star));
    return m;
}

// --- t-representation --------------------------------------------------------

cxd t_rep_closed_form(int channel, const QuadraticDispersion& qd, double t) {
    const double eps = qd.epsilon;
    const double s2t = std::sqrt(2.0) * t;
    if (channel == 1) {
        const double denom = 1.0 + eps * (-qd.b1 + 2.0 * qd.c1) * s2t;
        if (denom <= 0.0) throw std::domain_error("t_rep_closed_form: amplitude denominator <= 0");
        return std::sqrt(2.0 * M_PI) * std::exp(cxd(0.0, M_PI / 4.0)) *
               std::exp(cxd(0.0, -0.5 * t * t)) *
               std::exp(cxd(0.0, eps * qd.c1 * s2t * s2t * s2t / 3.0)) / std::sqrt(denom);
    }
    if (channel == 2) {
        const double denom = 1.0 + eps * (qd.b2 - 2.0 * qd.c2) * s2t;
        if (denom <= 0.0) throw std::domain_error("t_rep_closed_form: amplitude denominator <= 0");
        return std::sqrt(2.0 * M_PI) * std::exp(cxd(0.0, -M_PI / 4.0)) *
               std::exp(cxd(0.0, 0.5 * t * t)) *
               std::exp(cxd(0.0, eps * qd.c2 * s2t * s2t * s2t / 3.0)) / std::sqrt(denom);
    }
    throw std::invalid_argument("t_rep_closed_form: channel must be 1 or 2");
}

cxd t_rep_flat_form(int channel, double t) {
    if (channel == 1)
        return std::sqrt(2.0 * M_PI) * std::exp(cxd(0.0, M_PI / 4.0 - 0.5 * t * t));
    if (channel == 2)
        return std::sqrt(2.0 * M_PI) * std::exp(cxd(0.0, -M_PI / 4.0 + 0.5 * t * t));
    throw std::invalid_argument("t_rep_flat_form: channel must be 1 or 2");
}

namespace {

// single-channel t-representation operator coefficients:
// c2(t) psi'' + c1(t) psi' + c0(t) psi = 0
struct TRepChannel {
    double ca = 0.0, cb = 0.0, cc = 0.0;  // quadratic coefficients of the channel
    double sign = 1.0;                    // -p for channel 1, +q for channel 2
    double eps = 1.0;

    cxd coef2() const { return cxd(0.5 * eps * (-ca + cb - cc), 0.0); }
    cxd coef1(double t) const {
        // q = (t + i d/dt)/sqrt2 and -p = (-t + i d/dt)/sqrt2 share the +i/sqrt2
        // derivative coefficient; only the multiplicative t term carries sign
        return cxd(0.0, 1.0 / std::sqrt(2.0)) + cxd(0.0, eps * t * (cc - ca));
    }
    cxd coef0(double t) const {
        return cxd(sign * t / std::sqrt(2.0), 0.0) +
               0.5 * eps * cxd((ca + cb + cc) * t * t, cc - ca);
    }
};

TRepChannel trep_channel(int channel, const QuadraticDispersion& qd) {
    TRepChannel ch;
    ch.eps = qd.epsilon;
    if (channel == 1) {
        // D11 = -p + eps(a1 p^2 + b1 (pq)_sym + c1 q^2): with p = (t - i d/dt)/sqrt2
        // the -p term carries sign -1 and the roles (ca, cb, cc) = (a1, b1, c1)
        ch.ca = qd.a1;
        ch.cb = qd.b1;
        ch.cc = qd.c1;
        ch.sign = -1.0;
    } else {
        // D22 = q + eps(c2 p^2 + b2 (pq)_sym + a2 q^2)
        ch.ca = qd.c2;
        ch.cb = qd.b2;
        ch.cc = qd.a2;
        ch.sign = 1.0;
    }
    return ch;
}

cxd closed_form_derivative(int channel, const QuadraticDispersion& qd, double t) {
    const double h = 1e-6;
    return (t_rep_closed_form(channel, qd, t + h) - t_rep_closed_form(channel, qd, t - h)) /
           (2.0 * h);
}

}  // namespace

TRepComparison t_rep_compare(const QuadraticDispersion& qd, double t_max, double dt,
                             double amp_tol, double phase_tol) {
    TRepComparison cmp;
    const int half = static_cast<int>(std::round(t_max / dt));
    const int count = 2 * half + 1;
    cmp.t.resize(count);
    cmp.ode1.resize(count);
    cmp.ode2.resize(count);
    for (int i = 0; i < count; ++i) cmp.t[i] = (i - half) * dt;

    OdeOptions opts;
    opts.rel_tol = 1e-10;
    opts.abs_tol = 1e-12;

    for (int channel : {1, 2}) {
        const TRepChannel ch = trep_channel(channel, qd);
        const bool second_order = std::abs(ch.coef2()) > 1e-14;
        OdeRhs rhs = [&ch, second_order](double t, const Vec& y, Vec& dy) {
            if (second_order) {
                dy(0) = y(1);
                dy(1) = -(ch.coef1(t) * y(1) + ch.coef0(t) * y(0)) / ch.coef2();
            } else {
                // degenerate quadratic terms: the equation is first order
                dy(0) = -ch.coef0(t) * y(0) / ch.coef1(t);
                dy(1) = 0.0;
            }
        };
        auto& dst = channel == 1 ? cmp.ode1 : cmp.ode2;
        Vec y0(2);
        y0 << t_rep_closed_form(channel, qd, 0.0), closed_form_derivative(channel, qd, 0.0);
        dst[half] = y0(0);
        for (double dir : {+1.0, -1.0}) {
            double t = 0.0;
            Vec y = y0;
            for (int k = 1; k <= half; ++k) {
                const double tn = dir * k * dt;
                const OdeSolution sol = integrate_ode(rhs, t, tn, y, opts);
                t = sol.t.back();
                y = sol.y.back();
                dst[half + static_cast<int>(dir) * k] = y(0);
            }
        }
    }

    // fitted constant phase offset for channel 2, from the near-origin samples
    double offset_acc = 0.0;
    int offset_count = 0;
    for (int i = 0; i < count; ++i) {
        if (std::abs(cmp.t[i]) > 1.0) continue;
        offset_acc += std::arg(t_rep_closed_form(2, qd, cmp.t[i]) / cmp.ode2[i]);
        ++offset_count;
    }
    cmp.offset2 = offset_count ? offset_acc / offset_count : 0.0;

    auto window = [&](bool corrected) {
        double w = 0.0;
        for (int k = 0; k <= half; ++k) {
            bool ok = true;
            for (int idx : {half + k, half - k}) {
                const double t = cmp.t[idx];
                for (int channel : {1, 2}) {
                    cxd ref;
                    if (corrected) {
                        ref = t_rep_closed_form(channel, qd, t);
                    } else {
                        ref = t_rep_flat_form(channel, t);
                    }
                    const cxd ode = channel == 1 ? cmp.ode1[idx] : cmp.ode2[idx];
                    const double amp_err = std::abs(std::abs(ref) - std::abs(ode)) / std::abs(ode);
                    double ph_err = std::arg(ref / ode);
                    if (channel == 2) ph_err -= cmp.offset2;
                    while (ph_err > M_PI) ph_err -= 2.0 * M_PI;
                    while (ph_err < -M_PI) ph_err += 2.0 * M_PI;
                    if (amp_err > amp_tol || std::abs(ph_err) > phase_tol) ok = false;
                }
            }
            if (!ok) break;
            w = k * dt;
        }
        return w;
    };
    cmp.window_corrected = window(true);
    cmp.window_flat = window(false);
    return cmp;
}

}  // namespace hwmc
