#include "hwmc/repr.hpp"

#include <cmath>
#include <functional>
#include <random>

namespace hwmc {

cxd unit_root(long long k, int n) {
    const int r = mod_n(k, n);
    const double angle = 2.0 * M_PI * r / n;
    return cxd(std::cos(angle), std::sin(angle));
}

std::vector<IrrepLabel> all_irrep_labels(int n) {
    require_valid_modulus(n);
    std::vector<IrrepLabel> out;
    for (int v = 0; v < n; ++v)
        for (int u = 0; u < n; ++u) out.push_back(IrrepLabel::one_dim(u, v));
    for (int a = 1; a < n; ++a) out.push_back(IrrepLabel::n_dim(a));
    return out;
}

Mat shift_matrix(int n) {
    Mat s = Mat::Zero(n, n);
    for (int j = 0; j < n; ++j) s(j, (j + 1) % n) = 1.0;
    return s;
}

Mat clock_matrix(int n) {
    Mat t = Mat::Zero(n, n);
    for (int j = 0; j < n; ++j) t(j, j) = unit_root(j, n);
    return t;
}

cxd irrep_1d(int u, int v, const GroupElement& g) {
    return unit_root(static_cast<long long>(u) * g.q + static_cast<long long>(v) * g.p, g.n);
}

// T^a S^b without repeated multiplication: entry (j, j+b) = w^{a j}.
static Mat clock_shift_power(int a, int b, int n) {
    Mat m = Mat::Zero(n, n);
    for (int j = 0; j < n; ++j) m(j, mod_n(j + b, n)) = unit_root(static_cast<long long>(a) * j, n);
    return m;
}

Mat irrep_nd(int alpha, const GroupElement& g) {
    const int n = g.n;
    if (mod_n(alpha, n) == 0)
        throw std::invalid_argument("irrep_nd: alpha = 0 mod n reduces to one-dimensional pieces");
    const cxd phase =
        unit_root(static_cast<long long>(alpha) * (g.lambda + static_cast<long long>(g.q) * g.p), n);
    return phase * clock_shift_power(mod_n(2LL * alpha * g.p, n), g.q, n);
}

Mat irrep_matrix(const IrrepLabel& label, const GroupElement& g) {
    if (label.is_one_dim()) {
        Mat m(1, 1);
        m(0, 0) = irrep_1d(label.as_one_dim().u, label.as_one_dim().v, g);
        return m;
    }
    return irrep_nd(label.as_n_dim().alpha, g);
}

cxd character(const IrrepLabel& label, const GroupElement& g) {
    return irrep_matrix(label, g).trace();
}

RegularRep regular_rep(const GroupElement& h) {
    const int n = h.n;
    const int order = n * n * n;
    RegularRep rep{n, std::vector<int>(order)};
    for (int k = 0; k < order; ++k)
        rep.image_rank[k] = element_rank(multiply(h, element_from_rank(k + 1, n))) - 1;
    return rep;
}

Mat RegularRep::dense() const {
    const int order = n * n * n;
    Mat m = Mat::Zero(order, order);
    for (int k = 0; k < order; ++k) m(image_rank[k], k) = 1.0;
    return m;
}

Mat primary_projector(const IrrepLabel& label, int n) {
    const int order = n * n * n;
    const double weight = static_cast<double>(label.dim(n)) / order;
    Mat p = Mat::Zero(order, order);
    for (const auto& g : all_elements(n)) {
        const cxd coef = weight * std::conj(character(label, g));
        if (std::abs(coef) == 0.0) continue;
        const auto rep = regular_rep(g);
        for (int k = 0; k < order; ++k) p(rep.image_rank[k], k) += coef;
    }
    return p;
}

int matrix_rank(const Mat& m, double tol) {
    Eigen::JacobiSVD<Mat> svd(m);
    int r = 0;
    for (int i = 0; i < svd.singularValues().size(); ++i)
        if (svd.singularValues()(i) > tol) ++r;
    return r;
}

Mat reduced_irrep(ReducedBasis basis, const GroupElement& h) {
    const int n = h.n;
    if (basis == ReducedBasis::QAxis) {
        const cxd phase = unit_root(h.lambda + static_cast<long long>(h.p) * h.q, n);
        return phase * clock_shift_power(mod_n(-2LL * h.p, n), mod_n(-h.q, n), n);
    }
    const cxd phase = unit_root(h.lambda - static_cast<long long>(h.q) * h.p, n);
    return phase * clock_shift_power(mod_n(2LL * h.q, n), mod_n(-h.p, n), n);
}

Mat dft_matrix(int n, bool normalized) {
    if (n < 2) throw std::invalid_argument("dft_matrix: n must be >= 2");
    Mat w(n, n);
    for (int j = 0; j < n; ++j)
        for (int k = 0; k < n; ++k) w(j, k) = unit_root(static_cast<long long>(j) * k, n);
    if (normalized) w /= std::sqrt(static_cast<double>(n));
    return w;
}

std::optional<Mat> intertwiner(const RepFn& rep_a, const RepFn& rep_b, int n, int dim,
                               unsigned seed, int attempts) {
    const auto elems = all_elements(n);
    std::mt19937 rng(seed);
    std::normal_distribution<double> dist(0.0, 1.0);
    for (int attempt = 0; attempt < attempts; ++attempt) {
        Mat x(dim, dim);
        for (int i = 0; i < dim; ++i)
            for (int j = 0; j < dim; ++j) x(i, j) = cxd(dist(rng), dist(rng));
        Mat u = Mat::Zero(dim, dim);
        for (const auto& g : elems) {
            const Mat ma = rep_a(g);
            const Mat mb = rep_b(inverse(g));
            if (ma.rows() != dim || mb.rows() != dim)
                throw std::invalid_argument("intertwiner: representation dimension mismatch");
            u += ma * x * mb;
        }
        u /= static_cast<double>(elems.size());
        if (u.norm() > 1e-8 * x.norm()) return u;
    }
    return std::nullopt;
}

}  // namespace hwmc
