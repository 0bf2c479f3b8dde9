#include "hwmc/symbolcalc.hpp"

namespace hwmc {

DualSection DualSection::zero(int n) {
    require_valid_modulus(n);
    DualSection s;
    s.n = n;
    for (const auto& label : all_irrep_labels(n))
        s.fibers.push_back(Mat::Zero(label.dim(n), label.dim(n)));
    return s;
}

static int label_index(const IrrepLabel& label, int n) {
    if (label.is_one_dim()) {
        const auto& l = label.as_one_dim();
        return l.u + n * l.v;
    }
    return n * n + label.as_n_dim().alpha - 1;
}

Mat& DualSection::fiber(const IrrepLabel& label) { return fibers[label_index(label, n)]; }
const Mat& DualSection::fiber(const IrrepLabel& label) const {
    return fibers[label_index(label, n)];
}

GroupFunction GroupFunction::zero(int n) {
    require_valid_modulus(n);
    return GroupFunction{n, Vec::Zero(n * n * n)};
}

SymbolGrid SymbolGrid::zero(int n) {
    require_valid_modulus(n);
    return SymbolGrid{n, Vec::Zero(n * n * n)};
}

int dual_rank(int u, int v, int w, int n) {
    return mod_n(u, n) + n * mod_n(v, n) + n * n * mod_n(w, n);
}

cxd& SymbolGrid::at(int u, int v, int w) { return values(dual_rank(u, v, w, n)); }
cxd SymbolGrid::at(int u, int v, int w) const { return values(dual_rank(u, v, w, n)); }

DualSection embed_matrix(const Mat& m, int alpha, int n) {
    require_valid_modulus(n);
    if (m.rows() != n || m.cols() != n)
        throw std::invalid_argument("embed_matrix: matrix must be n x n");
    if (alpha < 1 || alpha > n - 1)
        throw std::invalid_argument("embed_matrix: alpha must lie in {1..n-1}");
    DualSection s = DualSection::zero(n);
    s.fiber(IrrepLabel::n_dim(alpha)) = m;
    return s;
}

DualSection ncft_forward(const GroupFunction& f) {
    const int n = f.n;
    DualSection s = DualSection::zero(n);
    const auto elems = all_elements(n);
    const auto labels = all_irrep_labels(n);
    for (size_t li = 0; li < labels.size(); ++li) {
        Mat acc = Mat::Zero(labels[li].dim(n), labels[li].dim(n));
        for (int r = 0; r < static_cast<int>(elems.size()); ++r) {
            const cxd fv = f.values(r);
            if (fv == cxd(0.0, 0.0)) continue;
            acc += fv * irrep_matrix(labels[li], elems[r]);
        }
        s.fibers[li] = acc;
    }
    return s;
}

GroupFunction ncft_inverse(const DualSection& s, PlancherelWeight weight) {
    const int n = s.n;
    const int order = n * n * n;
    GroupFunction f = GroupFunction::zero(n);
    const auto elems = all_elements(n);
    const auto labels = all_irrep_labels(n);
    for (size_t li = 0; li < labels.size(); ++li) {
        const Mat& fib = s.fibers[li];
        if (fib.norm() == 0.0) continue;
        const int dim = labels[li].dim(n);
        double nu = static_cast<double>(dim) / order;
        if (weight == PlancherelWeight::InverseDim) nu = 1.0 / dim;
        for (int r = 0; r < order; ++r) {
            const Mat rep = irrep_matrix(labels[li], elems[r]);
            f.values(r) += nu * (rep.adjoint() * fib).trace();
        }
    }
    return f;
}

SymbolGrid dft3(const GroupFunction& f) {
    const int n = f.n;
    const int order = n * n * n;
    SymbolGrid a = SymbolGrid::zero(n);
    for (int w = 0; w < n; ++w)
        for (int v = 0; v < n; ++v)
            for (int u = 0; u < n; ++u) {
                cxd acc(0.0, 0.0);
                for (int r = 0; r < order; ++r) {
                    const GroupElement g = element_from_rank(r + 1, n);
                    acc += f.values(r) *
                           unit_root(static_cast<long long>(u) * g.q +
                                         static_cast<long long>(v) * g.p +
                                         static_cast<long long>(w) * g.lambda,
                                     n);
                }
                a.at(u, v, w) = acc;
            }
    return a;
}

GroupFunction dft3_inverse(const SymbolGrid& a) {
    const int n = a.n;
    const int order = n * n * n;
    GroupFunction f = GroupFunction::zero(n);
    for (int r = 0; r < order; ++r) {
        const GroupElement g = element_from_rank(r + 1, n);
        cxd acc(0.0, 0.0);
        for (int w = 0; w < n; ++w)
            for (int v = 0; v < n; ++v)
                for (int u = 0; u < n; ++u)
                    acc += std::conj(unit_root(static_cast<long long>(u) * g.q +
                                                   static_cast<long long>(v) * g.p +
                                                   static_cast<long long>(w) * g.lambda,
                                               n)) *
                           a.at(u, v, w);
        f.values(r) = acc / static_cast<double>(order);
    }
    return f;
}

SymbolGrid symbol_of_section(const DualSection& s, PlancherelWeight weight) {
    return dft3(ncft_inverse(s, weight));
}

SymbolGrid symbol_of_matrix(const Mat& m, int alpha, int n, PlancherelWeight weight) {
    return symbol_of_section(embed_matrix(m, alpha, n), weight);
}

DualSection quantize(const SymbolGrid& a) { return ncft_forward(dft3_inverse(a)); }

// modular inverse for odd n and w != 0 (n prime in practice; for composite n
// this throws when w shares a factor with n)
static int mod_inverse(int w, int n) {
    for (int x = 1; x < n; ++x)
        if (mod_n(static_cast<long long>(w) * x, n) == 1) return x;
    throw std::domain_error("mod_inverse: " + std::to_string(w) + " not invertible mod " +
                            std::to_string(n));
}

cxd star_kernel_entry(int n, int t, int t1, int t2) {
    const int u = t % n, v = (t / n) % n, w = t / (n * n);
    const int u1 = t1 % n, v1 = (t1 / n) % n, w1 = t1 / (n * n);
    const int u2 = t2 % n, v2 = (t2 / n) % n, w2 = t2 / (n * n);
    if (w1 != w || w2 != w) return cxd(0.0, 0.0);
    if (w == 0) {
        const bool hit = (u1 == u && v1 == v && u2 == u && v2 == v);
        return hit ? cxd(1.0, 0.0) : cxd(0.0, 0.0);
    }
    const int winv = mod_inverse(w, n);
    const long long phase = static_cast<long long>(winv) *
                            (static_cast<long long>(u - u2) * (v - v1) +
                             static_cast<long long>(v - v2) * (u1 - u));
    return unit_root(phase, n) / static_cast<double>(n * n);
}

StarKernel star_kernel(int n) {
    require_valid_modulus(n);
    if (n > StarKernel::kDenseLimit)
        throw std::invalid_argument(
            "star_kernel: dense kernel limited to n <= " +
            std::to_string(StarKernel::kDenseLimit) +
            "; use star_convolution (structured evaluation) for larger n");
    const int order = n * n * n;
    StarKernel k;
    k.n = n;
    k.dense.assign(order, std::vector<cxd>(static_cast<size_t>(order) * order, cxd(0.0, 0.0)));
    for (int t = 0; t < order; ++t)
        for (int t1 = 0; t1 < order; ++t1)
            for (int t2 = 0; t2 < order; ++t2)
                k.dense[t][static_cast<size_t>(t1) * order + t2] = star_kernel_entry(n, t, t1, t2);
    return k;
}

SymbolGrid star(const SymbolGrid& a, const SymbolGrid& b) {
    if (a.n != b.n) throw std::invalid_argument("star: grids must share n");
    const int n = a.n;
    if (n > StarKernel::kDenseLimit) return star_convolution(a, b);
    const int order = n * n * n;
    SymbolGrid c = SymbolGrid::zero(n);
    for (int t = 0; t < order; ++t) {
        cxd acc(0.0, 0.0);
        const int w = t / (n * n);
        // kernel support: w1 = w2 = w
        for (int v1 = 0; v1 < n; ++v1)
            for (int u1 = 0; u1 < n; ++u1) {
                const cxd av = a.values(dual_rank(u1, v1, w, n));
                if (av == cxd(0.0, 0.0)) continue;
                const int t1 = dual_rank(u1, v1, w, n);
                for (int v2 = 0; v2 < n; ++v2)
                    for (int u2 = 0; u2 < n; ++u2) {
                        const int t2 = dual_rank(u2, v2, w, n);
                        const cxd bv = b.values(t2);
                        if (bv == cxd(0.0, 0.0)) continue;
                        acc += star_kernel_entry(n, t, t1, t2) * av * bv;
                    }
            }
        c.values(t) = acc;
    }
    return c;
}

SymbolGrid star_convolution(const SymbolGrid& a, const SymbolGrid& b) {
    if (a.n != b.n) throw std::invalid_argument("star_convolution: grids must share n");
    const int n = a.n;
    const int order = n * n * n;
    const GroupFunction fa = dft3_inverse(a);
    const GroupFunction fb = dft3_inverse(b);
    GroupFunction conv = GroupFunction::zero(n);
    const auto elems = all_elements(n);
    for (int k = 0; k < order; ++k) {
        cxd acc(0.0, 0.0);
        for (int h = 0; h < order; ++h) {
            const int kh = element_rank(multiply(elems[k], inverse(elems[h]))) - 1;
            acc += fa.values(kh) * fb.values(h);
        }
        conv.values(k) = acc;
    }
    return dft3(conv);
}

Mat star_kernel_slice(int n, int u, int v, int w) {
    const int order = n * n * n;
    const int t = dual_rank(u, v, w, n);
    Mat slice(order, order);
    for (int t1 = 0; t1 < order; ++t1)
        for (int t2 = 0; t2 < order; ++t2) slice(t1, t2) = star_kernel_entry(n, t, t1, t2);
    return slice;
}

}  // namespace hwmc
