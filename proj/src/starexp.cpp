#include "hwmc/starexp.hpp"

#include <cmath>

namespace hwmc {

int support_plane(const SymbolGrid& a, double tol) {
    const int n = a.n;
    std::vector<double> norms(n, 0.0);
    double peak = 0.0;
    for (int w = 0; w < n; ++w) {
        for (int v = 0; v < n; ++v)
            for (int u = 0; u < n; ++u) norms[w] += std::abs(a.at(u, v, w));
        peak = std::max(peak, norms[w]);
    }
    if (tol <= 0.0) tol = 1e-10 * peak;  // plane-summed cancellation junk sits near 1e-15 relative
    int plane = -1;
    for (int w = 0; w < n; ++w) {
        if (norms[w] > tol) {
            if (plane >= 0) return -1;
            plane = w;
        }
    }
    return plane;
}

TransferMatrix transfer_matrix(const SymbolGrid& a) {
    const int n = a.n;
    const int order = n * n * n;
    TransferMatrix m;
    m.n = n;
    m.sector = support_plane(a, 0.0);
    m.dense = Mat::Zero(order, order);
    for (int t1 = 0; t1 < order; ++t1) {
        const int w = t1 / (n * n);
        for (int v2 = 0; v2 < n; ++v2)
            for (int u2 = 0; u2 < n; ++u2) {
                const int t2 = dual_rank(u2, v2, w, n);
                cxd acc(0.0, 0.0);
                for (int vv = 0; vv < n; ++vv)
                    for (int uu = 0; uu < n; ++uu) {
                        const int tp = dual_rank(uu, vv, w, n);
                        const cxd av = a.values(tp);
                        if (av == cxd(0.0, 0.0)) continue;
                        acc += star_kernel_entry(n, t1, tp, t2) * av;
                    }
                m.dense(t1, t2) = acc;
            }
    }
    return m;
}

Mat TransferMatrix::sector_block() const {
    if (sector < 0) throw std::logic_error("sector_block: transfer matrix has no single sector");
    const int nn = n * n;
    Mat block(nn, nn);
    for (int i = 0; i < nn; ++i)
        for (int j = 0; j < nn; ++j) block(i, j) = dense(sector * nn + i, sector * nn + j);
    return block;
}

SymbolGrid apply_transfer(const TransferMatrix& m, const SymbolGrid& b) {
    if (m.n != b.n) throw std::invalid_argument("apply_transfer: size mismatch");
    SymbolGrid out = SymbolGrid::zero(b.n);
    out.values = m.dense * b.values;
    return out;
}

Vec plane_values(const SymbolGrid& a, int alpha) {
    const int n = a.n;
    Vec plane(n * n);
    for (int v = 0; v < n; ++v)
        for (int u = 0; u < n; ++u) plane(u + n * v) = a.at(u, v, alpha);
    return plane;
}

SymbolGrid grid_from_plane(const Vec& plane, int alpha, int n) {
    SymbolGrid a = SymbolGrid::zero(n);
    for (int v = 0; v < n; ++v)
        for (int u = 0; u < n; ++u) a.at(u, v, alpha) = plane(u + n * v);
    return a;
}

SymbolGrid star_unit(int n, int alpha) {
    require_valid_modulus(n);
    if (alpha == 0) {
        SymbolGrid ones = SymbolGrid::zero(n);
        for (int v = 0; v < n; ++v)
            for (int u = 0; u < n; ++u) ones.at(u, v, 0) = 1.0;
        return ones;
    }
    return symbol_of_matrix(Mat::Identity(n, n), alpha, n);
}

SymbolGrid star_power(const SymbolGrid& a, int N) {
    if (N < 1) throw std::invalid_argument("star_power: N must be >= 1 (the *-unit is N = 0)");
    const TransferMatrix m = transfer_matrix(a);
    SymbolGrid out = a;
    for (int k = 1; k < N; ++k) out = apply_transfer(m, out);
    return out;
}

SymbolGrid star_exp(const SymbolGrid& a, double t, int N) {
    if (N < 1) throw std::invalid_argument("star_exp: N must be >= 1");
    const int plane = support_plane(a, 0.0);
    if (plane < 0)
        throw std::invalid_argument("star_exp: grid must be supported on a single w plane");
    SymbolGrid u = star_unit(a.n, plane);
    u.values += (cxd(0.0, t) / static_cast<double>(N)) * a.values;
    return star_power(u, N);
}

namespace {

double checked_path_count(long points, int N, long budget) {
    double count = 1.0;
    for (int k = 0; k < N - 1; ++k) {
        count *= static_cast<double>(points);
        if (count > static_cast<double>(budget))
            throw std::invalid_argument("path enumeration budget exceeded: " +
                                        std::to_string(points) + "^" + std::to_string(N - 1) +
                                        " > " + std::to_string(budget));
    }
    return count;
}

// sum over (tau1..tau_{N-1}) of M(t0,tau1)...M(tau_{N-2},tau_{N-1}) A(tau_{N-1})
cxd path_sum_at(const Mat& m, const Vec& a, int t0, int N) {
    const int points = static_cast<int>(a.size());
    if (N == 1) return a(t0);
    std::vector<int> idx(N - 1, 0);
    std::vector<cxd> partial(N - 1);
    cxd acc(0.0, 0.0);
    int depth = 0;
    while (true) {
        const int prev = depth == 0 ? t0 : idx[depth - 1];
        const cxd base = depth == 0 ? cxd(1.0, 0.0) : partial[depth - 1];
        partial[depth] = base * m(prev, idx[depth]);
        if (depth == N - 2) {
            acc += partial[depth] * a(idx[depth]);
            while (depth >= 0 && ++idx[depth] == points) {
                idx[depth] = 0;
                --depth;
            }
            if (depth < 0) break;
        } else {
            ++depth;
            idx[depth] = 0;
        }
    }
    return acc;
}

}  // namespace

SymbolGrid path_sum_oracle(const SymbolGrid& a, int N, bool reduced_plane, long budget) {
    if (N < 1) throw std::invalid_argument("path_sum_oracle: N must be >= 1");
    const int n = a.n;
    const TransferMatrix m = transfer_matrix(a);
    if (reduced_plane) {
        if (m.sector < 0)
            throw std::invalid_argument("path_sum_oracle: reduced mode needs a plane-supported grid");
        checked_path_count(n * n, N, budget);
        const Mat block = m.sector_block();
        const Vec plane = plane_values(a, m.sector);
        Vec out(n * n);
        for (int t0 = 0; t0 < n * n; ++t0) out(t0) = path_sum_at(block, plane, t0, N);
        return grid_from_plane(out, m.sector, n);
    }
    checked_path_count(n * n * n, N, budget);
    SymbolGrid out = SymbolGrid::zero(n);
    for (int t0 = 0; t0 < n * n * n; ++t0)
        out.values(t0) = path_sum_at(m.dense, a.values, t0, N);
    return out;
}

PathStats path_stats(const std::vector<int>& path, int points) {
    PathStats s;
    s.incidence.assign(points, 0);
    s.pairs.assign(points, std::vector<int>(points, 0));
    for (int p : path) s.incidence[p]++;
    for (size_t j = 0; j + 1 < path.size(); ++j) s.pairs[path[j]][path[j + 1]]++;
    return s;
}

MeasureGroupedSum measure_regrouped_sum(const SymbolGrid& h, double t, int N, long budget) {
    const int n = h.n;
    const int alpha = support_plane(h, 0.0);
    if (alpha <= 0)
        throw std::invalid_argument(
            "measure_regrouped_sum: H must be supported on a single w = alpha != 0 plane");
    if (N < 2) throw std::invalid_argument("measure_regrouped_sum: N must be >= 2");
    const int points = n * n;
    if (points > 16 || N > 15)
        throw std::invalid_argument("measure_regrouped_sum: incidence key packing holds 16 points / 15 visits");
    checked_path_count(points, N, budget);

    const Vec hplane = plane_values(h, alpha);
    // symbol values on the plane: A_l = exp(i t H_l / N)
    Vec aplane(points);
    for (int l = 0; l < points; ++l) aplane(l) = std::exp(cxd(0.0, t / N) * hplane(l));

    // modular inverse of alpha (kernel phase carries alpha^{-1})
    int ainv = 0;
    for (int x = 1; x < n; ++x)
        if (mod_n(static_cast<long long>(alpha) * x, n) == 1) ainv = x;
    if (ainv == 0) throw std::domain_error("measure_regrouped_sum: alpha not invertible mod n");

    // kernel phase class of K(tau_a, z, tau_b) on the sector (all unit modulus
    // over the common 1/n^2 scale)
    auto phase_of = [&](int z, int ta, int tb) {
        const int uz = z % n, vz = z / n;
        const int ua = ta % n, va = ta / n;
        const int ub = tb % n, vb = tb / n;
        const long long ph = static_cast<long long>(ainv) *
                             (static_cast<long long>(ua - ub) * (va - vz) +
                              static_cast<long long>(va - vb) * (uz - ua));
        return mod_n(ph, n);
    };

    MeasureGroupedSum out;
    out.n = n;
    out.alpha = alpha;
    out.N = N;
    out.tables.resize(points);
    out.reconstructed = Vec::Zero(points);
    out.dual_paths_per_output = std::pow(static_cast<double>(points), N - 1);
    out.symbol_paths_per_dual = std::pow(static_cast<double>(points), N - 1);

    std::vector<int> dual(N - 1, 0);    // tau_1..tau_{N-1}
    std::vector<int> symb(N - 1, 0);    // z_1..z_{N-1}
    std::vector<int> counts(points, 0);
    const double scale = std::pow(1.0 / points, N - 1);

    for (int t0 = 0; t0 < points; ++t0) {
        auto& table = out.tables[t0].classes;
        std::fill(dual.begin(), dual.end(), 0);
        while (true) {
            // enumerate symbol paths for this dual path
            std::fill(symb.begin(), symb.end(), 0);
            while (true) {
                int phase = 0;
                std::fill(counts.begin(), counts.end(), 0);
                for (int j = 0; j < N - 1; ++j) {
                    const int prev = j == 0 ? t0 : dual[j - 1];
                    phase = mod_n(phase + phase_of(symb[j], prev, dual[j]), n);
                    counts[symb[j]]++;
                }
                counts[dual[N - 2]]++;  // trailing symbol factor A(tau_{N-1})
                std::uint64_t key = 0;
                for (int l = 0; l < points; ++l) key = (key << 4) | static_cast<unsigned>(counts[l]);
                table[{key, phase}] += 1.0;
                int j = N - 2;
                while (j >= 0 && ++symb[j] == points) symb[j--] = 0;
                if (j < 0) break;
            }
            int j = N - 2;
            while (j >= 0 && ++dual[j] == points) dual[j--] = 0;
            if (j < 0) break;
        }
        // resum the grouped classes
        cxd acc(0.0, 0.0);
        double mult = 0.0;
        for (const auto& [key, count] : table) {
            cxd weight(1.0, 0.0);
            std::uint64_t k = key.first;
            int visits = 0;
            for (int l = points - 1; l >= 0; --l) {
                const int c = static_cast<int>(k & 0xF);
                k >>= 4;
                visits += c;
                for (int rep = 0; rep < c; ++rep) weight *= aplane(l);
            }
            if (visits != N)
                throw std::logic_error("measure_regrouped_sum: incidence does not sum to N");
            acc += count * weight * unit_root(key.second, n);
            mult += count;
        }
        out.tables[t0].total_multiplicity = mult;
        out.reconstructed(t0) = scale * acc;
    }
    return out;
}

}  // namespace hwmc
