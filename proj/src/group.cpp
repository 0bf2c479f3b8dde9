#include "hwmc/group.hpp"

#include <ostream>

namespace hwmc {

void require_valid_modulus(int n) {
    if (n < 3 || n % 2 == 0)
        throw std::invalid_argument("modulus n must be odd and >= 3, got " + std::to_string(n));
}

GroupElement::GroupElement(int q_, int p_, int lambda_, int n_) : n(n_) {
    require_valid_modulus(n_);
    q = mod_n(q_, n_);
    p = mod_n(p_, n_);
    lambda = mod_n(lambda_, n_);
}

static void require_same_modulus(const GroupElement& a, const GroupElement& b) {
    if (a.n != b.n)
        throw std::invalid_argument("modulus mismatch: " + std::to_string(a.n) + " vs " +
                                    std::to_string(b.n));
}

int symplectic_form(const GroupElement& a, const GroupElement& b) {
    require_same_modulus(a, b);
    return mod_n(static_cast<long long>(a.q) * b.p - static_cast<long long>(b.q) * a.p, a.n);
}

GroupElement multiply(const GroupElement& a, const GroupElement& b) {
    require_same_modulus(a, b);
    const int w = symplectic_form(a, b);
    return GroupElement(a.q + b.q, a.p + b.p, a.lambda + b.lambda + w, a.n);
}

GroupElement inverse(const GroupElement& g) {
    // omega(z,-z) = 0, so (z,l)^-1 = (-z,-l).
    return GroupElement(-g.q, -g.p, -g.lambda, g.n);
}

GroupElement power(const GroupElement& g, long long k) {
    GroupElement acc = identity_element(g.n);
    GroupElement base = k >= 0 ? g : inverse(g);
    long long m = k >= 0 ? k : -k;
    for (long long i = 0; i < m; ++i) acc = multiply(acc, base);
    return acc;
}

GroupElement identity_element(int n) { return GroupElement(0, 0, 0, n); }

int element_rank(const GroupElement& g) { return 1 + g.q + g.n * g.p + g.n * g.n * g.lambda; }

GroupElement element_from_rank(int rank, int n) {
    require_valid_modulus(n);
    const int order = n * n * n;
    if (rank < 1 || rank > order)
        throw std::out_of_range("rank " + std::to_string(rank) + " outside [1, " +
                                std::to_string(order) + "]");
    const int r = rank - 1;
    return GroupElement(r % n, (r / n) % n, r / (n * n), n);
}

std::vector<GroupElement> all_elements(int n) {
    require_valid_modulus(n);
    std::vector<GroupElement> out;
    out.reserve(n * n * n);
    for (int r = 1; r <= n * n * n; ++r) out.push_back(element_from_rank(r, n));
    return out;
}

std::vector<std::vector<int>> multiplication_table(int n) {
    const auto elems = all_elements(n);
    const int order = static_cast<int>(elems.size());
    std::vector<std::vector<int>> table(order, std::vector<int>(order, 0));
    for (int i = 0; i < order; ++i)
        for (int j = 0; j < order; ++j) table[i][j] = element_rank(multiply(elems[i], elems[j]));
    return table;
}

bool commutes(const GroupElement& a, const GroupElement& b) {
    return multiply(a, b) == multiply(b, a);
}

Subgroup center_subgroup(int n) {
    require_valid_modulus(n);
    Subgroup s{SubgroupKind::Center, identity_element(n), {}};
    for (int l = 0; l < n; ++l) s.elements.push_back(GroupElement(0, 0, l, n));
    return s;
}

Subgroup cyclic_subgroup(const GroupElement& g) {
    Subgroup s{SubgroupKind::Cyclic, g, {}};
    GroupElement cur = identity_element(g.n);
    do {
        s.elements.push_back(cur);
        cur = multiply(cur, g);
    } while (!cur.is_identity());
    return s;
}

Subgroup maximal_commutative_subgroup(const GroupElement& g) {
    if (g.q == 0 && g.p == 0)
        throw std::invalid_argument("generator of a maximal commutative subgroup must lie outside the center");
    Subgroup s{SubgroupKind::MaximalCommutative, g, {}};
    const Subgroup cyc = cyclic_subgroup(GroupElement(g.q, g.p, 0, g.n));
    for (const auto& c : cyc.elements)
        for (int l = 0; l < g.n; ++l)
            s.elements.push_back(multiply(c, GroupElement(0, 0, l, g.n)));
    return s;
}

void write_table_csv(std::ostream& os, const std::vector<std::vector<int>>& table, bool header) {
    const int order = static_cast<int>(table.size());
    if (header) {
        os << "rank";
        for (int j = 1; j <= order; ++j) os << ',' << j;
        os << '\n';
    }
    for (int i = 0; i < order; ++i) {
        if (header) os << (i + 1) << ',';
        for (int j = 0; j < order; ++j) {
            if (j) os << ',';
            os << table[i][j];
        }
        os << '\n';
    }
}

}  // namespace hwmc
