#ifndef HWMC_GROUP_HPP
#define HWMC_GROUP_HPP

#include <cstdint>
#include <iosfwd>
#include <stdexcept>
#include <string>
#include <vector>

namespace hwmc {

// Finite Heisenberg-Weyl group H_n on Z_n^3 with product
//   (z1,l1) <> (z2,l2) = (z1+z2, l1+l2+omega(z1,z2)) mod n,
// omega(z1,z2) = q1 p2 - q2 p1.  The discrete law carries no 1/2 on omega;
// the continuous group uses (1/2) omega(z1,z2) instead.
// n must be odd and >= 3 (n=2 degenerates to a commutative product).
// Prime n is recommended: composite n admits cyclic subgroups shorter than n.

inline int mod_n(long long v, int n) {
    long long r = v % n;
    return static_cast<int>(r < 0 ? r + n : r);
}

struct GroupElement {
    int q = 0;
    int p = 0;
    int lambda = 0;
    int n = 3;

    GroupElement() = default;
    GroupElement(int q_, int p_, int lambda_, int n_);

    bool is_identity() const { return q == 0 && p == 0 && lambda == 0; }
    bool operator==(const GroupElement& o) const {
        return n == o.n && q == o.q && p == o.p && lambda == o.lambda;
    }
    bool operator!=(const GroupElement& o) const { return !(*this == o); }
};

void require_valid_modulus(int n);

// omega(z1,z2) = q1 p2 - q2 p1 mod n
int symplectic_form(const GroupElement& a, const GroupElement& b);

GroupElement multiply(const GroupElement& a, const GroupElement& b);
GroupElement inverse(const GroupElement& g);
GroupElement power(const GroupElement& g, long long k);
GroupElement identity_element(int n);

// 1-based lexicographic rank, q fastest: rank = 1 + q + n*p + n^2*lambda.
int element_rank(const GroupElement& g);
GroupElement element_from_rank(int rank, int n);

// All n^3 elements in rank order.
std::vector<GroupElement> all_elements(int n);

// Full multiplication table: entry (i,j) (0-based storage) is
// rank(element(i+1) <> element(j+1)).
std::vector<std::vector<int>> multiplication_table(int n);

enum class SubgroupKind { Center, Cyclic, MaximalCommutative };

struct Subgroup {
    SubgroupKind kind;
    GroupElement generator;  // meaningful for Cyclic/MaximalCommutative
    std::vector<GroupElement> elements;
};

// Center {(0,0,l)}; Cyclic(g) = powers of g; MaximalCommutative(g) =
// Cyclic(g) (+) Center, g not in the center.
Subgroup center_subgroup(int n);
Subgroup cyclic_subgroup(const GroupElement& g);
Subgroup maximal_commutative_subgroup(const GroupElement& g);

bool commutes(const GroupElement& a, const GroupElement& b);

// CSV export of the multiplication table (1-based ranks). With header=true a
// leading label row/column is added.
void write_table_csv(std::ostream& os, const std::vector<std::vector<int>>& table,
                     bool header = false);

}  // namespace hwmc

#endif
