#ifndef HWMC_EXPM_HPP
#define HWMC_EXPM_HPP

#include <Eigen/Dense>

#include "hwmc/repr.hpp"

namespace hwmc {

// exp(i t M) for Hermitian M via eigendecomposition.
Mat expm_hermitian_it(const Mat& m, double t);

// exp(A) for a general square complex matrix: scaling and squaring with a
// Taylor series on the scaled matrix (terms added until they stop changing
// the partial sum).
Mat expm_general(const Mat& a);

}  // namespace hwmc

#endif
