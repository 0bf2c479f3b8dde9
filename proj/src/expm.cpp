#include "hwmc/expm.hpp"

#include <cmath>

namespace hwmc {

Mat expm_hermitian_it(const Mat& m, double t) {
    if (m.rows() != m.cols()) throw std::invalid_argument("expm_hermitian_it: square matrix required");
    if ((m - m.adjoint()).norm() > 1e-12 * std::max(1.0, m.norm()))
        throw std::invalid_argument("expm_hermitian_it: matrix is not Hermitian");
    Eigen::SelfAdjointEigenSolver<Mat> es(m);
    const Eigen::VectorXd evals = es.eigenvalues();
    Vec phases(evals.size());
    for (int i = 0; i < evals.size(); ++i)
        phases(i) = cxd(std::cos(t * evals(i)), std::sin(t * evals(i)));
    return es.eigenvectors() * phases.asDiagonal() * es.eigenvectors().adjoint();
}

Mat expm_general(const Mat& a) {
    if (a.rows() != a.cols()) throw std::invalid_argument("expm_general: square matrix required");
    const int n = static_cast<int>(a.rows());
    const double norm = a.cwiseAbs().rowwise().sum().maxCoeff();
    int s = 0;
    if (norm > 0.5) s = static_cast<int>(std::ceil(std::log2(norm / 0.5)));
    const Mat b = a / std::pow(2.0, s);

    Mat sum = Mat::Identity(n, n);
    Mat term = Mat::Identity(n, n);
    for (int k = 1; k <= 64; ++k) {
        term = (term * b) / static_cast<double>(k);
        sum += term;
        if (term.norm() <= 1e-18 * sum.norm()) break;
    }
    for (int k = 0; k < s; ++k) sum = sum * sum;
    return sum;
}

}  // namespace hwmc
