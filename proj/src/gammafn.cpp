#include "hwmc/gammafn.hpp"

#include <cmath>

namespace hwmc {

namespace {

// Lanczos g = 7, n = 9 (Godfrey coefficients)
constexpr double kG = 7.0;
constexpr double kCoef[9] = {
    0.99999999999980993,  676.5203681218851,     -1259.1392167224028,
    771.32342877765313,   -176.61502916214059,   12.507343278686905,
    -0.13857109526572012, 9.9843695780195716e-6, 1.5056327351493116e-7};

std::complex<double> lanczos(std::complex<double> z) {
    // valid for Re(z) >= 0.5; z here is the argument of Gamma
    z -= 1.0;
    std::complex<double> x = kCoef[0];
    for (int i = 1; i < 9; ++i) x += kCoef[i] / (z + static_cast<double>(i));
    const std::complex<double> t = z + kG + 0.5;
    return std::sqrt(2.0 * M_PI) * std::pow(t, z + 0.5) * std::exp(-t) * x;
}

}  // namespace

std::complex<double> gamma_complex(std::complex<double> z) {
    if (z.real() < 0.5) {
        // Gamma(z) Gamma(1-z) = pi / sin(pi z)
        const std::complex<double> s = std::sin(M_PI * z);
        return M_PI / (s * lanczos(1.0 - z));
    }
    return lanczos(z);
}

std::complex<double> log_gamma_complex(std::complex<double> z) {
    return std::log(gamma_complex(z));
}

}  // namespace hwmc
