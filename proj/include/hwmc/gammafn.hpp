#ifndef HWMC_GAMMAFN_HPP
#define HWMC_GAMMAFN_HPP

#include <complex>

namespace hwmc {

// Complex gamma function, Lanczos approximation (g = 7, 9 coefficients) with
// the reflection formula for Re(z) < 1/2.  Accuracy ~1e-13 relative away from
// the poles.
std::complex<double> gamma_complex(std::complex<double> z);

// log Gamma on the principal branch of the Lanczos form (not the analytically
// continued log Gamma; adequate for ratios and moduli).
std::complex<double> log_gamma_complex(std::complex<double> z);

}  // namespace hwmc

#endif
