#pragma once

#include <complex>

namespace yq {

using cplx = std::complex<double>;

// Euler-Mascheroni constant (30 digits).
inline constexpr double euler_gamma = 0.577215664901532860606512090082;

// Principal branch of log Gamma (Lanczos); accurate to ~1e-13 for
// arguments away from the nonpositive integers.
cplx log_gamma(cplx z);

inline cplx gamma_fn(cplx z) { return std::exp(log_gamma(z)); }

// psi(z), psi'(z), psi''(z) via recurrence into the asymptotic region.
cplx digamma(cplx z);
cplx trigamma(cplx z);
cplx tetragamma(cplx z);
cplx pentagamma(cplx z);

}  // namespace yq
