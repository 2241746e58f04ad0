#pragma once

#include <complex>
#include <cstdint>

namespace yq {

// Shared numeric parameters. q = exp(i pi hbar); |q| != 1 is assumed
// throughout the quantum-loop side and selects the branch eps.
struct GlobalParams {
    std::complex<double> hbar{0.2, 0.3};
    double tol = 1e-8;
    int trunc_inner = 400;      // one-sided canonical products
    int trunc_outer = 400;      // outer product in the twist
    int trunc_twosided = 300;   // symmetric two-sided products
    std::uint64_t seed = 1;

    std::complex<double> q() const {
        const double pi = 3.14159265358979323846264338327950288;
        return std::exp(std::complex<double>(0, pi) * hbar);
    }
    std::complex<double> q_pow(double e) const {
        const double pi = 3.14159265358979323846264338327950288;
        return std::exp(std::complex<double>(0, pi) * hbar * e);
    }
    int eps() const { return std::abs(q()) < 1.0 ? +1 : -1; }
};

}  // namespace yq
