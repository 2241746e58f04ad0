#pragma once

#include <vector>

#include "yq/qloop.hpp"
#include "yq/yangian.hpp"

namespace yq {

// Normalization constants of the loop-rep construction, one pair per node,
// constrained by cp[i] * cm[i] = d_i * Gamma(hbar d_i)^2.
struct GammaConstants {
    std::vector<cplx> cp, cm;
};

// symmetric default cp = cm = sqrt(d_i) Gamma(hbar d_i); throws if hbar d_i
// is a nonpositive integer
GammaConstants choose_constants(const CartanData& cd, const GlobalParams& par);

// Transport of an additive representation to the loop algebra:
//   psi_i(z) is the connection matrix of the regularized difference equation
//   phi(u+1) = xi_i(u) phi(u), written as a rational function of
//   z = e^{2 pi i u} in closed sine-ratio form;
//   x^pm_{i,k} are contour-mode integrals of e^{2 pi i k u} g_i^pm(u) x_i^pm(u)
//   with the regularized half products g_i^pm, and the rational fields are
//   reconstructed from a mode window over the known pole support.
// Requires V non-congruent. N is the truncation of the half products.
QLoopRep gamma_functor(const YangianRep& V, const GammaConstants& c, int N = 400);

// max field deviation between gamma(V(a)) and gamma(V) rescaled by
// e^{2 pi i a}, over nodes and sample points
double gamma_shift_check(const YangianRep& V, cplx a, const GammaConstants& c, int N = 400);

}  // namespace yq
