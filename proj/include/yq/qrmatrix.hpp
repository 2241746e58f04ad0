#pragma once

#include <memory>
#include <vector>

#include "yq/gamma.hpp"
#include "yq/qloop.hpp"
#include "yq/rmatrix.hpp"

namespace yq {

// Scalar rational function in factored multiplicative form,
//   f(z) = prod_f (1 - z/b_f)^{m_f},
// normalized to 1 at z = 0. When degree() == 0 it is also 1 at infinity.
struct TrigRatio {
    std::vector<std::pair<cplx, int>> fac;

    void push(cplx b, int m);
    int degree() const;
    cplx eval(cplx z) const;
    // sum of principal-branch logs of the factors; exp(log_eval) == eval
    cplx log_eval(cplx z) const;
    std::vector<cplx> locations() const;
};

// Shared eigenbasis of the commuting family {psi_i(z)} of one module, each
// eigenvalue kept as its zero / pole lists plus its value at infinity.
struct PsiSpectrum {
    int dim = 0;
    Mat P, Pinv;
    // [node][eigen index]
    std::vector<std::vector<std::vector<cplx>>> zeros, poles;
    std::vector<std::vector<cplx>> lead;  // psi eigenvalue at infinity

    // eigenvalue of xi_{i,0}, recovered from psi_i(inf) = q_i^{xi_{i,0}}
    // (principal branch; valid for the desk-scale weights used here)
    cplx xi0_eigen(int node, int k, const GlobalParams& par, int d_i) const;
};
PsiSpectrum psi_spectrum(const QLoopRep& V);

// Cartan part of the Casimir on V (x) W, from the psi values at infinity
Mat omega_h_qloop(const QLoopRep& V, const QLoopRep& W);

// eigenvalue of the mode H_{i,m} (m != 0) of log psi_i on eigenvector k:
//   m > 0: -sum_f eps_f x_f^m  / (m (q_i - q_i^{-1}))
//   m < 0: +sum_f eps_f x_f^m  / (|m| (q_i - q_i^{-1}))
cplx h_mode_eigen(const PsiSpectrum& sp, int node, int k, int m, cplx qi);

// Diagonal operator family on V (x) W in the product eigenbasis: coefficient
// of the q-difference equation R(q^{2l} zeta) = A(zeta) R(zeta). For each
// (i, j, r) with c_ij^(r) != 0 and each factor x of the psi_i eigenvalue on V
// and y of the psi_j eigenvalue on W, the eigenvalue picks up
//   (1 - zeta q^{l+r} x / y)^(-c_ij^(r) sgn(x) sgn(y)).
// Rational in zeta with A(0) = A(inf) = 1.
struct AbelianOpQ {
    int d1 = 0, d2 = 0;
    Mat P, Pinv;
    std::vector<TrigRatio> comp;  // index k1 * d2 + k2

    int dim() const { return d1 * d2; }
    Mat eval(cplx zeta) const;
};
AbelianOpQ build_A_qloop(const QLoopRep& V, const QLoopRep& W);

// Canonical solutions of R(p zeta) = A(zeta) R(zeta), p = q^{2l}, times the
// Cartan prefactor q^{eps Omega_h}:
//   side = +1: q^{eps Om} prod_{n>=0} A(p^n zeta)^{-1}
//   side = -1: q^{eps Om} prod_{n>=1} A(p^{-n} zeta)
// eps = +1 when the attracting end p^{side inf} of the orbit is 0, else -1,
// so that the value at the attracting end is q^{Om} (end 0) or q^{-Om}.
struct AbelianRQ {
    int d1 = 0, d2 = 0, side = +1, eps = +1;
    cplx p;       // q^{2l}
    cplx log_q;   // i pi hbar
    Mat P, Pinv;
    std::vector<TrigRatio> afac;
    std::vector<cplx> om;  // Omega_h eigenvalues in the product basis

    int dim() const { return d1 * d2; }
    cplx eigen_log(int k, cplx zeta) const;
    Mat eval(cplx zeta) const;
};
AbelianRQ build_R0_qloop(const QLoopRep& V, const QLoopRep& W, int side);

// Twist J(s) = Phi_+(s+1)^{-1} of the step-1 equation f(s+1) = R^{0,eps}(s) f(s)
// attached to a pair of Yangian seeds, with its difference-equation data.
struct TwistData {
    std::shared_ptr<AbelianR> R;
    AbelianQKZ2 qkz;

    Mat twist(cplx s) const { return qkz.twist(s); }
};
TwistData build_twist(const YangianRep& V1, const YangianRep& V2, int eps,
                      int N = 400, int M = 300);

// Relative defect of J as a module map V -> W, measured on all generating
// fields at ring samples avoiding both pole supports.
double conjugation_defect(const QLoopRep& V, const QLoopRep& W, const Mat& J);

// Relative defect of J(s) as an intertwiner
//   Gamma(V1) (x)_zeta Gamma(V2) -> Gamma(V1 (x)_s V2),  zeta = e^{2 pi i s},
// measured on all generating fields at sample points.
double twist_intertwines(const YangianRep& V1, const YangianRep& V2, int eps,
                         cplx s, int N = 400, int M = 300);

}  // namespace yq
