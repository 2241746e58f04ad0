#pragma once

#include <vector>

#include "yq/diffeq.hpp"
#include "yq/yangian.hpp"

namespace yq {

// Shared eigenbasis of the whole commuting family {xi_i(u)} of one module,
// with each eigenvalue kept as its zero / pole lists.
struct XiSpectrum {
    int dim = 0;
    Mat P, Pinv;
    // [node][eigen index]
    std::vector<std::vector<std::vector<cplx>>> zeros, poles;

    // eigenvalue of xi_{i,0}: (sum poles - sum zeros) / hbar
    cplx xi0_eigen(int node, int k, cplx hbar) const;
};
XiSpectrum xi_spectrum(const YangianRep& V);

// Cartan part of the Casimir on V1 (x) V2: sum_ij (B^-1)_ij xi_{i,0} (x) xi_{j,0}
Mat omega_h(const YangianRep& V1, const YangianRep& V2);

// Diagonal operator family on V1 (x) V2 in the product eigenbasis, each
// eigenvalue a factored rational function of the shift parameter.
struct AbelianOp {
    int d1 = 0, d2 = 0;
    Mat P, Pinv;
    std::vector<RatioProduct> comp;  // index k1 * d2 + k2

    int dim() const { return d1 * d2; }
    Mat eval(cplx s) const;
};

// Coefficient matrix of the regularized difference equation satisfied by the
// abelian R-matrix:  R(s + l hbar) = A(s) R(s).  The eigenvalue on the
// product eigenvector (k1, k2) is assembled from the inverse T-Cartan
// numerators c_ij(T) and the zero / pole data of the xi eigenvalues:
//   prod over i, j, r, factor x of xi_i^(k1), factor y of xi_j^(k2) of
//     (s - (y - x - (l+r) hbar / 2))^(-c_ij^(r) sgn(x) sgn(y))
AbelianOp build_A(const YangianRep& V1, const YangianRep& V2);

// Independent evaluation of the same operator: matrix contour quadrature of
// exp(- sum_ijr c_ij^(r) oint t_i'(v) (x) t_j(v + s + (l+r) hbar/2) dv).
Mat eval_A_quadrature(const YangianRep& V1, const YangianRep& V2, cplx s);

// Canonical fundamental solutions of R(s + l hbar) = A(s) R(s):
//   eps = +1: prod_{n>=0} A(s + n l hbar)^{-1}   (holomorphic right)
//   eps = -1: prod_{n>=1} A(s - n l hbar)        (holomorphic left)
struct AbelianR {
    int d1 = 0, d2 = 0, eps = +1;
    cplx step;  // l hbar
    Mat P, Pinv;
    std::vector<RatioProduct> afac;
    std::vector<ScalarCanonical> comp;

    int dim() const { return d1 * d2; }
    cplx eigen_log(int k, cplx s) const;
    Mat eval(cplx s) const;
};
AbelianR build_R0(const YangianRep& V1, const YangianRep& V2, int eps, int N);

// Two-point abelian qKZ data: canonical solutions of F(s+1) = R(s) F(s) for
// R one of the regularisations above, their twist J(s) = Phi_+(s+1)^{-1},
// and the connection (two-sided product of R over integer shifts).
struct AbelianQKZ2 {
    int dim = 0;
    Mat P, Pinv;
    const AbelianR* R = nullptr;
    int M = 300;  // two-sided truncation
    std::vector<ScalarCanonical> right, left;  // per eigen
    std::vector<cplx> c1;                      // hbar Omega_h eigenvalues

    Mat phi_plus(cplx s) const;
    Mat phi_minus(cplx s) const;
    Mat twist(cplx s) const;  // J(s)
    cplx connection_log(int k, cplx s) const;
    Mat connection(cplx s) const;  // S(s) = phi_plus(s)^{-1} phi_minus(s)
};
AbelianQKZ2 build_qkz2(const AbelianR& R, const Mat& omega, cplx hbar, int N, int M);

// Relative defect of the intertwining property of sigma . M(s0) as a map
// V1(s0) (x)_0 V2 -> V2 (x)_0 V1(s0), checked on all generator fields.
double intertwiner_defect(const std::function<Mat(cplx)>& M,
                          const YangianRep& V1, const YangianRep& V2, cplx s0,
                          int nsamples = 4);

// index embeddings of pair operators into triple products
Mat embed_12(const Mat& m, int d1, int d2, int d3);
Mat embed_13(const Mat& m, int d1, int d2, int d3);
Mat embed_23(const Mat& m, int d1, int d2, int d3);
// flip V1 (x) V2 -> V2 (x) V1
Mat flip_op(int d1, int d2);

}  // namespace yq
