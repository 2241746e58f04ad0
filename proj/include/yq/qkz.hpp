#pragma once

#include <memory>
#include <vector>

#include "yq/qrmatrix.hpp"
#include "yq/rmatrix.hpp"
#include "yq/yangian.hpp"

namespace yq {

// embed an operator on V_a (x) V_b into the full tensor product (a < b)
Mat embed_pair(const Mat& m, const std::vector<int>& dims, int a, int b);

// n-point system of additive difference equations
//   F(s + e_i) = A_i(s) F(s),
// with coefficients assembled from the pairwise two-sided R-matrices:
//   A_i(s) = R_{i-1,i}(s_{i-1}-s_i-1)^{-1} ... R_{1,i}(s_1-s_i-1)^{-1}
//            R_{i,n}(s_i-s_n) ... R_{i,i+1}(s_i-s_{i+1})
// All factors commute (they are diagonal in the common product eigenbasis).
struct QKZSystem {
    int n = 0, eps = +1;
    std::vector<int> dims;
    // pair data indexed [a][b], a < b
    std::vector<std::vector<std::shared_ptr<AbelianR>>> R;
    std::vector<std::vector<std::shared_ptr<AbelianQKZ2>>> pair;

    int total_dim() const;
    Mat coeff(int i, const std::vector<cplx>& s) const;  // A_i, 0-indexed leg

    // canonical fundamental solution attached to a permutation sigma
    // (sigma[k] = image of k): product over pairs a < b of the right
    // solution at s_a - s_b when sigma^{-1}(a) < sigma^{-1}(b), and of the
    // left solution otherwise
    Mat phi(const std::vector<int>& sigma, const std::vector<cplx>& s) const;

    // max over pairs (i, j) and the given points of the consistency residual
    // ||A_i(s+e_j) A_j(s) - A_j(s+e_i) A_i(s)|| / scale
    double integrability(const std::vector<std::vector<cplx>>& samples) const;
};

QKZSystem build_system(const std::vector<const YangianRep*>& reps, int eps,
                       int N = 400, int M = 300);

// Deviations of the two-point monodromy from the loop R-matrix.
struct KDResult {
    double max_dev = 0.0;     // || S(zeta) - R0_loop(zeta) || over the grid
    double qdiff_dev = 0.0;   // S(q^{2l} zeta) S(zeta)^{-1} vs the loop coefficient
    double bridge_dev = 0.0;  // Phi_pm(s + l hbar) Phi_pm(s)^{-1} vs the additive
                              // canonical solutions of f(s+1) = A(s) f(s)
};
KDResult kd_check_n2(const YangianRep& V1, const YangianRep& V2, int eps,
                     int ngrid = 5, int N = 400, int M = 300);

// Deviation of phi(sigma)^{-1} phi(swap_i sigma) from the loop R-matrix of the
// legs (i, i+1) evaluated at zeta_i / zeta_{i+1} (exponent +1 when
// sigma^{-1}(i) < sigma^{-1}(i+1), else -1), embedded in the full product.
double monodromy_check(const QKZSystem& sys, const std::vector<const YangianRep*>& reps,
                       const std::vector<int>& sigma, int i, const std::vector<cplx>& s,
                       int N = 400);

}  // namespace yq
