#pragma once

#include <string>
#include <vector>

#include "yq/cartan.hpp"
#include "yq/config.hpp"
#include "yq/ratfun.hpp"

namespace yq {

// Finite-dimensional representation given by rational generating fields
//   xi_i(u) = 1 + hbar sum xi_{i,r} u^{-r-1},   x_i^pm(u) = hbar sum x^pm_{i,r} u^{-r-1}
struct YangianRep {
    CartanData cartan;
    GlobalParams par;
    int dim = 0;
    std::vector<RationalMatrixFunction> xi, xp, xm;  // indexed by node
    std::vector<cplx> sigma;  // poles of xi^{+-1} and x^pm, all nodes

    int rank() const { return cartan.rank; }
    Mat xi0(int i) const;                    // mode r=0 of xi_i
    Mat mode_xi(int i, int r) const;
    Mat mode_xp(int i, int r) const;
    Mat mode_xm(int i, int r) const;
};

// Evaluation representation of the rank-1 algebra at spectral point a.
YangianRep ev_sl2(const GlobalParams& par, cplx a);

// Pullback along the shift automorphism: fields y(u) -> y(u - a).
YangianRep shift_rep(const YangianRep& V, cplx a);

// Reconstruct the fields from (xi_{i,0}, t_{i,1}, x^+_{i,0}, x^-_{i,0});
// t_{i,1} must act diagonalizably.
YangianRep from_low_modes(const CartanData& cd, const GlobalParams& par,
                          const std::vector<Mat>& xi0, const std::vector<Mat>& t1,
                          const std::vector<Mat>& xp0, const std::vector<Mat>& xm0);

struct RelationReport {
    double max_residual = 0.0;
    std::vector<std::pair<std::string, double>> items;
    void add(const std::string& name, double v);
};

// Residuals of the defining field relations at sampled (u, v) pairs,
// normalized by the scale of the terms involved.
RelationReport verify_relations(const YangianRep& V, int nsamples = 6);

// Spectral supports of the family pairwise avoid nonzero integer
// translates of each other (and of themselves).
bool is_noncongruent(const std::vector<const YangianRep*>& reps, double tol = 1e-9);

// poles of xi_i, x_i^pm plus zeros of the xi_i eigenvalues (poles of xi^{-1})
std::vector<cplx> spectral_support(const YangianRep& V);

}  // namespace yq
