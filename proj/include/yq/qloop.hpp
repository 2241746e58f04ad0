#pragma once

#include <vector>

#include "yq/cartan.hpp"
#include "yq/config.hpp"
#include "yq/ratfun.hpp"
#include "yq/yangian.hpp"

namespace yq {

// Finite-dimensional representation of the trigonometric loop algebra, given
// by rational generating fields in the loop variable z:
//   psi_i(z) regular and invertible at z = 0 and infinity,
//   x_i^pm(z) vanishing at 0, regular at infinity.
struct QLoopRep {
    CartanData cartan;
    GlobalParams par;
    int dim = 0;
    std::vector<RationalMatrixFunction> psi, xp, xm;  // indexed by node
    std::vector<cplx> sigma;  // poles of psi^{+-1} and x^pm, all nodes

    int rank() const { return cartan.rank; }
    cplx q_node(int i) const { return par.q_pow((double)cartan.d[i]); }

    // modes of the two expansions: psi_plus(i, r) is the z^{-r} coefficient
    // at infinity (r >= 0), psi_minus(i, r) the z^r coefficient at 0 (r >= 0)
    Mat psi_plus(int i, int r) const;
    Mat psi_minus(int i, int r) const;
    // x^pm_{i,k} for any integer k: k >= 0 reads the expansion at infinity,
    // k < 0 reads minus the Taylor coefficient of z^{-k} at 0
    Mat x_mode(int i, bool plus, int k) const;
};

// z^{-r} coefficient of the expansion at infinity / z^r coefficient at 0
Mat mode_at_inf(const RationalMatrixFunction& F, int r);
Mat mode_at_zero(const RationalMatrixFunction& F, int r);

// one-dimensional trivial representation (psi = 1, x^pm = 0)
QLoopRep ql_trivial(const CartanData& cd, const GlobalParams& par);

// pullback along the dilation automorphism: fields y(z) -> y(z / alpha)
QLoopRep ql_scale(const QLoopRep& V, cplx alpha);

// Residuals of the defining field relations at sampled points, normalized by
// the scale of the terms involved. Checks: commutativity of the psi family,
// psi(0) psi(infinity) = 1, conjugation of x^pm by psi at infinity, the
// psi-x and x-x exchange relations, the x^+ x^- bracket, and the mode anchor
// [x^+_{i,0}, x^-_{i,0}] = (psi_plus(i,0) - psi_minus(i,0)) / (q_i - q_i^{-1}).
RelationReport verify_ql_relations(const QLoopRep& V, int nsamples = 6);

// Deformed Drinfeld tensor product at parameter zeta: fields act on the
// Kronecker product, with the contour integrals of the coproduct realized as
// residue sums over the known pole supports.
// Requires zeta * sigma(V) and sigma(W) to be disjoint.
QLoopRep qtensor(const QLoopRep& V, const QLoopRep& W, cplx zeta);

}  // namespace yq
