#include "yq/drinfeld.hpp"

#include <stdexcept>

namespace yq {

namespace {
bool near_any(cplx p, const std::vector<cplx>& set, double tol) {
    for (auto& q : set)
        if (std::abs(p - q) < tol) return true;
    return false;
}

// principal parts of g at the poles in `keep`, transplanted to the output
// variable: contribution of oint_C g(v)/(u-v) dv with C around `keep`
RationalMatrixFunction transplant(const RationalMatrixFunction& g, const std::vector<cplx>& keep) {
    RationalMatrixFunction r = RationalMatrixFunction::zero(g.dim);
    for (auto& pl : g.poles) {
        if (!near_any(pl.loc, keep, 1e-7)) continue;
        for (int n = 1; n <= (int)pl.coef.size(); ++n)
            if (pl.coef[n - 1].norm() > 0) r.add_pole_term(pl.loc, n, pl.coef[n - 1]);
    }
    r.prune();
    return r;
}
}  // namespace

YangianRep ytensor(const YangianRep& V1, const YangianRep& V2, cplx s, double margin) {
    if (V1.cartan.type != V2.cartan.type || V1.cartan.rank != V2.cartan.rank)
        throw std::invalid_argument("ytensor: mismatched algebras");
    for (auto& p : V1.sigma)
        for (auto& q : V2.sigma)
            if (std::abs(p + s - q) < margin)
                throw std::runtime_error("ytensor: spectral supports collide at this shift");

    YangianRep W;
    W.cartan = V1.cartan;
    W.par = V1.par;
    W.dim = V1.dim * V2.dim;
    for (int i = 0; i < V1.rank(); ++i) {
        RationalMatrixFunction xi1 = V1.xi[i].shifted(s).kron_left(V2.dim);
        RationalMatrixFunction xi2 = V2.xi[i].kron_right(V1.dim);
        W.xi.push_back(xi1 * xi2);

        // x^+: left leg plus residues against xi_1
        RationalMatrixFunction gp = xi1 * V2.xp[i].kron_right(V1.dim);
        RationalMatrixFunction xpw = V1.xp[i].shifted(s).kron_left(V2.dim) +
                                     transplant(gp, V2.xp[i].pole_locations());
        xpw.prune();
        W.xp.push_back(std::move(xpw));

        // x^-: residues against xi_2 plus right leg
        RationalMatrixFunction gm = V1.xm[i].shifted(s).kron_left(V2.dim) * xi2;
        std::vector<cplx> left_poles;
        for (auto& p : V1.xm[i].pole_locations()) left_poles.push_back(p + s);
        RationalMatrixFunction xmw = transplant(gm, left_poles) +
                                     V2.xm[i].kron_right(V1.dim);
        xmw.prune();
        W.xm.push_back(std::move(xmw));
    }
    for (auto& p : V1.sigma) W.sigma.push_back(p + s);
    for (auto& q : V2.sigma) W.sigma.push_back(q);
    return W;
}

double check_associativity(const YangianRep& V1, const YangianRep& V2, const YangianRep& V3,
                           cplx s1, cplx s2, int nsamples) {
    // V1(s1+s2) (x) V2(s2) (x) V3 assembled both ways; the shift bookkeeping
    // follows (V1 (x)_{s1} V2) (x)_{s2} V3 = V1 (x)_{s1+s2} (V2 (x)_{s2} V3)
    YangianRep L = ytensor(ytensor(V1, V2, s1), V3, s2);
    YangianRep R = ytensor(V1, ytensor(V2, V3, s2), s1 + s2);
    double rad = 1.0;
    for (auto& p : L.sigma) rad = std::max(rad, std::abs(p));
    double defect = 0.0;
    for (int i = 0; i < L.rank(); ++i) {
        for (int k = 0; k < nsamples; ++k) {
            const cplx u = (1.9 * rad + 2.3) * std::exp(cplx(0, 0.9 + 2.39996 * k));
            for (auto [a, b] : {std::pair{&L.xi[i], &R.xi[i]},
                                {&L.xp[i], &R.xp[i]},
                                {&L.xm[i], &R.xm[i]}}) {
                Mat va = a->eval(u), vb = b->eval(u);
                defect = std::max(defect, (va - vb).norm() / std::max(1.0, va.norm()));
            }
        }
    }
    return defect;
}

}  // namespace yq
