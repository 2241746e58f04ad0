#include "yq/qloop.hpp"

#include <cmath>
#include <stdexcept>

namespace yq {

namespace {

double binom(int n, int k) {
    if (k < 0 || k > n) return 0.0;
    double r = 1.0;
    for (int j = 1; j <= k; ++j) r = r * double(n - k + j) / double(j);
    return r;
}

cplx ipow(cplx z, int n) {
    cplx r = 1.0;
    const cplx b = n >= 0 ? z : 1.0 / z;
    for (int k = std::abs(n); k > 0; --k) r *= b;
    return r;
}

}  // namespace

Mat mode_at_inf(const RationalMatrixFunction& F, int r) {
    if (r == 0) return F.constant;
    Mat acc = Mat::Zero(F.dim, F.dim);
    // (u-p)^{-n} = sum_{m>=0} C(n+m-1, m) p^m u^{-n-m}
    for (const auto& pl : F.poles)
        for (int n = 1; n <= (int)pl.coef.size() && n <= r; ++n)
            acc += binom(r - 1, n - 1) * ipow(pl.loc, r - n) * pl.coef[n - 1];
    return acc;
}

Mat mode_at_zero(const RationalMatrixFunction& F, int r) {
    Mat acc = r == 0 ? F.constant : Mat::Zero(F.dim, F.dim).eval();
    // (u-p)^{-n} = (-1)^n sum_{m>=0} C(n+m-1, m) p^{-n-m} u^m
    for (const auto& pl : F.poles)
        for (int n = 1; n <= (int)pl.coef.size(); ++n) {
            const double sgn = (n % 2) ? -1.0 : 1.0;
            acc += sgn * binom(n + r - 1, r) * ipow(pl.loc, -(n + r)) * pl.coef[n - 1];
        }
    return acc;
}

Mat QLoopRep::psi_plus(int i, int r) const { return mode_at_inf(psi[i], r); }
Mat QLoopRep::psi_minus(int i, int r) const { return mode_at_zero(psi[i], r); }

Mat QLoopRep::x_mode(int i, bool plus, int k) const {
    const RationalMatrixFunction& f = plus ? xp[i] : xm[i];
    if (k >= 0) return mode_at_inf(f, k);
    return (-mode_at_zero(f, -k)).eval();
}

QLoopRep ql_trivial(const CartanData& cd, const GlobalParams& par) {
    QLoopRep t;
    t.cartan = cd;
    t.par = par;
    t.dim = 1;
    for (int i = 0; i < cd.rank; ++i) {
        t.psi.push_back(RationalMatrixFunction::identity(1));
        t.xp.push_back(RationalMatrixFunction::zero(1));
        t.xm.push_back(RationalMatrixFunction::zero(1));
    }
    return t;
}

QLoopRep ql_scale(const QLoopRep& V, cplx alpha) {
    QLoopRep r = V;
    for (int i = 0; i < V.rank(); ++i) {
        r.psi[i] = V.psi[i].dilated(alpha);
        r.xp[i] = V.xp[i].dilated(alpha);
        r.xm[i] = V.xm[i].dilated(alpha);
    }
    for (auto& p : r.sigma) p *= alpha;
    return r;
}

namespace {

// sample points on circles away from the pole support
std::vector<cplx> sample_ring(const std::vector<cplx>& avoid, int n) {
    double rad = 1.0;
    for (const cplx p : avoid) rad = std::max(rad, std::abs(p));
    std::vector<cplx> pts;
    int m = 0;
    while ((int)pts.size() < n) {
        const cplx z = (1.37 + 0.41 * (m % 5)) * rad * std::polar(1.0, 2.399 * (double)(m + 1));
        ++m;
        bool ok = true;
        for (const cplx p : avoid)
            if (std::abs(z - p) < 1e-3 * rad) ok = false;
        if (ok) pts.push_back(z);
    }
    return pts;
}

double rel(const Mat& resid, double scale) { return resid.norm() / std::max(scale, 1e-30); }

}  // namespace

RelationReport verify_ql_relations(const QLoopRep& V, int nsamples) {
    RelationReport rep;
    const int rk = V.rank();
    const auto zs = sample_ring(V.sigma, nsamples);
    const auto ws = sample_ring(V.sigma, nsamples + 1);

    for (int i = 0; i < rk; ++i) {
        const cplx qi = V.q_node(i);
        const Mat P0 = V.psi_plus(i, 0), Q0 = V.psi_minus(i, 0);
        rep.add("psi0 unit", (P0 * Q0 - Mat::Identity(V.dim, V.dim)).norm());
        const Mat br = V.x_mode(i, true, 0) * V.x_mode(i, false, 0) -
                       V.x_mode(i, false, 0) * V.x_mode(i, true, 0);
        const Mat rhs = (P0 - Q0) / (qi - 1.0 / qi);
        rep.add("mode anchor", rel(br - rhs, rhs.norm()));

        for (int j = 0; j < rk; ++j) {
            const double a = (double)V.cartan.a[i][j];
            for (const cplx z : zs)
                for (const cplx w : ws) {
                    const Mat Pi = V.psi[i].eval(z), Pj = V.psi[j].eval(w);
                    rep.add("psi commute", rel(Pi * Pj - Pj * Pi, Pi.norm() * Pj.norm()));
                }
            for (int sg : {+1, -1}) {
                const cplx t = V.par.q_pow(sg * (double)V.cartan.d[i] * a);
                const RationalMatrixFunction& Xj = sg > 0 ? V.xp[j] : V.xm[j];
                const RationalMatrixFunction& Xi = sg > 0 ? V.xp[i] : V.xm[i];
                const Mat Xi0 = V.x_mode(i, sg > 0, 0), Xj0 = V.x_mode(j, sg > 0, 0);
                for (const cplx z : zs) {
                    const Mat Xz = Xj.eval(z);
                    rep.add("psi0 conj",
                            rel(P0 * Xz - t * Xz * P0, std::abs(t) * Xz.norm() * P0.norm()));
                }
                for (const cplx z : zs)
                    for (const cplx w : ws) {
                        const Mat Pz = V.psi[i].eval(z), Xw = Xj.eval(w);
                        const Mat Xtz = Xj.eval(z / t);
                        const Mat lhs = (z - t * w) * Pz * Xw;
                        const Mat rhs3 = (t * z - w) * Xw * Pz -
                                         (t - 1.0 / t) * t * w * Xtz * Pz;
                        rep.add("psi-x exchange",
                                rel(lhs - rhs3, std::abs(z - t * w) * Pz.norm() * Xw.norm()));

                        const Mat Xz2 = Xi.eval(z);
                        const Mat l4 = (z - t * w) * Xz2 * Xw - (t * z - w) * Xw * Xz2;
                        const Mat r4 = z * (Xi0 * Xw - t * Xw * Xi0) +
                                       w * (Xj0 * Xz2 - t * Xz2 * Xj0);
                        const double sc4 = std::max(
                            {std::abs(z - t * w) * Xz2.norm() * Xw.norm(),
                             std::abs(z) * Xi0.norm() * Xw.norm(), 1e-30});
                        rep.add("x-x exchange", rel(l4 - r4, sc4));
                    }
            }
            for (const cplx z : zs)
                for (const cplx w : ws) {
                    const Mat Xpz = V.xp[i].eval(z), Xmw = V.xm[j].eval(w);
                    Mat lhs = (z - w) * (Xpz * Xmw - Xmw * Xpz);
                    Mat rhs5 = Mat::Zero(V.dim, V.dim);
                    if (i == j)
                        rhs5 = (z * V.psi[i].eval(w) - w * V.psi[i].eval(z) -
                                (z - w) * V.psi[i].eval(0.0)) /
                               (qi - 1.0 / qi);
                    const double sc5 =
                        std::max(std::abs(z - w) * Xpz.norm() * Xmw.norm(),
                                 std::abs(z) * V.psi[i].eval(w).norm() / std::abs(qi - 1.0 / qi));
                    rep.add("x+x- bracket", rel(lhs - rhs5, sc5));
                }
        }
    }
    return rep;
}

QLoopRep qtensor(const QLoopRep& V, const QLoopRep& W, cplx zeta) {
    const int dV = V.dim, dW = W.dim;
    double scale = 1.0;
    for (const cplx p : W.sigma) scale = std::max(scale, std::abs(p));
    for (const cplx p1 : V.sigma)
        for (const cplx p2 : W.sigma)
            if (std::abs(zeta * p1 - p2) < 1e-6 * scale)
                throw std::invalid_argument("qtensor: pole supports collide");

    QLoopRep out;
    out.cartan = V.cartan;
    out.par = V.par;
    out.dim = dV * dW;
    for (const cplx p : V.sigma) out.sigma.push_back(zeta * p);
    for (const cplx p : W.sigma) out.sigma.push_back(p);

    // residue identity for the kernel z w^{-1} / (z - w) = 1/w + 1/(z-w):
    // a pole of the integrand with principal part G_n (w - p)^{-n} contributes
    // G_n [(z - p)^{-n} + (-1)^{n-1} p^{-n}]
    auto add_kernel_residues = [](RationalMatrixFunction& acc,
                                  const RationalMatrixFunction& G,
                                  const std::vector<cplx>& enclosed) {
        for (const cplx p : enclosed) {
            const int ord = G.pole_order(p);
            if (ord == 0) continue;
            const auto co = G.laurent(p, -ord, -1);
            for (int n = 1; n <= ord; ++n) {
                const Mat& Gn = co[ord - n];
                acc.add_pole_term(p, n, Gn);
                const double sgn = (n % 2) ? 1.0 : -1.0;
                acc.constant += sgn * ipow(p, -n) * Gn;
            }
        }
    };

    for (int i = 0; i < V.rank(); ++i) {
        const RationalMatrixFunction psiV = V.psi[i].dilated(zeta).kron_left(dW);
        const RationalMatrixFunction psiW = W.psi[i].kron_right(dV);
        RationalMatrixFunction psi = psiV * psiW;
        psi.prune();
        out.psi.push_back(psi);

        RationalMatrixFunction xp = V.xp[i].dilated(zeta).kron_left(dW);
        const RationalMatrixFunction Gp = psiV * W.xp[i].kron_right(dV);
        add_kernel_residues(xp, Gp, W.xp[i].pole_locations());
        xp.prune();
        out.xp.push_back(xp);

        RationalMatrixFunction xm = W.xm[i].kron_right(dV);
        const RationalMatrixFunction xmV = V.xm[i].dilated(zeta).kron_left(dW);
        const RationalMatrixFunction Gm = xmV * psiW;
        add_kernel_residues(xm, Gm, xmV.pole_locations());
        xm.prune();
        out.xm.push_back(xm);
    }
    return out;
}

}  // namespace yq
