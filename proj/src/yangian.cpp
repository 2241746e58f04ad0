#include "yq/yangian.hpp"

#include <cmath>
#include <stdexcept>

namespace yq {

namespace {
// d^k/du^k u^r evaluated at p
cplx monomial_deriv(cplx p, int r, int k) {
    if (k > r) return 0.0;
    double c = 1.0;
    for (int i = 0; i < k; ++i) c *= (r - i);
    return c * std::pow(p, cplx(double(r - k)));
}

Mat field_mode(const RationalMatrixFunction& F, int r, cplx hbar) {
    Mat m = contour_integral(F, F.pole_locations(),
                             [r](cplx p, int k) { return monomial_deriv(p, r, k); });
    return m / hbar;
}
}  // namespace

Mat YangianRep::xi0(int i) const { return mode_xi(i, 0); }
Mat YangianRep::mode_xi(int i, int r) const { return field_mode(xi[i], r, par.hbar); }
Mat YangianRep::mode_xp(int i, int r) const { return field_mode(xp[i], r, par.hbar); }
Mat YangianRep::mode_xm(int i, int r) const { return field_mode(xm[i], r, par.hbar); }

YangianRep ev_sl2(const GlobalParams& par, cplx a) {
    YangianRep V;
    V.cartan = build_cartan('A', 1);
    V.par = par;
    V.dim = 2;
    const cplx h = par.hbar;
    Mat diag = Mat::Zero(2, 2);
    diag(0, 0) = h;
    diag(1, 1) = -h;
    RationalMatrixFunction xi(Mat::Identity(2, 2));
    xi.add_pole_term(a, 1, diag);
    Mat e12 = Mat::Zero(2, 2), e21 = Mat::Zero(2, 2);
    e12(0, 1) = 1;
    e21(1, 0) = 1;
    RationalMatrixFunction xp = RationalMatrixFunction::zero(2);
    xp.add_pole_term(a, 1, h * e12);
    RationalMatrixFunction xm = RationalMatrixFunction::zero(2);
    xm.add_pole_term(a, 1, h * e21);
    V.xi = {xi};
    V.xp = {xp};
    V.xm = {xm};
    V.sigma = {a, a - h, a + h};
    return V;
}

YangianRep shift_rep(const YangianRep& V, cplx a) {
    YangianRep W = V;
    for (auto& f : W.xi) f = f.shifted(a);
    for (auto& f : W.xp) f = f.shifted(a);
    for (auto& f : W.xm) f = f.shifted(a);
    for (auto& s : W.sigma) s += a;
    return W;
}

std::vector<cplx> spectral_support(const YangianRep& V) {
    std::vector<cplx> s;
    auto push = [&](cplx p) {
        for (auto& q : s)
            if (std::abs(q - p) < 1e-9) return;
        s.push_back(p);
    };
    for (int i = 0; i < V.rank(); ++i) {
        for (auto& p : V.xi[i].pole_locations()) push(p);
        for (auto& p : V.xp[i].pole_locations()) push(p);
        for (auto& p : V.xm[i].pole_locations()) push(p);
        // poles of xi^{-1} = zeros of the xi eigenvalues
        StarLog sl = star_log(V.xi[i], true);
        for (auto& zs : sl.zeros)
            for (auto& z : zs) push(z);
    }
    return s;
}

YangianRep from_low_modes(const CartanData& cd, const GlobalParams& par,
                          const std::vector<Mat>& xi0, const std::vector<Mat>& t1,
                          const std::vector<Mat>& xp0, const std::vector<Mat>& xm0) {
    YangianRep V;
    V.cartan = cd;
    V.par = par;
    V.dim = (int)xi0.at(0).rows();
    const cplx h = par.hbar;
    for (int i = 0; i < cd.rank; ++i) {
        Eigen::ComplexEigenSolver<Mat> es(t1[i]);
        if (es.info() != Eigen::Success) throw std::runtime_error("from_low_modes: eigensolver failed");
        Mat P = es.eigenvectors();
        Eigen::FullPivLU<Mat> lu(P);
        if (!lu.isInvertible()) throw std::runtime_error("from_low_modes: t1 not diagonalizable");
        Mat Pi = lu.inverse();
        Vec lam = es.eigenvalues();
        const double d2 = 2.0 * cd.d[i];
        // x^pm(u) = hbar sum_{ab} (u mp mu_ab/(2 d_i))^{-1} components of x0
        auto build = [&](const Mat& x0, double sign) {
            Mat Xt = Pi * x0 * P;
            RationalMatrixFunction F = RationalMatrixFunction::zero(V.dim);
            for (int a = 0; a < V.dim; ++a)
                for (int b = 0; b < V.dim; ++b) {
                    if (std::abs(Xt(a, b)) < 1e-14) continue;
                    const cplx mu = lam(a) - lam(b);
                    Mat comp = P.col(a) * (Xt(a, b) * Pi.row(b));
                    F.add_pole_term(sign * mu / d2, 1, h * comp);
                }
            F.prune();
            return F;
        };
        RationalMatrixFunction fxp = build(xp0[i], +1.0);
        RationalMatrixFunction fxm = build(xm0[i], -1.0);
        // xi(u) = 1 + [x^+(u), x^-_0]
        // commutator of the field (hbar included) with the bare mode x^-_0
        RationalMatrixFunction fxi = fxp.rmul(xm0[i]) - fxp.lmul(xm0[i]);
        fxi.constant += Mat::Identity(V.dim, V.dim);
        fxi.prune();
        V.xp.push_back(std::move(fxp));
        V.xm.push_back(std::move(fxm));
        V.xi.push_back(std::move(fxi));
    }
    V.sigma = spectral_support(V);
    return V;
}

void RelationReport::add(const std::string& name, double v) {
    max_residual = std::max(max_residual, v);
    for (auto& [n, w] : items) {
        if (n == name) {
            w = std::max(w, v);
            return;
        }
    }
    items.emplace_back(name, v);
}

RelationReport verify_relations(const YangianRep& V, int nsamples) {
    RelationReport rep;
    const cplx h = V.par.hbar;
    double rad = 1.0;
    for (auto& s : V.sigma) rad = std::max(rad, std::abs(s));
    std::vector<cplx> us, vs;
    for (int k = 0; k < nsamples; ++k) {
        us.push_back((1.7 * rad + 2.0) * std::exp(cplx(0, 0.7 + 2.39996 * k)));
        vs.push_back((2.3 * rad + 3.1) * std::exp(cplx(0, 1.3 + 2.39996 * k)));
    }
    auto relnorm = [](const Mat& resid, double scale) { return resid.norm() / std::max(1.0, scale); };

    for (int i = 0; i < V.rank(); ++i) {
        // fields are regular at infinity with the right limits
        rep.add("xi(inf)=1", (V.xi[i].constant - Mat::Identity(V.dim, V.dim)).norm());
        rep.add("x(inf)=0", V.xp[i].constant.norm() + V.xm[i].constant.norm());
        for (int j = 0; j < V.rank(); ++j) {
            const cplx a = h * double(V.cartan.b(i, j)) / 2.0;
            Mat Xi0 = V.xi0(i);
            for (int k = 0; k < nsamples; ++k) {
                const cplx u = us[k], v = vs[k];
                Mat xiu = V.xi[i].eval(u), xiv = V.xi[j].eval(v);
                rep.add("Y1", relnorm(xiu * xiv - xiv * xiu, xiu.norm() * xiv.norm()));
                for (int sg : {+1, -1}) {
                    const auto& X = sg > 0 ? V.xp : V.xm;
                    const Mat x0j = sg > 0 ? V.mode_xp(j, 0) : V.mode_xm(j, 0);
                    const Mat x0i = sg > 0 ? V.mode_xp(i, 0) : V.mode_xm(i, 0);
                    const cplx sa = double(sg) * a;
                    Mat xjv = X[j].eval(v), xju = X[j].eval(u - sa), xiu2 = X[i].eval(u);
                    // (Y2)
                    rep.add("Y2", relnorm(Xi0 * xjv - xjv * Xi0 - double(sg * V.cartan.b(i, j)) * xjv,
                                          Xi0.norm() * xjv.norm()));
                    // (Y3)
                    Mat r3 = (u - v - sa) * (xiu * xjv) - (u - v + sa) * (xjv * xiu) +
                             2.0 * sa * (xju * xiu);
                    rep.add("Y3", relnorm(r3, std::abs(u - v) * xiu.norm() * xjv.norm()));
                    // (Y4)
                    Mat xiuX = X[i].eval(u);
                    Mat r4 = (u - v - sa) * (xiuX * xjv) - (u - v + sa) * (xjv * xiuX) -
                             h * ((x0i * xjv - xjv * x0i) - (xiuX * x0j - x0j * xiuX));
                    rep.add("Y4", relnorm(r4, std::abs(u - v) * xiuX.norm() * xjv.norm()));
                }
                // (Y5)
                Mat xpu = V.xp[i].eval(u), xmv = V.xm[j].eval(v);
                Mat r5 = (u - v) * (xpu * xmv - xmv * xpu);
                if (i == j) r5 += h * (V.xi[i].eval(u) - V.xi[i].eval(v));
                rep.add("Y5", relnorm(r5, std::abs(u - v) * xpu.norm() * xmv.norm() + 1.0));
            }
        }
    }
    return rep;
}

bool is_noncongruent(const std::vector<const YangianRep*>& reps, double tol) {
    std::vector<cplx> all;
    for (auto* V : reps)
        for (auto& s : V->sigma) all.push_back(s);
    for (auto& p : all)
        for (auto& q : all) {
            const cplx d = p - q;
            const double n = std::round(d.real());
            if (n != 0.0 && std::abs(d - cplx(n, 0)) < tol) return false;
        }
    return true;
}

}  // namespace yq
