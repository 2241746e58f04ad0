#include "yq/rmatrix.hpp"

#include <cmath>
#include <stdexcept>

#include <unsupported/Eigen/MatrixFunctions>

#include "yq/drinfeld.hpp"

namespace yq {

cplx XiSpectrum::xi0_eigen(int node, int k, cplx hbar) const {
    cplx s = 0.0;
    for (const cplx p : poles[node][k]) s += p;
    for (const cplx z : zeros[node][k]) s -= z;
    return s / hbar;
}

XiSpectrum xi_spectrum(const YangianRep& V) {
    std::vector<const RationalMatrixFunction*> family;
    double rad = 1.0;
    for (const auto& f : V.xi) {
        family.push_back(&f);
        for (const auto& pl : f.poles) rad = std::max(rad, std::abs(pl.loc));
    }
    std::vector<cplx> samples;
    for (int k = 0; k < 5; ++k)
        samples.push_back((2.0 * rad + 1.7) * std::exp(cplx(0.1 + 0.13 * k, 1.1 * k + 0.37)));
    const CommutingBasis B = common_eigenbasis(family, samples);

    XiSpectrum sp;
    sp.dim = V.dim;
    sp.P = B.P;
    sp.Pinv = B.Pinv;
    sp.zeros.resize(V.rank());
    sp.poles.resize(V.rank());
    for (int i = 0; i < V.rank(); ++i) {
        sp.zeros[i].resize(V.dim);
        sp.poles[i].resize(V.dim);
        for (int k = 0; k < V.dim; ++k) {
            const ScalarRat lam = diagonal_entry(V.xi[i], B, k);
            if (std::abs(lam.constant - 1.0) > 1e-8)
                throw std::runtime_error("xi eigenvalue not 1 at infinity");
            sp.zeros[i][k] = scalar_zeros(lam);
            for (const auto& pl : lam.poles)
                for (size_t m = 0; m < pl.coef.size(); ++m) sp.poles[i][k].push_back(pl.loc);
            if (sp.zeros[i][k].size() != sp.poles[i][k].size())
                throw std::runtime_error("xi eigenvalue zero/pole count mismatch");
        }
    }
    return sp;
}

Mat omega_h(const YangianRep& V1, const YangianRep& V2) {
    const Eigen::MatrixXd binv = omega_h_matrix(V1.cartan);
    Mat om = Mat::Zero(V1.dim * V2.dim, V1.dim * V2.dim);
    for (int i = 0; i < V1.rank(); ++i)
        for (int j = 0; j < V2.rank(); ++j)
            om += binv(i, j) * kron(V1.xi0(i), V2.xi0(j));
    return om;
}

Mat AbelianOp::eval(cplx s) const {
    Vec d(dim());
    for (int k = 0; k < dim(); ++k) d(k) = comp[k].eval(s);
    return P * d.asDiagonal() * Pinv;
}

AbelianOp build_A(const YangianRep& V1, const YangianRep& V2) {
    const XiSpectrum s1 = xi_spectrum(V1), s2 = xi_spectrum(V2);
    const auto C = invert_t_cartan(V1.cartan);
    const int l = V1.cartan.l;
    const cplx h = V1.par.hbar;
    const int n = V1.rank();

    AbelianOp A;
    A.d1 = V1.dim;
    A.d2 = V2.dim;
    A.P = kron(s1.P, s2.P);
    A.Pinv = kron(s1.Pinv, s2.Pinv);
    A.comp.resize(A.dim());

    for (int k1 = 0; k1 < V1.dim; ++k1)
        for (int k2 = 0; k2 < V2.dim; ++k2) {
            RatioProduct& rp = A.comp[k1 * V2.dim + k2];
            for (int i = 0; i < n; ++i)
                for (int j = 0; j < n; ++j)
                    for (const auto& [r, c] : C[i][j].terms()) {
                        const cplx off = 0.5 * (double)(l + r) * h;
                        auto add = [&](cplx x, int sx) {
                            for (const cplx y : s2.zeros[j][k2])
                                rp.push(y - x - off, -(int)c * sx);
                            for (const cplx y : s2.poles[j][k2])
                                rp.push(y - x - off, (int)c * sx);
                        };
                        for (const cplx x : s1.zeros[i][k1]) add(x, +1);
                        for (const cplx x : s1.poles[i][k1]) add(x, -1);
                    }
            if (rp.degree() != 0)
                throw std::runtime_error("abelian coefficient matrix: degree mismatch");
        }
    return A;
}

Mat eval_A_quadrature(const YangianRep& V1, const YangianRep& V2, cplx s) {
    const auto C = invert_t_cartan(V1.cartan);
    const int l = V1.cartan.l;
    const cplx h = V1.par.hbar;
    const int n = V1.rank();
    const int D = V1.dim * V2.dim;

    std::vector<StarLog> sl1, sl2;
    std::vector<RationalMatrixFunction> tp1;
    for (int i = 0; i < n; ++i) {
        sl1.push_back(star_log(V1.xi[i], true));
        tp1.push_back(sl1.back().log_derivative());
        sl2.push_back(star_log(V2.xi[i], true));
    }

    Mat E = Mat::Zero(D, D);
    for (int i = 0; i < n; ++i) {
        // contour centers: all zeros and poles of the xi_i eigenvalues on V1
        std::vector<cplx> centers;
        auto add_center = [&centers](cplx z) {
            for (const cplx c : centers)
                if (std::abs(c - z) < 1e-9) return;
            centers.push_back(z);
        };
        for (int k = 0; k < V1.dim; ++k) {
            for (const cplx z : sl1[i].zeros[k]) add_center(z);
            for (const cplx p : sl1[i].poles[k]) add_center(p);
        }
        // radius: stay clear of other centers and of the singularities of the
        // shifted second-leg logs
        double radius = 0.4;
        for (size_t a = 0; a < centers.size(); ++a)
            for (size_t b = 0; b < centers.size(); ++b)
                if (a != b && std::abs(centers[a] - centers[b]) > 1e-9)
                    radius = std::min(radius, 0.4 * std::abs(centers[a] - centers[b]));
        for (int j = 0; j < n; ++j)
            for (const auto& [r, c] : C[i][j].terms()) {
                (void)c;
                const cplx off = s + 0.5 * (double)(l + r) * h;
                for (int k = 0; k < V2.dim; ++k)
                    for (const cplx w : sl2[j].zeros[k])
                        for (const cplx ctr : centers)
                            radius = std::min(radius, 0.4 * std::abs(w - off - ctr));
                for (int k = 0; k < V2.dim; ++k)
                    for (const cplx w : sl2[j].poles[k])
                        for (const cplx ctr : centers)
                            radius = std::min(radius, 0.4 * std::abs(w - off - ctr));
            }
        if (radius < 1e-6)
            throw std::runtime_error("quadrature contour pinched; shift parameter too close");

        for (int j = 0; j < n; ++j)
            for (const auto& [r, c] : C[i][j].terms()) {
                const cplx off = s + 0.5 * (double)(l + r) * h;
                const auto f = [&](cplx v) {
                    return kron(tp1[i].eval(v), sl2[j].eval_additive(v + off));
                };
                E += (double)c * contour_integral_quad(f, centers, radius);
            }
    }
    return (-E).exp();
}

cplx AbelianR::eigen_log(int k, cplx s) const {
    return eps > 0 ? -comp[k].log_at(s) : comp[k].log_at(s);
}

Mat AbelianR::eval(cplx s) const {
    Vec d(dim());
    for (int k = 0; k < dim(); ++k) d(k) = std::exp(eigen_log(k, s));
    return P * d.asDiagonal() * Pinv;
}

AbelianR build_R0(const YangianRep& V1, const YangianRep& V2, int eps, int N) {
    AbelianOp A = build_A(V1, V2);
    AbelianR R;
    R.d1 = A.d1;
    R.d2 = A.d2;
    R.eps = eps;
    R.step = (double)V1.cartan.l * V1.par.hbar;
    R.P = A.P;
    R.Pinv = A.Pinv;
    R.afac = A.comp;
    for (int k = 0; k < R.dim(); ++k)
        R.comp.push_back(eps > 0
                             ? ScalarCanonical::from_ratio(R.afac[k], R.step, Side::right, N, 0)
                             : ScalarCanonical::from_ratio(R.afac[k], R.step, Side::left, N));
    return R;
}

Mat AbelianQKZ2::phi_plus(cplx s) const {
    Vec d(dim);
    for (int k = 0; k < dim; ++k) d(k) = std::exp(-right[k].log_at(s));
    return P * d.asDiagonal() * Pinv;
}

Mat AbelianQKZ2::phi_minus(cplx s) const {
    Vec d(dim);
    for (int k = 0; k < dim; ++k) d(k) = std::exp(left[k].log_at(s));
    return P * d.asDiagonal() * Pinv;
}

Mat AbelianQKZ2::twist(cplx s) const {
    Vec d(dim);
    for (int k = 0; k < dim; ++k) d(k) = std::exp(right[k].log_at(s + 1.0));
    return P * d.asDiagonal() * Pinv;
}

cplx AbelianQKZ2::connection_log(int k, cplx s) const {
    const auto a = [this, k](cplx u) { return std::exp(R->eigen_log(k, u)); };
    return two_sided_log(a, M, c1[k], right[k].l2(), right[k].l3(), right[k].l4(), s);
}

Mat AbelianQKZ2::connection(cplx s) const {
    Vec d(dim);
    for (int k = 0; k < dim; ++k) d(k) = std::exp(connection_log(k, s));
    return P * d.asDiagonal() * Pinv;
}

AbelianQKZ2 build_qkz2(const AbelianR& R, const Mat& omega, cplx hbar, int N, int M) {
    AbelianQKZ2 q;
    q.dim = R.dim();
    q.P = R.P;
    q.Pinv = R.Pinv;
    q.R = &R;
    q.M = M;
    const Mat od = R.Pinv * omega * R.P;
    const cplx del = R.step;
    for (int k = 0; k < q.dim; ++k) {
        // both regularizations share the asymptotic expansion of log R; its
        // coefficients follow from the Hurwitz zeta expansion applied to the
        // log expansion c_n of the coefficient operator eigenvalue
        const cplx c2 = R.afac[k].c(2), c3 = R.afac[k].c(3);
        const cplx c4 = R.afac[k].c(4), c5 = R.afac[k].c(5);
        const cplx c1 = -c2 / del;
        const cplx l2 = -c2 / 2.0 - c3 / (2.0 * del);
        const cplx l3 = -c2 * del / 6.0 - c3 / 2.0 - c4 / (3.0 * del);
        const cplx l4 = -c3 * del / 4.0 - c4 / 2.0 - c5 / (4.0 * del);
        if (std::abs(c1 - hbar * od(k, k)) > 1e-8)
            throw std::runtime_error("qkz2: residue coefficient mismatch");
        q.c1.push_back(c1);
        const auto a = [&R, k](cplx u) { return std::exp(R.eigen_log(k, u)); };
        q.right.emplace_back(a, 1.0, Side::right, N, c1, l2, l3, l4, 0);
        q.left.emplace_back(a, 1.0, Side::left, N, c1, l2, l3, l4, 1);
    }
    return q;
}

Mat flip_op(int d1, int d2) {
    Mat f = Mat::Zero(d1 * d2, d1 * d2);
    for (int a = 0; a < d1; ++a)
        for (int b = 0; b < d2; ++b) f(b * d1 + a, a * d2 + b) = 1.0;
    return f;
}

Mat embed_12(const Mat& m, int d1, int d2, int d3) {
    return kron(m, Mat::Identity(d3, d3));
}

Mat embed_23(const Mat& m, int d1, int d2, int d3) {
    return kron(Mat::Identity(d1, d1), m);
}

Mat embed_13(const Mat& m, int d1, int d2, int d3) {
    const int D = d1 * d2 * d3;
    Mat out = Mat::Zero(D, D);
    for (int a = 0; a < d1; ++a)
        for (int ap = 0; ap < d1; ++ap)
            for (int b = 0; b < d2; ++b)
                for (int c = 0; c < d3; ++c)
                    for (int cp = 0; cp < d3; ++cp)
                        out((a * d2 + b) * d3 + c, (ap * d2 + b) * d3 + cp) =
                            m(a * d3 + c, ap * d3 + cp);
    return out;
}

double intertwiner_defect(const std::function<Mat(cplx)>& M,
                          const YangianRep& V1, const YangianRep& V2, cplx s0,
                          int nsamples) {
    const YangianRep W = shift_rep(V1, s0);
    const YangianRep Ta = ytensor(W, V2, 0.0);
    const YangianRep Tb = ytensor(V2, W, 0.0);
    const Mat op = flip_op(V1.dim, V2.dim) * M(s0);

    double rad = 1.0;
    for (const cplx p : spectral_support(Ta)) rad = std::max(rad, std::abs(p));
    double worst = 0.0;
    for (int t = 0; t < nsamples; ++t) {
        const cplx u = (1.9 * rad + 2.3) * std::exp(cplx(0.0, 2.39996 * t + 0.71));
        for (int i = 0; i < V1.rank(); ++i) {
            const RationalMatrixFunction* fa[3] = {&Ta.xi[i], &Ta.xp[i], &Ta.xm[i]};
            const RationalMatrixFunction* fb[3] = {&Tb.xi[i], &Tb.xp[i], &Tb.xm[i]};
            for (int w = 0; w < 3; ++w) {
                const Mat lhs = op * fa[w]->eval(u);
                const Mat rhs = fb[w]->eval(u) * op;
                const double scale = std::max({lhs.norm(), rhs.norm(), 1e-3});
                worst = std::max(worst, (lhs - rhs).norm() / scale);
            }
        }
    }
    return worst;
}

}  // namespace yq
